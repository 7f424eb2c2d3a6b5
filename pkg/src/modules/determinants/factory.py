from fractions import Fraction
from typing import Dict, Optional, Tuple, Type

from pydantic import ValidationError

from src.common.exceptions import DomainError, MalformedInputError, PropertyViolation
from src.common.logger import get_algebra_logger
from src.modules.exterior_algebra.models import Matrix
from src.modules.index_calculus.words import Combination
from src.modules.scalars.rational import format_rational

from .base import BaseDeterminantEngine, DeterminantEngine, EngineConfig
from .engines import cauchy_binet, det_bareiss, det_laplace, det_leibniz

logger = get_algebra_logger()


class LeibnizConfig(EngineConfig):
    method: str = "leibniz"
    force: bool = False
    max_size: Optional[int] = None


class LaplaceConfig(EngineConfig):
    method: str = "laplace"
    rows: Tuple[int, ...] = (1,)


class BinetCheckConfig(EngineConfig):
    method: str = "binet-check"


class BareissConfig(EngineConfig):
    method: str = "bareiss"


class LeibnizEngine(BaseDeterminantEngine):
    def compute(self, matrix: Matrix) -> Fraction:
        return det_leibniz(
            matrix, force=self.config.force, max_size=self.config.max_size
        )

    def get_method_info(self) -> Dict:
        return {**super().get_method_info(), "force": self.config.force}


class LaplaceEngine(BaseDeterminantEngine):
    def compute(self, matrix: Matrix) -> Fraction:
        return det_laplace(matrix, Combination(matrix.rows, self.config.rows))

    def get_method_info(self) -> Dict:
        return {**super().get_method_info(), "rows": list(self.config.rows)}


class BinetCheckEngine(BaseDeterminantEngine):
    """det(A) = det(A . I) through Cauchy-Binet, checked against Laplace on row 1."""

    def compute(self, matrix: Matrix) -> Fraction:
        witnessed = cauchy_binet(matrix, Matrix.identity(matrix.rows))
        if matrix.rows == 0:
            return witnessed
        expected = det_laplace(matrix, Combination(matrix.rows, (1,)))
        if witnessed != expected:
            raise PropertyViolation(
                f"Cauchy-Binet gives {format_rational(witnessed)}, "
                f"Laplace gives {format_rational(expected)}"
            )
        return witnessed


class BareissEngine(BaseDeterminantEngine):
    def compute(self, matrix: Matrix) -> Fraction:
        return det_bareiss(matrix)


class DeterminantEngineFactory:
    """
    Factory for creating determinant engine instances
    """

    _engine_registry: Dict[str, Type[BaseDeterminantEngine]] = {
        "leibniz": LeibnizEngine,
        "laplace": LaplaceEngine,
        "binet-check": BinetCheckEngine,
        "bareiss": BareissEngine,
    }

    _config_registry: Dict[str, Type[EngineConfig]] = {
        "leibniz": LeibnizConfig,
        "laplace": LaplaceConfig,
        "binet-check": BinetCheckConfig,
        "bareiss": BareissConfig,
    }

    _descriptions: Dict[str, str] = {
        "leibniz": "Signed sum over injections (the definition)",
        "laplace": "Generalized Laplace expansion along a row set",
        "binet-check": "Cauchy-Binet witness cross-checked against Laplace",
        "bareiss": "Fraction-free elimination (oracle only)",
    }

    @classmethod
    def register_engine(
        cls,
        method: str,
        engine_class: Type[BaseDeterminantEngine],
        config_class: Type[EngineConfig],
        description: str = "",
    ) -> None:
        """
        Register a new engine type

        Args:
            method: String identifier for the method
            engine_class: Engine implementation class
            config_class: Configuration class for the engine
            description: One-line summary shown by ``info``
        """
        cls._engine_registry[method] = engine_class
        cls._config_registry[method] = config_class
        cls._descriptions[method] = description

    @classmethod
    def create_engine(cls, method: str, config: Optional[Dict] = None) -> DeterminantEngine:
        """
        Create an engine instance based on method and config

        Raises:
            DomainError: If the method is not supported
            MalformedInputError: If the configuration does not validate
        """
        if method not in cls._engine_registry:
            raise DomainError(
                f"Unsupported determinant method: {method}. "
                f"Available methods: {sorted(cls._engine_registry)}"
            )
        engine_class = cls._engine_registry[method]
        config_class = cls._config_registry[method]
        try:
            engine_config = config_class(method=method, **(config or {}))
        except ValidationError as e:
            raise MalformedInputError(f"Invalid {method} configuration: {e}")
        logger.debug("Created %s engine", method)
        return engine_class(engine_config)

    @classmethod
    def get_supported_engines(cls) -> Dict[str, str]:
        return dict(cls._descriptions)


def get_engine(method: str = "leibniz", config: Optional[Dict] = None) -> DeterminantEngine:
    return DeterminantEngineFactory.create_engine(method, config)
