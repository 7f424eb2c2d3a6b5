from fractions import Fraction

import pytest

from src.common.exceptions import (
    ComplexityRefusal,
    DomainError,
    MalformedInputError,
    PropertyViolation,
)
from src.modules.determinants.base import BaseDeterminantEngine, EngineConfig
from src.modules.determinants.factory import (
    BareissEngine,
    BinetCheckEngine,
    DeterminantEngineFactory,
    LaplaceConfig,
    LaplaceEngine,
    LeibnizEngine,
    get_engine,
)
from src.modules.exterior_algebra.models import Matrix


# Fixture for a concrete engine implementation
@pytest.fixture
def trace_engine_class():
    """An engine returning the trace, registered only for the duration of a test"""

    class TraceEngine(BaseDeterminantEngine):
        def compute(self, matrix):
            return sum((matrix.entry(i, i) for i in range(1, matrix.rows + 1)), Fraction(0))

    yield TraceEngine
    for registry in (
        DeterminantEngineFactory._engine_registry,
        DeterminantEngineFactory._config_registry,
        DeterminantEngineFactory._descriptions,
    ):
        registry.pop("trace", None)


# Tests for DeterminantEngineFactory
def test_create_known_engines():
    """Each registered method maps to its engine class"""
    assert isinstance(get_engine("leibniz"), LeibnizEngine)
    assert isinstance(get_engine("laplace"), LaplaceEngine)
    assert isinstance(get_engine("binet-check"), BinetCheckEngine)
    assert isinstance(get_engine("bareiss"), BareissEngine)


def test_unknown_method():
    with pytest.raises(DomainError) as excinfo:
        get_engine("gauss")
    assert "Available methods" in str(excinfo.value)


def test_invalid_config():
    """Config validation failures surface as malformed input"""
    with pytest.raises(MalformedInputError):
        get_engine("laplace", {"rows": "first"})


def test_supported_engines_have_descriptions():
    engines = DeterminantEngineFactory.get_supported_engines()
    assert set(engines) == {"leibniz", "laplace", "binet-check", "bareiss"}
    assert all(engines.values())


def test_register_engine(trace_engine_class):
    DeterminantEngineFactory.register_engine(
        "trace", trace_engine_class, EngineConfig, "Sum of the diagonal"
    )
    engine = get_engine("trace")
    assert engine.compute(Matrix.from_rows([[1, 2], [3, 4]])) == 5
    assert engine.get_method_info() == {"method": "trace"}


# Tests for the engines
def test_engines_agree(matrix_5x5):
    expected = get_engine("leibniz").compute(matrix_5x5)
    for method in ("laplace", "binet-check", "bareiss"):
        assert get_engine(method).compute(matrix_5x5) == expected


def test_laplace_rows_from_config(matrix_2x2):
    engine = get_engine("laplace", {"rows": (1, 2)})
    assert engine.config == LaplaceConfig(method="laplace", rows=(1, 2))
    assert engine.compute(matrix_2x2) == -2
    assert engine.get_method_info() == {"method": "laplace", "rows": [1, 2]}


def test_leibniz_force_from_config():
    big = Matrix.identity(4)
    with pytest.raises(ComplexityRefusal):
        get_engine("leibniz", {"max_size": 3}).compute(big)
    assert get_engine("leibniz", {"force": True, "max_size": 3}).compute(big) == 1


def test_binet_check_detects_disagreement(matrix_2x2, monkeypatch):
    """A broken Laplace expansion is reported as a property violation"""
    monkeypatch.setattr(
        "src.modules.determinants.factory.det_laplace", lambda matrix, rows: Fraction(0)
    )
    with pytest.raises(PropertyViolation):
        get_engine("binet-check").compute(matrix_2x2)
