from typing import Dict, List, Type

from src.common.exceptions import DomainError
from src.common.logger import get_check_logger
from src.modules.checks.base import PropertySuite
from src.modules.checks.models import CheckReport
from src.modules.checks.rng import SplitMix64
from src.modules.checks.suites import SUITE_ORDER

logger = get_check_logger()

ALL_SUITES = "all"


class SuiteFactory:
    """
    Registry of property suites keyed by their CLI name
    """

    _suite_registry: Dict[str, Type[PropertySuite]] = {
        suite.name: suite for suite in SUITE_ORDER
    }

    @classmethod
    def register_suite(cls, suite_class: Type[PropertySuite]) -> None:
        cls._suite_registry[suite_class.name] = suite_class

    @classmethod
    def create_suites(cls, name: str) -> List[PropertySuite]:
        """
        Instantiate the named suite, or every suite in registration order for "all".

        Raises:
            DomainError: If the suite name is unknown
        """
        if name == ALL_SUITES:
            return [suite_class() for suite_class in cls._suite_registry.values()]
        if name not in cls._suite_registry:
            raise DomainError(
                f"Unknown suite: {name}. "
                f"Available suites: {[*cls._suite_registry, ALL_SUITES]}"
            )
        return [cls._suite_registry[name]()]

    @classmethod
    def get_supported_suites(cls) -> List[str]:
        return [*cls._suite_registry, ALL_SUITES]


class CheckRunner:
    """Runs suites against one seeded generator and collects a single report."""

    def execute(self, suite: str, n: int, trials: int, seed: int) -> CheckReport:
        """
        Args:
            suite: Suite name or "all"
            n: Size parameter; each suite caps it at what its oracles can afford
            trials: Random instances per property
            seed: SplitMix64 seed

        Returns:
            CheckReport whose rendering depends only on the arguments
        """
        if trials < 1:
            raise DomainError(f"trials must be >= 1, got {trials}")
        if n < 1:
            raise DomainError(f"n must be >= 1, got {n}")
        suites = SuiteFactory.create_suites(suite)
        rng = SplitMix64(seed)
        logger.info(
            "Running %s suite(s) with n=%d trials=%d seed=%d", suite, n, trials, seed
        )
        results = []
        for property_suite in suites:
            results.extend(property_suite.run(rng, n, trials))
        report = CheckReport(suite=suite, n=n, trials=trials, seed=seed, results=results)
        if not report.all_passed:
            logger.warning("Suite %s failed: %s", suite, report.render().splitlines()[-1])
        return report
