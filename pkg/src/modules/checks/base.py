import json
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional

from src.common.logger import get_check_logger
from src.modules.checks.models import PropertyResult
from src.modules.checks.rng import SplitMix64
from src.modules.diff_forms.forms import PolyForm
from src.modules.diff_forms.polynomial import Polynomial
from src.modules.exterior_algebra.models import GradedElement, Matrix, Multivector
from src.modules.index_calculus.words import IndexWord, Permutation
from src.modules.scalars.rational import format_rational
from src.modules.tensor_space.models import Tensor

logger = get_check_logger()

Check = Callable[[SplitMix64, int], Optional[str]]


def _plain(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, Matrix):
        return [[format_rational(x) for x in row] for row in value.entries]
    if isinstance(value, Multivector):
        return {
            "dim": value.ambient,
            "grade": value.grade,
            "dual": value.dual,
            "terms": [[list(word), format_rational(c)] for word, c in value.terms],
        }
    if isinstance(value, GradedElement):
        return [_plain(part) for part in value.parts]
    if isinstance(value, Tensor):
        return {
            "dim": value.ambient,
            "order": value.order,
            "components": [format_rational(c) for c in value.components],
        }
    if isinstance(value, Polynomial):
        return [[list(exps), format_rational(c)] for exps, c in value.terms.items()]
    if isinstance(value, PolyForm):
        return {
            "vars": value.nvars,
            "grade": value.grade,
            "terms": [[list(word), _plain(poly)] for word, poly in value.terms],
        }
    if isinstance(value, Permutation):
        return list(value.images)
    if isinstance(value, IndexWord):
        return list(value.word)
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    return value


def describe(**inputs) -> str:
    """Counterexample text: the inputs verbatim as compact JSON, in argument order."""
    return json.dumps({key: _plain(value) for key, value in inputs.items()})


@dataclass(frozen=True)
class Property:
    name: str
    check: Check


class PropertySuite(ABC):
    """
    A named group of algebraic laws. Each check draws its inputs from the
    shared generator and returns None on success or a counterexample text.
    """

    name: str = ""

    @abstractmethod
    def properties(self) -> List[Property]:
        """Laws in their fixed reporting order"""

    def run(self, rng: SplitMix64, n: int, trials: int) -> List[PropertyResult]:
        results = []
        for prop in self.properties():
            passed = 0
            counterexample = None
            for _ in range(trials):
                try:
                    failure = prop.check(rng, n)
                except Exception as e:
                    logger.exception("Property %s/%s raised", self.name, prop.name)
                    failure = f"raised {type(e).__name__}: {e}"
                if failure is None:
                    passed += 1
                elif counterexample is None:
                    counterexample = failure
            logger.info(
                "Property %s/%s: %d/%d passed", self.name, prop.name, passed, trials
            )
            results.append(
                PropertyResult(
                    suite=self.name,
                    name=prop.name,
                    trials=trials,
                    passed=passed,
                    counterexample=counterexample,
                )
            )
        return results
