from typing import Union

from src.modules.exterior_algebra.models import GradedElement, Multivector
from src.modules.exterior_algebra.wedge import graded_wedge


def _graded(u: Union[GradedElement, Multivector]) -> GradedElement:
    if isinstance(u, Multivector):
        return GradedElement.from_multivector(u)
    return u


class ClutchOperator:
    """
    Left wedge multiplication E(u): w -> u ^ w on the whole graded algebra.

    Composition of operators is again a clutch operator, E(u) o E(v) = E(u ^ v).
    """

    def __init__(self, element: Union[GradedElement, Multivector]):
        self.element = _graded(element)

    @property
    def ambient(self) -> int:
        return self.element.ambient

    def __call__(self, w: Union[GradedElement, Multivector]) -> GradedElement:
        return graded_wedge(self.element, _graded(w))

    def compose(self, other: "ClutchOperator") -> "ClutchOperator":
        return ClutchOperator(graded_wedge(self.element, other.element))

    def __matmul__(self, other: "ClutchOperator") -> "ClutchOperator":
        if not isinstance(other, ClutchOperator):
            return NotImplemented
        return self.compose(other)

    def __eq__(self, other) -> bool:
        return isinstance(other, ClutchOperator) and self.element == other.element

    def __repr__(self) -> str:
        return f"ClutchOperator(grades={self.element.grades}, ambient={self.ambient})"


def clutch(u: Union[GradedElement, Multivector]) -> ClutchOperator:
    return ClutchOperator(u)
