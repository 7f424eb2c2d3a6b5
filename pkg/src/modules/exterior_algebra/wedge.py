from fractions import Fraction
from typing import Dict

from src.common.exceptions import DimensionError, DomainError
from src.modules.exterior_algebra.models import GradedElement, Multivector
from src.modules.index_calculus.parity import shuffle_sign
from src.modules.index_calculus.words import Word


def _check_operands(ambient_u: int, ambient_v: int, dual_u: bool, dual_v: bool):
    if ambient_u != ambient_v:
        raise DimensionError(f"Ambient dimensions differ: {ambient_u}, {ambient_v}")
    if dual_u != dual_v:
        raise DomainError("Cannot wedge a primal element with a dual element")


def wedge(u: Multivector, v: Multivector) -> Multivector:
    """
    Exterior product in the determinant convention:
    e_I ^ e_J = split_sign(I, J) e_(I u J) for disjoint I, J and 0 otherwise.
    """
    _check_operands(u.ambient, v.ambient, u.dual, v.dual)
    grade = u.grade + v.grade
    if grade > u.ambient:
        return Multivector.zero(u.ambient, grade, u.dual)

    coefficients: Dict[Word, Fraction] = {}
    for left, a in u.terms:
        for right, b in v.terms:
            sign = shuffle_sign(left, right)
            if sign == 0:
                continue
            key = tuple(sorted(left + right))
            coefficients[key] = coefficients.get(key, 0) + (a * b if sign > 0 else -a * b)
    return Multivector.from_terms(u.ambient, grade, coefficients, u.dual)


def wedge_vectors(*vectors: Multivector) -> Multivector:
    """Wedge of homogeneous elements left to right, e.g. the columns of a matrix."""
    if not vectors:
        raise DomainError("Wedge of no vectors")
    result = vectors[0]
    for vector in vectors[1:]:
        result = wedge(result, vector)
    return result


def graded_wedge(u: GradedElement, w: GradedElement) -> GradedElement:
    _check_operands(u.ambient, w.ambient, u.dual, w.dual)
    return GradedElement.from_parts(
        u.ambient,
        [wedge(a, b) for a in u.parts for b in w.parts if a.grade + b.grade <= u.ambient],
        u.dual,
    )
