from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from src.common.exceptions import DimensionError, DomainError
from src.modules.exterior_algebra.models import GradedElement, Multivector
from src.modules.index_calculus.words import Combination, Word


def _check_pairing(dual_ambient, primal_ambient, dual_flag, primal_flag):
    if not dual_flag or primal_flag:
        raise DomainError("Pairing takes a dual element first and a primal second")
    if dual_ambient != primal_ambient:
        raise DimensionError(
            f"Ambient dimensions differ: {dual_ambient}, {primal_ambient}"
        )


def dual_basis(ambient: int, word: Sequence[int]) -> Multivector:
    return Multivector.basis(ambient, word, 1, dual=True)


def pair(w: Multivector, v: Multivector) -> Fraction:
    """<w, v> = sum over combinations I of w_I v_I; the dual basis is orthonormal."""
    _check_pairing(w.ambient, v.ambient, w.dual, v.dual)
    if w.grade != v.grade:
        raise DimensionError(f"Grades differ: {w.grade}, {v.grade}")
    primal = v.as_dict()
    return sum(
        (coeff * primal[word] for word, coeff in w.terms if word in primal),
        Fraction(0),
    )


def pair_chains(w: GradedElement, v: GradedElement) -> Fraction:
    """Gradewise sum of pairings; a grade missing on either side contributes 0."""
    _check_pairing(w.ambient, v.ambient, w.dual, v.dual)
    return sum(
        (pair(w.part(grade), v.part(grade)) for grade in w.grades if grade in v.grades),
        Fraction(0),
    )


def contract(x: Multivector, v: Multivector) -> Multivector:
    """
    Interior product of a grade-1 dual element with a grade-m element.

    contract(e*_k, e_I) = (-1)^(position of k in I, 0-based) e_(I without k).
    """
    _check_pairing(x.ambient, v.ambient, x.dual, v.dual)
    if x.grade != 1:
        raise DimensionError(f"Contraction needs a grade-1 dual, got grade {x.grade}")
    if v.grade < 1:
        raise DomainError("Cannot contract a grade-0 element")

    coefficients: Dict[Word, Fraction] = {}
    for (k,), a in x.terms:
        for word, b in v.terms:
            if k not in word:
                continue
            position = word.index(k)
            key = word[:position] + word[position + 1 :]
            value = a * b
            coefficients[key] = coefficients.get(key, 0) + (-value if position % 2 else value)
    return Multivector.from_terms(v.ambient, v.grade - 1, coefficients)


def contract_graded(x: Multivector, v: GradedElement) -> GradedElement:
    """
    Contraction extended gradewise. In a mixed-grade element the scalar part
    contracts to 0; a pure scalar is rejected like in ``contract``.
    """
    _check_pairing(x.ambient, v.ambient, x.dual, v.dual)
    if x.grade != 1:
        raise DimensionError(f"Contraction needs a grade-1 dual, got grade {x.grade}")
    if v.grades == [0]:
        raise DomainError("Cannot contract a grade-0 element")
    return GradedElement.from_parts(
        v.ambient, [contract(x, part) for part in v.parts if part.grade >= 1]
    )


def contract_sequence(word: Sequence[int], v: Multivector) -> Multivector:
    """Contract e*_(i1), e*_(i2), ... in order; on e*_I this reproduces pair."""
    result = v
    for k in word:
        result = contract(dual_basis(v.ambient, (k,)), result)
    return result


def is_simple_monomial(v: Multivector) -> Optional[Tuple[Fraction, Combination]]:
    """(coefficient, index) when v is a single term R e_I, else None."""
    if len(v.terms) != 1:
        return None
    word, coeff = v.terms[0]
    return coeff, Combination(v.ambient, word)
