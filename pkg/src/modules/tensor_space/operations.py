"""Tensor product, the alternation projector and the multivector embedding."""

from fractions import Fraction
from typing import List

from src.common.exceptions import DimensionError, DomainError
from src.common.logger import get_algebra_logger
from src.common.workers import ordered_map
from src.modules.exterior_algebra.models import Multivector
from src.modules.index_calculus.enumeration import (
    iter_combination_words,
    iter_placement_words,
    placement_rank,
)
from src.modules.index_calculus.parity import signed_permutations
from src.modules.index_calculus.words import Word
from src.modules.scalars.rational import inverse_factorial
from src.modules.tensor_space.models import Tensor

logger = get_algebra_logger()


def tensor_product(s: Tensor, t: Tensor) -> Tensor:
    """(s (x) t)[J, K] = s[J] t[K]; placement (J, K) ranks as rank(J) n^q + rank(K)."""
    if s.ambient != t.ambient:
        raise DimensionError(f"Ambient dimensions differ: {s.ambient}, {t.ambient}")
    return Tensor(
        s.ambient,
        s.order + t.order,
        tuple(a * b for a in s.components for b in t.components),
    )


def alt(t: Tensor) -> Tensor:
    """
    Alt(t)[J] = (1/m!) sum over permutations p of parity(p) t[J o p].

    Components are independent, so they may be evaluated on a thread pool;
    ordered_map keeps the assembly order fixed.
    """
    n, m = t.ambient, t.order
    signed = signed_permutations(m)
    weight = inverse_factorial(m)
    components = t.components
    logger.debug("Alternating order-%d tensor over %d dimensions", m, n)

    def alternated(word: Word) -> Fraction:
        total = Fraction(0)
        for perm, sign in signed:
            value = components[placement_rank(n, tuple(word[k] for k in perm))]
            if value:
                total += value if sign > 0 else -value
        return total * weight

    return Tensor(n, m, tuple(ordered_map(alternated, iter_placement_words(n, m))))


def is_alternating(t: Tensor) -> bool:
    """Zero on repeated placements and sign-flipping under adjacent swaps."""
    n, m = t.ambient, t.order
    for word in iter_placement_words(n, m):
        value = t.components[placement_rank(n, word)]
        if len(set(word)) != len(word):
            if value != 0:
                return False
            continue
        for k in range(m - 1):
            swapped = word[:k] + (word[k + 1], word[k]) + word[k + 2 :]
            if t.components[placement_rank(n, swapped)] != -value:
                return False
    return True


def embed_multivector(v: Multivector) -> Tensor:
    """e_I -> sum over p of parity(p) e_(I o p), i.e. m! Alt(e_i1 (x) ... (x) e_im)."""
    n, m = v.ambient, v.grade
    if n < 1:
        raise DomainError("Cannot embed over a zero-dimensional space")
    components: List[Fraction] = [Fraction(0)] * n**m
    signed = signed_permutations(m)
    for word, coeff in v.terms:
        for perm, sign in signed:
            rank = placement_rank(n, tuple(word[k] for k in perm))
            components[rank] += coeff if sign > 0 else -coeff
    return Tensor(n, m, tuple(components))


def project_multivector(t: Tensor) -> Multivector:
    """Read an alternating tensor's components at strictly increasing placements."""
    if not is_alternating(t):
        raise DomainError("Tensor is not alternating")
    n, m = t.ambient, t.order
    if m > n:
        return Multivector.zero(n, m)
    return Multivector.from_terms(
        n,
        m,
        {
            word: t.components[placement_rank(n, word)]
            for word in iter_combination_words(n, m)
        },
    )
