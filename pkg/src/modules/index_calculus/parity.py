"""Permutation parity and the injection <-> (combination, permutation) isomorphism."""

from bisect import bisect_right
from functools import lru_cache
from itertools import permutations
from typing import List, Sequence, Tuple

from src.common.exceptions import DimensionError, DomainError
from src.modules.index_calculus.words import (
    Combination,
    Injection,
    Permutation,
    Word,
)


def _merge_count(values: List[int]) -> Tuple[List[int], int]:
    if len(values) <= 1:
        return values, 0
    mid = len(values) // 2
    left, left_count = _merge_count(values[:mid])
    right, right_count = _merge_count(values[mid:])

    merged = []
    count = left_count + right_count
    i = j = 0
    while i < len(left) and j < len(right):
        if left[i] <= right[j]:
            merged.append(left[i])
            i += 1
        else:
            merged.append(right[j])
            j += 1
            # every remaining left entry is larger than right[j - 1]
            count += len(left) - i
    merged.extend(left[i:])
    merged.extend(right[j:])
    return merged, count


def count_inversions(values: Sequence[int]) -> int:
    """Number of pairs i < j with values[i] > values[j], by mergesort."""
    return _merge_count(list(values))[1]


def word_sign(values: Sequence[int]) -> int:
    return -1 if count_inversions(values) % 2 else 1


def inversion_count(p: Permutation) -> int:
    return count_inversions(p.images)


def parity(p: Permutation) -> int:
    """(-1)^(number of inversions)."""
    return word_sign(p.images)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """(p o q)(k) = p(q(k))."""
    if p.degree != q.degree:
        raise DimensionError(f"Degrees differ: {p.degree} and {q.degree}")
    return Permutation(tuple(p.images[k - 1] for k in q.images))


def inverse(p: Permutation) -> Permutation:
    images = [0] * p.degree
    for position, image in enumerate(p.images, start=1):
        images[image - 1] = position
    return Permutation(tuple(images))


def transposition_decomposition(p: Permutation) -> List[Tuple[int, int]]:
    """
    Greedy sort of the one-line word into place by transpositions.

    Returns the swapped positions in order; applying them to p.images sorts it,
    so (-1)^len equals parity(p).
    """
    images = list(p.images)
    where = {value: position for position, value in enumerate(images)}
    swaps = []
    for position in range(len(images)):
        wanted = position + 1
        if images[position] != wanted:
            other = where[wanted]
            displaced = images[position]
            images[position], images[other] = wanted, displaced
            where[displaced], where[wanted] = other, position
            swaps.append((position + 1, other + 1))
    return swaps


def decompose_injection(j: Injection) -> Tuple[Combination, Permutation]:
    """
    Split an injection into its sorted combination and the permutation p
    with word[k] = sorted[p(k)].
    """
    ordered = tuple(sorted(j.word))
    position = {value: k for k, value in enumerate(ordered, start=1)}
    return Combination(j.ambient, ordered), Permutation(
        tuple(position[value] for value in j.word)
    )


def recompose_injection(c: Combination, p: Permutation) -> Injection:
    if c.size != p.degree:
        raise DimensionError(
            f"Combination of size {c.size} with permutation of degree {p.degree}"
        )
    return Injection(c.ambient, tuple(c.word[k - 1] for k in p.images))


@lru_cache(maxsize=16)
def signed_permutations(m: int) -> Tuple[Tuple[Word, int], ...]:
    """All 0-based permutations of range(m) with their signs, lexicographic."""
    return tuple((perm, word_sign(perm)) for perm in permutations(range(m)))


def complement(c: Combination) -> Combination:
    members = set(c.word)
    return Combination(
        c.ambient, tuple(i for i in range(1, c.ambient + 1) if i not in members)
    )


def shuffle_sign(a: Word, b: Word) -> int:
    """
    Sign of the shuffle sorting the concatenation of increasing words a, b;
    0 when they share an entry.
    """
    if set(a) & set(b):
        return 0
    crossings = sum(len(a) - bisect_right(a, j) for j in b)
    return -1 if crossings % 2 else 1


def split_sign(a: Combination, b: Combination) -> int:
    """(-1)^#{(i, j) in a x b : i > j} for disjoint combinations."""
    if a.ambient != b.ambient:
        raise DimensionError(f"Ambient dimensions differ: {a.ambient}, {b.ambient}")
    sign = shuffle_sign(a.word, b.word)
    if sign == 0:
        raise DomainError(f"Combinations are not disjoint: {a.word}, {b.word}")
    return sign
