"""Lexicographic enumeration and ranking of the three multi-index families.

``iter_*_words`` yield raw tuples for inner loops; ``enum_*`` wrap them in the
validated word types. Both validate their arguments before the first item is
requested.
"""

import itertools
from math import comb
from typing import Iterator, List, Tuple

from src.common.exceptions import DomainError, RangeError
from src.modules.index_calculus.words import (
    Combination,
    Injection,
    Placement,
    Word,
)


def _check_subset_range(n: int, m: int) -> None:
    if n < 0 or m < 0:
        raise DomainError(f"Negative size: n={n}, m={m}")
    if m > n:
        raise DomainError(f"Cannot choose {m} of {n}")


def iter_combination_words(n: int, m: int) -> Iterator[Word]:
    _check_subset_range(n, m)
    return itertools.combinations(range(1, n + 1), m)


def iter_injection_words(n: int, m: int) -> Iterator[Word]:
    _check_subset_range(n, m)
    return itertools.permutations(range(1, n + 1), m)


def iter_placement_words(n: int, m: int) -> Iterator[Word]:
    if n < 1 or m < 0:
        raise DomainError(f"Placements need n >= 1 and m >= 0: n={n}, m={m}")
    return itertools.product(range(1, n + 1), repeat=m)


def iter_signed_injections(n: int, m: int) -> Iterator[Tuple[Word, int]]:
    """
    Injections in lexicographic order together with their parity.

    The sign is carried along the prefix: appending j adds one inversion per
    earlier entry greater than j.
    """
    _check_subset_range(n, m)

    def extend(prefix: List[int], used: List[bool], sign: int):
        if len(prefix) == m:
            yield tuple(prefix), sign
            return
        for j in range(1, n + 1):
            if used[j]:
                continue
            larger = sum(1 for entry in prefix if entry > j)
            used[j] = True
            prefix.append(j)
            yield from extend(prefix, used, -sign if larger % 2 else sign)
            prefix.pop()
            used[j] = False

    return extend([], [False] * (n + 1), 1)


def enum_combinations(n: int, m: int) -> Iterator[Combination]:
    return (Combination(n, word) for word in iter_combination_words(n, m))


def enum_injections(n: int, m: int) -> Iterator[Injection]:
    return (Injection(n, word) for word in iter_injection_words(n, m))


def enum_placements(n: int, m: int) -> Iterator[Placement]:
    return (Placement(n, word) for word in iter_placement_words(n, m))


def combination_rank(n: int, word: Word) -> int:
    m = len(word)
    return comb(n, m) - 1 - sum(comb(n - c, m - i) for i, c in enumerate(word))


def rank_combination(c: Combination) -> int:
    """Position of c in enum_combinations(c.ambient, c.size), 0-based."""
    return combination_rank(c.ambient, c.word)


def unrank_combination(n: int, m: int, r: int) -> Combination:
    _check_subset_range(n, m)
    if not 0 <= r < comb(n, m):
        raise RangeError(f"Rank {r} outside 0..{comb(n, m) - 1} for C({n}, {m})")
    word = []
    x = 1
    for i in range(1, m + 1):
        while r >= comb(n - x, m - i):
            r -= comb(n - x, m - i)
            x += 1
        word.append(x)
        x += 1
    return Combination(n, tuple(word))


def placement_rank(n: int, word: Word) -> int:
    rank = 0
    for entry in word:
        rank = rank * n + (entry - 1)
    return rank


def rank_placement(p: Placement) -> int:
    return placement_rank(p.ambient, p.word)


def unrank_placement(n: int, m: int, r: int) -> Placement:
    if n < 1 or m < 0:
        raise DomainError(f"Placements need n >= 1 and m >= 0: n={n}, m={m}")
    if not 0 <= r < n**m:
        raise RangeError(f"Rank {r} outside 0..{n**m - 1} for {n}^{m}")
    digits = []
    for _ in range(m):
        r, digit = divmod(r, n)
        digits.append(digit + 1)
    return Placement(n, tuple(reversed(digits)))
