"""Signed-sum determinant engines.

``det_leibniz`` is the definition: a signed sum over the injections of
{1..n} into itself. ``det_laplace`` and ``cauchy_binet`` are independent
expansions used as oracles; their minors come from a column-subset recursion
memoized on a bitmask of the columns still available, O(2^n * n) per row set.
"""

from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Optional, Sequence

from src.common.exceptions import ComplexityRefusal, DimensionError, DomainError
from src.common.logger import get_algebra_logger
from src.common.settings import settings
from src.modules.exterior_algebra.models import Matrix
from src.modules.index_calculus.enumeration import (
    iter_combination_words,
    iter_signed_injections,
)
from src.modules.index_calculus.parity import complement
from src.modules.index_calculus.words import Combination, Word

logger = get_algebra_logger()


def _leibniz_sum(entries: Sequence[Sequence[Fraction]]) -> Fraction:
    size = len(entries)
    total = Fraction(0)
    for word, sign in iter_signed_injections(size, size):
        term = prod((entries[i][j - 1] for i, j in enumerate(word)), start=Fraction(1))
        if term:
            total += term if sign > 0 else -term
    return total


def _subset_minor_table(matrix: Matrix, row_word: Word):
    """
    Return a function mapping a column word to the minor on (row_word, columns).

    Expansion runs along row_word[0], row_word[1], ...; the memo key is the set
    of columns left, whose size fixes the current row.
    """
    rows = [matrix.entries[i - 1] for i in row_word]
    depth = len(rows)

    @lru_cache(maxsize=None)
    def expand(mask: int) -> Fraction:
        remaining = [j for j in range(matrix.cols) if mask >> j & 1]
        if not remaining:
            return Fraction(1)
        row = rows[depth - len(remaining)]
        total = Fraction(0)
        for position, j in enumerate(remaining):
            if row[j] == 0:
                continue
            term = row[j] * expand(mask & ~(1 << j))
            total += -term if position % 2 else term
        return total

    def minor_on(col_word: Sequence[int]) -> Fraction:
        if len(col_word) != depth:
            raise DomainError(f"Minor needs {depth} columns, got {len(col_word)}")
        mask = 0
        for j in col_word:
            mask |= 1 << (j - 1)
        return expand(mask)

    return minor_on


def det_leibniz(
    matrix: Matrix, force: bool = False, max_size: Optional[int] = None
) -> Fraction:
    """
    Determinant as the signed sum over injections {1..n} -> {1..n}.

    Args:
        matrix: Square matrix; the 0x0 matrix has determinant 1
        force: Skip the complexity refusal
        max_size: Refusal threshold; defaults to settings.leibniz_max_size

    Raises:
        DimensionError: non-square input
        ComplexityRefusal: size above the threshold without force
    """
    if not matrix.is_square:
        raise DimensionError(
            f"Determinant of a non-square {matrix.rows}x{matrix.cols} matrix"
        )
    max_size = max_size if max_size is not None else settings.leibniz_max_size
    if matrix.rows > max_size:
        if not force:
            raise ComplexityRefusal(
                f"Leibniz expansion of size {matrix.rows} exceeds {max_size}; "
                "use --force to override"
            )
        logger.warning("Forcing Leibniz expansion of size %d", matrix.rows)
    logger.debug("Leibniz expansion of size %d", matrix.rows)
    return _leibniz_sum(matrix.entries)


def minor(matrix: Matrix, rows: Combination, cols: Combination) -> Fraction:
    """Determinant of the submatrix on the given rows and columns, both increasing."""
    if rows.size != cols.size:
        raise DomainError(f"Minor on {rows.size} rows and {cols.size} columns")
    if rows.ambient != matrix.rows or cols.ambient != matrix.cols:
        raise DimensionError(
            f"Index sets over ({rows.ambient}, {cols.ambient}) "
            f"for a {matrix.rows}x{matrix.cols} matrix"
        )
    return minor_words(matrix, rows.word, cols.word)


def minor_words(matrix: Matrix, row_word: Word, col_word: Word) -> Fraction:
    """Unvalidated minor used by inner loops; large minors use the memoized path."""
    if len(row_word) <= settings.leibniz_max_size:
        return _leibniz_sum(matrix.submatrix(row_word, col_word).entries)
    return _subset_minor_table(matrix, tuple(row_word))(col_word)


def det_laplace(matrix: Matrix, rowset: Combination) -> Fraction:
    """
    Generalized Laplace expansion along the rows in rowset.

    Sum over column combinations J of |rowset| of
    (-1)^(sum rowset + sum J) * minor(rowset, J) * minor(rowset^c, J^c).
    """
    if not matrix.is_square:
        raise DimensionError(
            f"Determinant of a non-square {matrix.rows}x{matrix.cols} matrix"
        )
    if rowset.ambient != matrix.rows:
        raise DomainError(
            f"Row set over {rowset.ambient} for a matrix with {matrix.rows} rows"
        )
    if rowset.size < 1:
        raise DomainError("Laplace expansion needs at least one row")

    n = matrix.rows
    rest = complement(rowset)
    upper = _subset_minor_table(matrix, rowset.word)
    lower = _subset_minor_table(matrix, rest.word)
    row_weight = sum(rowset.word)

    total = Fraction(0)
    for col_word in iter_combination_words(n, rowset.size):
        head = upper(col_word)
        if head == 0:
            continue
        chosen = set(col_word)
        tail = lower(tuple(j for j in range(1, n + 1) if j not in chosen))
        term = head * tail
        total += -term if (row_weight + sum(col_word)) % 2 else term
    return total


def det_subsets(matrix: Matrix) -> Fraction:
    """Determinant through the memoized column-subset recursion alone."""
    if not matrix.is_square:
        raise DimensionError(
            f"Determinant of a non-square {matrix.rows}x{matrix.cols} matrix"
        )
    return _subset_minor_table(matrix, tuple(range(1, matrix.rows + 1)))(
        tuple(range(1, matrix.cols + 1))
    )


def cauchy_binet(a: Matrix, b: Matrix) -> Fraction:
    """
    det(A.B) for A r x k and B k x r as a sum over K subset {1..k}, |K| = r, of
    minor(A, all rows, K) * minor(B, K, all columns). Zero when r > k.
    """
    if a.cols != b.rows or a.rows != b.cols:
        raise DimensionError(
            f"Shapes {a.rows}x{a.cols} and {b.rows}x{b.cols} "
            "do not compose to a square product"
        )
    r, k = a.rows, a.cols
    if r > k:
        return Fraction(0)
    all_rows = tuple(range(1, r + 1))
    left = _subset_minor_table(a, all_rows)
    right = _subset_minor_table(b.transpose(), all_rows)

    total = Fraction(0)
    for col_word in iter_combination_words(k, r):
        head = left(col_word)
        if head:
            total += head * right(col_word)
    return total


def det_bareiss(matrix: Matrix) -> Fraction:
    """Fraction-free elimination; an extra oracle, never the definition."""
    if not matrix.is_square:
        raise DimensionError(
            f"Determinant of a non-square {matrix.rows}x{matrix.cols} matrix"
        )
    n = matrix.rows
    if n == 0:
        return Fraction(1)
    work = [list(row) for row in matrix.entries]
    sign = 1
    previous = Fraction(1)
    for k in range(n - 1):
        if work[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if work[i][k] != 0), None)
            if pivot is None:
                return Fraction(0)
            work[k], work[pivot] = work[pivot], work[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = (work[i][j] * work[k][k] - work[i][k] * work[k][j]) / previous
        previous = work[k][k]
    return sign * work[n - 1][n - 1]
