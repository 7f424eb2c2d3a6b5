"""The exterior-power functor on linear maps: compound matrices and their action."""

from fractions import Fraction
from typing import Dict

from src.common.exceptions import DimensionError, DomainError
from src.common.logger import get_algebra_logger
from src.common.workers import ordered_map
from src.modules.determinants.engines import minor_words
from src.modules.exterior_algebra.models import GradedElement, Matrix, Multivector
from src.modules.index_calculus.enumeration import iter_combination_words
from src.modules.index_calculus.words import Word

logger = get_algebra_logger()


def _check_grade(matrix: Matrix, m: int) -> None:
    if not 0 <= m <= min(matrix.rows, matrix.cols):
        raise DomainError(
            f"Grade {m} outside 0..{min(matrix.rows, matrix.cols)} "
            f"for a {matrix.rows}x{matrix.cols} matrix"
        )


def exterior_power_map(matrix: Matrix, m: int) -> Matrix:
    """
    The m-th compound matrix: entry (rank I, rank J) is the minor on rows I,
    columns J, with combinations in lexicographic order.

    Rows are evaluated through ordered_map, so the result does not depend on
    settings.max_workers.
    """
    _check_grade(matrix, m)
    row_words = list(iter_combination_words(matrix.rows, m))
    col_words = list(iter_combination_words(matrix.cols, m))
    logger.debug(
        "Compound of grade %d: %dx%d minors", m, len(row_words), len(col_words)
    )

    def compound_row(row_word: Word):
        return tuple(minor_words(matrix, row_word, col_word) for col_word in col_words)

    rows = tuple(ordered_map(compound_row, row_words))
    return Matrix(len(row_words), len(col_words), rows)


def apply_map(matrix: Matrix, v: Multivector) -> Multivector:
    """
    Induced action of A (r x c) on the grade-m part of the exterior algebra of
    the c-dimensional space. On e_J it is the wedge of the columns j1..jm.
    """
    if v.ambient != matrix.cols:
        raise DimensionError(
            f"Element over {v.ambient} dimensions for a map from {matrix.cols}"
        )
    _check_grade(matrix, v.grade)
    row_words = list(iter_combination_words(matrix.rows, v.grade))
    coefficients: Dict[Word, Fraction] = {}
    for col_word, b in v.terms:
        for row_word in row_words:
            value = minor_words(matrix, row_word, col_word)
            if value:
                coefficients[row_word] = coefficients.get(row_word, 0) + value * b
    return Multivector.from_terms(matrix.rows, v.grade, coefficients, v.dual)


def apply_dual_map(matrix: Matrix, w: Multivector) -> Multivector:
    """Transpose action on duals: <apply_dual_map(A, w), v> = <w, apply_map(A, v)>."""
    return apply_map(matrix.transpose(), w)


def apply_map_graded(matrix: Matrix, v: GradedElement) -> GradedElement:
    if v.ambient != matrix.cols:
        raise DimensionError(
            f"Element over {v.ambient} dimensions for a map from {matrix.cols}"
        )
    return GradedElement.from_parts(
        matrix.rows, [apply_map(matrix, part) for part in v.parts], v.dual
    )
