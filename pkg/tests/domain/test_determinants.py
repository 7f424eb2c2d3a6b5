from fractions import Fraction

import pytest

from src.common.exceptions import ComplexityRefusal, DimensionError, DomainError
from src.modules.determinants.engines import (
    cauchy_binet,
    det_bareiss,
    det_laplace,
    det_leibniz,
    det_subsets,
    minor,
)
from src.modules.exterior_algebra.functor import exterior_power_map
from src.modules.exterior_algebra.models import Matrix
from src.modules.index_calculus.enumeration import enum_combinations
from src.modules.index_calculus.words import Combination


class TestLeibniz:
    def test_one_by_one(self):
        assert det_leibniz(Matrix.from_rows([["7/2"]])) == Fraction(7, 2)

    def test_two_by_two(self, matrix_2x2):
        assert det_leibniz(matrix_2x2) == -2

    def test_empty_matrix(self):
        assert det_leibniz(Matrix(0, 0, ())) == 1

    def test_non_square(self):
        with pytest.raises(DimensionError):
            det_leibniz(Matrix.from_rows([[1, 2]]))

    def test_non_square_is_domain_error(self):
        with pytest.raises(DomainError):
            det_leibniz(Matrix.from_rows([[1, 2]]))

    def test_complexity_refusal(self):
        with pytest.raises(ComplexityRefusal):
            det_leibniz(Matrix.identity(11))

    def test_custom_threshold(self, matrix_5x5):
        with pytest.raises(ComplexityRefusal):
            det_leibniz(matrix_5x5, max_size=4)
        assert det_leibniz(matrix_5x5, force=True, max_size=4) == det_bareiss(
            matrix_5x5
        )

    def test_identity(self):
        assert det_leibniz(Matrix.identity(6)) == 1


class TestMinor:
    def test_entry(self, matrix_2x2, comb):
        assert minor(matrix_2x2, comb(2, 2), comb(2, 1)) == 3

    def test_identity_minors(self, identity_4, comb):
        assert minor(identity_4, comb(4, 1, 3), comb(4, 1, 3)) == 1
        assert minor(identity_4, comb(4, 1, 3), comb(4, 1, 2)) == 0

    def test_size_mismatch(self, identity_4, comb):
        with pytest.raises(DomainError):
            minor(identity_4, comb(4, 1, 3), comb(4, 1))

    def test_ambient_mismatch(self, identity_4, comb):
        with pytest.raises(DimensionError):
            minor(identity_4, comb(3, 1), comb(4, 1))


class TestLaplace:
    def test_row_one(self, matrix_2x2, comb):
        assert det_laplace(matrix_2x2, comb(2, 1)) == -2

    def test_full_rowset(self, matrix_5x5, comb):
        assert det_laplace(matrix_5x5, comb(5, 1, 2, 3, 4, 5)) == det_leibniz(
            matrix_5x5
        )

    def test_every_rowset_agrees(self, matrix_5x5):
        expected = det_leibniz(matrix_5x5)
        for m in range(1, 6):
            for rowset in enum_combinations(5, m):
                assert det_laplace(matrix_5x5, rowset) == expected

    def test_empty_rowset(self, matrix_2x2):
        with pytest.raises(DomainError):
            det_laplace(matrix_2x2, Combination(2, ()))

    def test_rowset_ambient(self, matrix_2x2, comb):
        with pytest.raises(DomainError):
            det_laplace(matrix_2x2, comb(3, 1))


class TestCauchyBinet:
    def test_identity(self):
        assert cauchy_binet(Matrix.identity(3), Matrix.identity(3)) == 1

    def test_rectangular(self):
        a = Matrix.from_rows([[1, 2, 3], [4, 5, 6]])
        b = Matrix.from_rows([[1, 0], [0, 1], [1, 1]])
        assert cauchy_binet(a, b) == -6
        assert det_leibniz(a @ b) == -6

    def test_more_rows_than_inner(self):
        a = Matrix.from_rows([[1], [2]])
        b = Matrix.from_rows([[3, 4]])
        assert cauchy_binet(a, b) == 0
        assert det_leibniz(a @ b) == 0

    def test_shape_mismatch(self):
        with pytest.raises(DimensionError):
            cauchy_binet(Matrix.identity(2), Matrix.identity(3))


class TestOracles:
    def test_methods_agree(self, matrix_5x5):
        expected = det_leibniz(matrix_5x5)
        assert det_bareiss(matrix_5x5) == expected
        assert det_subsets(matrix_5x5) == expected
        assert exterior_power_map(matrix_5x5, 5).entry(1, 1) == expected

    def test_bareiss_needs_pivoting(self):
        a = Matrix.from_rows([[0, 1, 2], [1, 0, 3], [4, -3, 8]])
        assert det_bareiss(a) == det_leibniz(a)

    def test_singular(self):
        a = Matrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
        assert det_leibniz(a) == 0
        assert det_bareiss(a) == 0

    def test_rational_entries(self):
        a = Matrix.from_rows([["1/2", "1/3"], ["1/4", "1/5"]])
        assert det_leibniz(a) == Fraction(1, 10) - Fraction(1, 12)
