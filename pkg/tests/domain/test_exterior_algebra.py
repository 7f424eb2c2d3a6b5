from fractions import Fraction

import pytest

from src.common.exceptions import DimensionError, DomainError
from src.modules.exterior_algebra.clutch import clutch
from src.modules.exterior_algebra.functor import (
    apply_dual_map,
    apply_map,
    apply_map_graded,
    exterior_power_map,
)
from src.modules.exterior_algebra.models import GradedElement, Matrix, Multivector
from src.modules.exterior_algebra.pairing import (
    contract,
    contract_graded,
    contract_sequence,
    is_simple_monomial,
    pair,
    pair_chains,
)
from src.modules.exterior_algebra.wedge import graded_wedge, wedge, wedge_vectors
from tests.domain.helpers import e, e_star, multivector


def graded(*parts):
    return GradedElement.from_parts(parts[0].ambient, parts, parts[0].dual)


class TestMultivector:
    def test_canonical_terms(self):
        v = Multivector.from_terms(3, 2, {(2, 3): 1, (1, 2): 0, (1, 3): "1/2"})
        assert v.terms == (((1, 3), Fraction(1, 2)), ((2, 3), Fraction(1)))

    def test_rejects_non_combination_keys(self):
        with pytest.raises(DomainError):
            Multivector.from_terms(3, 2, {(2, 1): 1})
        with pytest.raises(DimensionError):
            Multivector.from_terms(3, 2, {(1,): 1})

    def test_coordinates(self):
        v = multivector(4, {(1, 4): 2, (3, 4): -1})
        assert v.to_coordinates() == [0, 0, 2, 0, 0, -1]
        assert Multivector.from_coordinates(4, 2, v.to_coordinates()) == v

    def test_linear_structure(self):
        v = e(3, 1, 2) * 2 + e(3, 2, 3) - e(3, 1, 2)
        assert v == multivector(3, {(1, 2): 1, (2, 3): 1})
        assert (v - v).is_zero
        assert (-v).coefficient((2, 3)) == -1

    def test_grade_mismatch(self):
        with pytest.raises(DimensionError):
            e(3, 1) + e(3, 1, 2)

    def test_primal_dual_mismatch(self):
        with pytest.raises(DomainError):
            e(3, 1) + e_star(3, 1)


class TestWedge:
    def test_grade_one(self):
        assert wedge(e(2, 1), e(2, 2)) == e(2, 1, 2)
        assert wedge(e(2, 2), e(2, 1)) == -e(2, 1, 2)

    def test_bilinear_on_basis(self):
        u = multivector(3, {(1,): 1, (2,): 2})
        assert wedge(u, e(3, 3)) == multivector(3, {(1, 3): 1, (2, 3): 2})

    def test_repeated_factor(self):
        assert wedge(e(4, 1, 2), e(4, 1, 2)).is_zero

    def test_above_top_grade(self):
        result = wedge(e(2, 1, 2), e(2, 1))
        assert result.is_zero and result.grade == 3

    def test_scalar_unit(self):
        v = multivector(3, {(1, 3): 4})
        assert wedge(Multivector.scalar(3, 1), v) == v

    def test_ambient_mismatch(self):
        with pytest.raises(DimensionError):
            wedge(e(2, 1), e(3, 1))

    def test_wedge_vectors_is_determinant(self):
        columns = [Multivector.from_vector(c) for c in ([1, 3], [2, 4])]
        assert wedge_vectors(*columns) == e(2, 1, 2, coeff=-2)


class TestClutch:
    def test_known_value(self):
        w = graded(e(3, 2), e(3, 2, 3))
        assert clutch(e(3, 1))(w) == graded(e(3, 1, 2), e(3, 1, 2, 3))

    def test_composition_is_wedge(self):
        u, v = graded(e(3, 1), Multivector.scalar(3, 2)), graded(e(3, 2))
        w = graded(e(3, 3), Multivector.scalar(3, 1))
        assert (clutch(u) @ clutch(v))(w) == clutch(u)(clutch(v)(w))
        assert clutch(u) @ clutch(v) == clutch(graded_wedge(u, v))


class TestExteriorPowerMap:
    def test_top_compound_is_determinant(self, matrix_2x2):
        assert exterior_power_map(matrix_2x2, 2) == Matrix.from_rows([[-2]])

    def test_grade_zero_and_one(self, matrix_2x2):
        assert exterior_power_map(matrix_2x2, 0) == Matrix.identity(1)
        assert exterior_power_map(matrix_2x2, 1) == matrix_2x2

    def test_compound_of_3x3(self):
        a = Matrix.from_rows([[1, 2, 0], [0, 1, 3], [4, 0, 1]])
        # rows/cols (1,2), (1,3), (2,3)
        assert exterior_power_map(a, 2) == Matrix.from_rows(
            [[1, 3, 6], [-8, 1, 2], [-4, -12, 1]]
        )

    def test_grade_out_of_range(self, matrix_2x2):
        with pytest.raises(DomainError):
            exterior_power_map(matrix_2x2, 3)

    def test_apply_map_scales(self):
        a = Matrix.from_rows([[2, 0], [0, 3]])
        assert apply_map(a, e(2, 1, 2)) == e(2, 1, 2, coeff=6)

    def test_apply_map_dimension_mismatch(self, matrix_2x2):
        with pytest.raises(DimensionError):
            apply_map(matrix_2x2, e(3, 1))

    def test_apply_map_graded_zero_element_dimension(self, matrix_2x2):
        with pytest.raises(DimensionError):
            apply_map_graded(matrix_2x2, GradedElement.zero(5))
        assert apply_map_graded(matrix_2x2, GradedElement.zero(2)).is_zero

    def test_apply_dual_map_adjoint(self):
        a = Matrix.from_rows([[1, 2, 0], [0, 1, 3]])
        v = multivector(3, {(1, 2): 1, (2, 3): -2})
        w = e_star(2, 1, 2, coeff=5)
        assert pair(w, apply_map(a, v)) == pair(apply_dual_map(a, w), v)


class TestPairing:
    def test_dual_basis(self):
        assert pair(e_star(3, 1, 3), e(3, 1, 3)) == 1
        assert pair(e_star(3, 1, 3), e(3, 1, 2)) == 0

    def test_bilinear(self):
        w = multivector(3, {(1, 2): 2, (2, 3): 1}, dual=True)
        v = multivector(3, {(1, 2): 3, (2, 3): -1})
        assert pair(w, v) == 5

    def test_grade_mismatch(self):
        with pytest.raises(DimensionError):
            pair(e_star(3, 1), e(3, 1, 2))

    def test_needs_dual_first(self):
        with pytest.raises(DomainError):
            pair(e(3, 1), e(3, 1))

    def test_chains(self):
        v = graded(e(3, 1), e(3, 2, 3, coeff=4))
        assert pair_chains(GradedElement.zero(3, dual=True), v) == 0
        w = graded(e_star(3, 1, coeff=2), e_star(3, 2, 3))
        assert pair_chains(w, v) == 6


class TestContraction:
    def test_known_values(self):
        assert contract(e_star(2, 1), e(2, 1, 2)) == e(2, 2)
        assert contract(e_star(2, 2), e(2, 1, 2)) == -e(2, 1)
        assert contract(e_star(3, 3), e(3, 1, 2)).is_zero

    def test_grade_zero(self):
        with pytest.raises(DomainError):
            contract(e_star(2, 1), Multivector.scalar(2, 1))

    def test_iterated_reproduces_pair(self):
        v = multivector(4, {(1, 2, 4): 3, (2, 3, 4): -1})
        assert contract_sequence((1, 2, 4), v) == Multivector.scalar(4, 3)
        assert contract_sequence((2, 3, 4), v) == Multivector.scalar(4, -1)

    def test_graded(self):
        v = graded(Multivector.scalar(2, 5), e(2, 1), e(2, 1, 2))
        assert contract_graded(e_star(2, 1), v) == graded(Multivector.scalar(2, 1), e(2, 2))

    def test_graded_pure_scalar(self):
        with pytest.raises(DomainError):
            contract_graded(e_star(2, 1), GradedElement.one(2))
        assert contract_graded(e_star(2, 1), GradedElement.zero(2)).is_zero


class TestSimpleMonomial:
    def test_known_values(self):
        coeff, index = is_simple_monomial(e(4, 2, 4, coeff=5))
        assert (coeff, index.word) == (5, (2, 4))
        assert is_simple_monomial(e(4, 1, 2) + e(4, 3, 4)) is None
        assert is_simple_monomial(Multivector.zero(4, 2)) is None
