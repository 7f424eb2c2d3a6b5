from fractions import Fraction

import pytest
from pydantic import ValidationError

from src.cli.schemas import FormPayload, MatrixPayload, MultivectorPayload, TensorPayload
from src.common.exceptions import DimensionError, DomainError
from src.modules.exterior_algebra.models import GradedElement, Matrix, Multivector
from tests.domain.helpers import e, form, multivector, poly, x


class TestMultivectorPayload:
    def test_rationals_must_be_strings(self):
        with pytest.raises(ValidationError):
            MultivectorPayload.model_validate({"dim": 2, "terms": [{"index": [1], "coeff": 3}]})

    def test_malformed_rational(self):
        with pytest.raises(ValidationError):
            MultivectorPayload.model_validate(
                {"dim": 2, "terms": [{"index": [1], "coeff": "1/0"}]}
            )

    @pytest.mark.parametrize("index", [[2, 1], [1, 1], [3]])
    def test_bad_index(self, index):
        with pytest.raises(ValidationError):
            MultivectorPayload.model_validate(
                {"dim": 2, "terms": [{"index": index, "coeff": "1"}]}
            )

    def test_duplicate_index(self):
        term = {"index": [1, 2], "coeff": "1"}
        with pytest.raises(ValidationError):
            MultivectorPayload.model_validate({"dim": 2, "terms": [term, term]})

    def test_unknown_field(self):
        with pytest.raises(ValidationError):
            MultivectorPayload.model_validate({"dim": 2, "terms": [], "grade": 1})

    def test_to_multivector(self):
        payload = MultivectorPayload.model_validate(
            {
                "dim": 3,
                "terms": [
                    {"index": [2, 3], "coeff": "-1/2"},
                    {"index": [1, 2], "coeff": "0"},
                ],
            }
        )
        assert payload.to_multivector() == multivector(3, {(2, 3): Fraction(-1, 2)})
        assert payload.to_multivector(dual=True).dual

    def test_empty_is_grade_zero(self):
        v = MultivectorPayload(dim=3).to_multivector()
        assert v.is_zero and v.grade == 0

    def test_mixed_grades(self):
        payload = MultivectorPayload.model_validate(
            {
                "dim": 2,
                "terms": [{"index": [], "coeff": "2"}, {"index": [1], "coeff": "1"}],
            }
        )
        assert not payload.is_homogeneous
        with pytest.raises(DomainError):
            payload.to_multivector()
        assert payload.to_graded().grades == [0, 1]

    def test_from_domain_sorted_by_grade(self):
        element = GradedElement.from_parts(
            3, [e(3, 2, 3), Multivector.scalar(3, 4), e(3, 1, 2, coeff=-1)]
        )
        payload = MultivectorPayload.from_domain(element)
        assert [term.index for term in payload.terms] == [[], [1, 2], [2, 3]]
        assert payload.model_dump_json() == (
            '{"dim":3,"terms":[{"index":[],"coeff":"4"},'
            '{"index":[1,2],"coeff":"-1"},{"index":[2,3],"coeff":"1"}]}'
        )


class TestMatrixPayload:
    def test_to_domain(self):
        payload = MatrixPayload.model_validate(
            {"rows": 1, "cols": 2, "entries": [["1/2", "-3"]]}
        )
        assert payload.to_domain() == Matrix.from_rows([[Fraction(1, 2), -3]])

    @pytest.mark.parametrize(
        "rows, cols, entries",
        [(2, 2, [["1", "2"]]), (3, 2, [["1", "2"], ["3", "4"]]), (1, 2, [["1"]])],
    )
    def test_shape_mismatch(self, rows, cols, entries):
        """Declared shape and entries must agree before any domain value is built"""
        with pytest.raises(ValidationError):
            MatrixPayload.model_validate({"rows": rows, "cols": cols, "entries": entries})

    def test_dump(self, matrix_2x2):
        assert MatrixPayload.from_domain(matrix_2x2).model_dump_json() == (
            '{"rows":2,"cols":2,"entries":[["1","2"],["3","4"]]}'
        )


class TestTensorPayload:
    def test_component_count(self):
        with pytest.raises(ValidationError):
            TensorPayload.model_validate(
                {"dim": 2, "order": 2, "components": ["1", "0", "0"]}
            )

    def test_dim_must_be_positive(self):
        with pytest.raises(ValidationError):
            TensorPayload.model_validate({"dim": 0, "order": 0, "components": ["1"]})


class TestFormPayload:
    def test_to_domain(self):
        payload = FormPayload.model_validate(
            {
                "vars": 2,
                "terms": [
                    {"index": [2], "poly": [{"exps": [1, 0], "coeff": "3"}]},
                    {"index": [1], "poly": [{"exps": [0, 0], "coeff": "1"}]},
                ],
            }
        )
        expected = form(2, {(1,): poly(2, {(0, 0): 1}), (2,): x(2, 1) * Fraction(3)})
        assert payload.to_domain() == expected

    def test_mixed_grades(self):
        payload = FormPayload.model_validate(
            {
                "vars": 2,
                "terms": [
                    {"index": [1], "poly": [{"exps": [0, 0], "coeff": "1"}]},
                    {"index": [1, 2], "poly": [{"exps": [0, 0], "coeff": "1"}]},
                ],
            }
        )
        with pytest.raises(DimensionError):
            payload.to_domain()

    def test_duplicate_index(self):
        term = {"index": [1], "poly": []}
        with pytest.raises(ValidationError):
            FormPayload.model_validate({"vars": 1, "terms": [term, term]})

    def test_exponent_length(self):
        with pytest.raises(ValidationError):
            FormPayload.model_validate(
                {
                    "vars": 2,
                    "terms": [{"index": [1], "poly": [{"exps": [1], "coeff": "1"}]}],
                }
            )

    def test_empty_is_zero_function(self):
        alpha = FormPayload(vars=2).to_domain()
        assert alpha.is_zero and alpha.grade == 0

    def test_from_domain(self):
        alpha = form(2, {(1, 2): x(2, 1) * x(2, 2) + poly(2, {(0, 0): "1/2"})})
        assert FormPayload.from_domain(alpha).model_dump_json() == (
            '{"vars":2,"terms":[{"index":[1,2],"poly":['
            '{"exps":[0,0],"coeff":"1/2"},{"exps":[1,1],"coeff":"1"}]}]}'
        )
