from typing import List

from pydantic import NonNegativeInt, PositiveInt, model_validator

from src.common.data import WireModel
from src.common.exceptions import DimensionError
from src.modules.diff_forms.forms import PolyForm
from src.modules.diff_forms.polynomial import Polynomial

from .algebra import RationalText


class MonomialPayload(WireModel):
    exps: List[NonNegativeInt]
    coeff: RationalText


class FormTermPayload(WireModel):
    index: List[PositiveInt]
    poly: List[MonomialPayload]


class FormPayload(WireModel):
    """
    {"vars": n, "terms": [{"index": [...], "poly": [{"exps": [...], "coeff": "p/q"}]}]}

    Forms are homogeneous; the grade is read from the first term and an empty
    term list is the zero function.
    """

    vars: PositiveInt
    terms: List[FormTermPayload] = []

    @model_validator(mode="after")
    def check_indices(self) -> "FormPayload":
        words = [tuple(term.index) for term in self.terms]
        if len(set(words)) != len(words):
            raise ValueError("An index appears twice")
        for term in self.terms:
            for monomial in term.poly:
                if len(monomial.exps) != self.vars:
                    raise ValueError(
                        f"Exponents {monomial.exps} for a form in {self.vars} variables"
                    )
        return self

    def to_domain(self) -> PolyForm:
        grade = len(self.terms[0].index) if self.terms else 0
        if any(len(term.index) != grade for term in self.terms):
            raise DimensionError("Form terms of mixed grade")
        return PolyForm.from_terms(
            self.vars,
            grade,
            {
                tuple(term.index): Polynomial(
                    self.vars, {tuple(m.exps): m.coeff for m in term.poly}
                )
                for term in self.terms
            },
        )

    @classmethod
    def from_domain(cls, form: PolyForm) -> "FormPayload":
        return cls(
            vars=form.nvars,
            terms=[
                FormTermPayload(
                    index=list(word),
                    poly=[
                        MonomialPayload(exps=list(exps), coeff=coeff)
                        for exps, coeff in poly.terms.items()
                    ],
                )
                for word, poly in form.terms
            ],
        )
