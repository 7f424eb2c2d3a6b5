"""Polynomial differential forms on the trivial bundle over x1..xn."""

from dataclasses import dataclass
from typing import Dict, Mapping, Sequence, Tuple

from src.common.exceptions import DimensionError, DomainError
from src.modules.diff_forms.polynomial import Polynomial
from src.modules.exterior_algebra.models import Multivector
from src.modules.index_calculus.parity import shuffle_sign
from src.modules.index_calculus.words import Combination, Word
from src.modules.scalars.rational import RationalLike

FormTerms = Tuple[Tuple[Word, Polynomial], ...]


@dataclass(frozen=True)
class PolyForm:
    """
    Homogeneous form of the given grade: sum of f_I dx_I over combinations I,
    stored in rank order with no identically-zero coefficient.
    """

    nvars: int
    grade: int
    terms: FormTerms = ()

    def __post_init__(self):
        if self.grade < 0:
            raise DomainError(f"Negative grade: {self.grade}")
        for word, poly in self.terms:
            if len(word) != self.grade:
                raise DimensionError(f"Term {word} does not have grade {self.grade}")
            Combination(self.nvars, word)
            if poly.nvars != self.nvars:
                raise DimensionError(
                    f"Coefficient in {poly.nvars} variables for a form in {self.nvars}"
                )
            if poly.is_zero:
                raise DomainError(f"Stored zero coefficient at {word}")

    @classmethod
    def from_terms(
        cls, nvars: int, grade: int, terms: Mapping[Sequence[int], Polynomial]
    ) -> "PolyForm":
        return cls(
            nvars,
            grade,
            tuple(
                sorted(
                    ((tuple(word), poly) for word, poly in terms.items() if not poly.is_zero),
                    key=lambda item: item[0],
                )
            ),
        )

    @classmethod
    def zero(cls, nvars: int, grade: int) -> "PolyForm":
        return cls(nvars, grade, ())

    @classmethod
    def function(cls, f: Polynomial) -> "PolyForm":
        """A 0-form."""
        return cls.from_terms(f.nvars, 0, {(): f})

    @classmethod
    def coordinate_differential(cls, nvars: int, i: int) -> "PolyForm":
        """dx_i."""
        return cls.from_terms(nvars, 1, {(i,): Polynomial.constant(nvars, 1)})

    @classmethod
    def from_multivector(cls, v: Multivector) -> "PolyForm":
        """Constant-coefficient form with the coordinates of v."""
        return cls.from_terms(
            v.ambient,
            v.grade,
            {word: Polynomial.constant(v.ambient, coeff) for word, coeff in v.terms},
        )

    def as_dict(self) -> Dict[Word, Polynomial]:
        return dict(self.terms)

    def coefficient(self, word: Sequence[int]) -> Polynomial:
        return self.as_dict().get(tuple(word), Polynomial(self.nvars))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "PolyForm") -> None:
        if self.nvars != other.nvars:
            raise DimensionError(f"Variable counts differ: {self.nvars}, {other.nvars}")
        if self.grade != other.grade:
            raise DimensionError(f"Grades differ: {self.grade}, {other.grade}")

    def __add__(self, other: "PolyForm") -> "PolyForm":
        if not isinstance(other, PolyForm):
            return NotImplemented
        self._check(other)
        merged = self.as_dict()
        for word, poly in other.terms:
            merged[word] = merged[word] + poly if word in merged else poly
        return PolyForm.from_terms(self.nvars, self.grade, merged)

    def __neg__(self) -> "PolyForm":
        return PolyForm(
            self.nvars, self.grade, tuple((word, -poly) for word, poly in self.terms)
        )

    def __sub__(self, other: "PolyForm") -> "PolyForm":
        if not isinstance(other, PolyForm):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: RationalLike) -> "PolyForm":
        return PolyForm.from_terms(
            self.nvars, self.grade, {word: poly.scale(factor) for word, poly in self.terms}
        )


def form_wedge(alpha: PolyForm, beta: PolyForm) -> PolyForm:
    """Wedge with polynomial coefficient products and split_sign signs."""
    if alpha.nvars != beta.nvars:
        raise DimensionError(
            f"Variable counts differ: {alpha.nvars}, {beta.nvars}"
        )
    grade = alpha.grade + beta.grade
    if grade > alpha.nvars:
        return PolyForm.zero(alpha.nvars, grade)
    coefficients: Dict[Word, Polynomial] = {}
    for left, f in alpha.terms:
        for right, g in beta.terms:
            sign = shuffle_sign(left, right)
            if sign == 0:
                continue
            key = tuple(sorted(left + right))
            product = f * g if sign > 0 else -(f * g)
            coefficients[key] = coefficients[key] + product if key in coefficients else product
    return PolyForm.from_terms(alpha.nvars, grade, coefficients)


def exterior_derivative(alpha: PolyForm) -> PolyForm:
    """d(f dx_I) = sum_i (df/dx_i) dx_i ^ dx_I."""
    n = alpha.nvars
    grade = alpha.grade + 1
    if grade > n:
        return PolyForm.zero(n, grade)
    coefficients: Dict[Word, Polynomial] = {}
    for word, f in alpha.terms:
        for i in range(1, n + 1):
            if i in word:
                continue
            derivative = f.partial(i)
            if derivative.is_zero:
                continue
            key = tuple(sorted((i,) + word))
            if shuffle_sign((i,), word) < 0:
                derivative = -derivative
            coefficients[key] = (
                coefficients[key] + derivative if key in coefficients else derivative
            )
    return PolyForm.from_terms(n, grade, coefficients)


def evaluate(alpha: PolyForm, point: Sequence[RationalLike]) -> Multivector:
    """Pointwise value of the section at an exact point."""
    if len(point) != alpha.nvars:
        raise DimensionError(
            f"Point of length {len(point)} for a form in {alpha.nvars} variables"
        )
    return Multivector.from_terms(
        alpha.nvars,
        alpha.grade,
        {word: f.evaluate(point) for word, f in alpha.terms},
    )
