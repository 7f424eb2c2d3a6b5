from fractions import Fraction
from functools import lru_cache
from typing import Dict, Mapping, Optional, Sequence, Tuple

import sympy
from sympy import QQ, Poly

from src.common.exceptions import DimensionError, DomainError
from src.modules.scalars.rational import RationalLike, as_rational

Exponents = Tuple[int, ...]


@lru_cache(maxsize=None)
def coordinate_symbols(nvars: int) -> Tuple[sympy.Symbol, ...]:
    """x1..xn as sympy symbols."""
    if nvars < 1:
        raise DomainError(f"Polynomials need at least one variable: {nvars}")
    return tuple(sympy.symbols(f"x1:{nvars + 1}"))


def _to_sympy(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def _from_sympy(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def graded_lex_key(exps: Exponents):
    return sum(exps), exps


class Polynomial:
    """
    Exact polynomial in x1..xn over the rationals, backed by a sympy ``Poly``
    over QQ. Terms map exponent words to nonzero coefficients.
    """

    __slots__ = ("nvars", "_poly")

    def __init__(
        self, nvars: int, terms: Optional[Mapping[Sequence[int], RationalLike]] = None
    ):
        gens = coordinate_symbols(nvars)
        rep = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise DimensionError(
                    f"Exponent word {exps} for a polynomial in {nvars} variables"
                )
            value = as_rational(coeff)
            if value:
                rep[exps] = rep.get(exps, Fraction(0)) + value
        rep = {exps: _to_sympy(value) for exps, value in rep.items() if value}
        self.nvars = nvars
        if rep:
            self._poly = Poly.from_dict(rep, *gens, domain=QQ)
        else:
            self._poly = Poly(0, *gens, domain=QQ)

    @classmethod
    def _wrap(cls, nvars: int, poly: Poly) -> "Polynomial":
        result = cls.__new__(cls)
        result.nvars = nvars
        result._poly = poly
        return result

    @classmethod
    def constant(cls, nvars: int, value: RationalLike = 1) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        if not 1 <= i <= nvars:
            raise DomainError(f"Variable index {i} outside 1..{nvars}")
        return cls(nvars, {tuple(1 if k == i else 0 for k in range(1, nvars + 1)): 1})

    @property
    def terms(self) -> Dict[Exponents, Fraction]:
        """Nonzero terms in graded-lex order of exponents."""
        rep = {
            tuple(exps): _from_sympy(coeff)
            for exps, coeff in self._poly.as_dict().items()
            if coeff != 0
        }
        return {exps: rep[exps] for exps in sorted(rep, key=graded_lex_key)}

    @property
    def is_zero(self) -> bool:
        return bool(self._poly.is_zero)

    def as_expr(self):
        return self._poly.as_expr()

    def _check(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars:
            raise DimensionError(f"Variable counts differ: {self.nvars}, {other.nvars}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        return Polynomial._wrap(self.nvars, self._poly + other._poly)

    def __neg__(self) -> "Polynomial":
        return Polynomial._wrap(self.nvars, -self._poly)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        return Polynomial._wrap(self.nvars, self._poly - other._poly)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return Polynomial._wrap(self.nvars, self._poly * other._poly)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, factor: RationalLike) -> "Polynomial":
        factor = as_rational(factor)
        return Polynomial(
            self.nvars, {exps: coeff * factor for exps, coeff in self.terms.items()}
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, tuple(self.terms.items())))

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {self.as_expr()})"

    def partial(self, i: int) -> "Polynomial":
        if not 1 <= i <= self.nvars:
            raise DomainError(f"Variable index {i} outside 1..{self.nvars}")
        return Polynomial._wrap(
            self.nvars, self._poly.diff(coordinate_symbols(self.nvars)[i - 1])
        )

    def evaluate(self, point: Sequence[RationalLike]) -> Fraction:
        if len(point) != self.nvars:
            raise DimensionError(
                f"Point of length {len(point)} for {self.nvars} variables"
            )
        values = [as_rational(x) for x in point]
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for x, e in zip(values, exps):
                if e:
                    term *= x**e
            total += term
        return total

    def shift(self, i: int, h: RationalLike) -> "Polynomial":
        """f(x + h e_i) as a polynomial in x."""
        if not 1 <= i <= self.nvars:
            raise DomainError(f"Variable index {i} outside 1..{self.nvars}")
        gens = coordinate_symbols(self.nvars)
        shifted = self.as_expr().subs(gens[i - 1], gens[i - 1] + _to_sympy(as_rational(h)))
        return Polynomial._wrap(self.nvars, Poly(shifted, *gens, domain=QQ))


def poly_partial(f: Polynomial, i: int) -> Polynomial:
    """Formal partial derivative; the exact limit increment of f along x_i."""
    return f.partial(i)


def increment_remainder(
    f: Polynomial, i: int, point: Sequence[RationalLike], h: RationalLike
) -> Fraction:
    """
    (f(x + h e_i) - f(x)) / h - (df/dx_i)(x) at an exact point.

    As a polynomial in h this is divisible by h, so it vanishes as h -> 0;
    ``increment_law_holds`` checks that symbolically.
    """
    h = as_rational(h)
    if h == 0:
        raise DomainError("Increment step must be nonzero")
    increment = (f.shift(i, h) - f).evaluate(point)
    return increment / h - f.partial(i).evaluate(point)


def increment_law_holds(
    f: Polynomial, i: int, point: Sequence[RationalLike], h: RationalLike
) -> bool:
    """
    Check that the divided difference minus the derivative is h times a
    polynomial in h, and that its value at the given h matches exactly.
    """
    step = sympy.Symbol("h")
    gens = coordinate_symbols(f.nvars)
    values = {gen: _to_sympy(as_rational(x)) for gen, x in zip(gens, point)}
    expr = f.as_expr()
    shifted = expr.subs(gens[i - 1], gens[i - 1] + step).subs(values)
    base = expr.subs(values)
    derivative = f.partial(i).as_expr().subs(values)
    numerator = sympy.expand(shifted - base - step * derivative)
    remainder_poly = Poly(numerator, step, domain=QQ)
    # numerator = h * (divided difference - derivative): must be divisible by h^2
    divisible = remainder_poly.is_zero or all(
        exps[0] >= 2 for exps in remainder_poly.as_dict()
    )
    at_step = numerator.subs(step, _to_sympy(as_rational(h)))
    matches = _from_sympy(at_step) == increment_remainder(f, i, point, h) * as_rational(h)
    return divisible and matches
