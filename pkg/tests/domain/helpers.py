from fractions import Fraction

from src.modules.diff_forms.forms import PolyForm
from src.modules.diff_forms.polynomial import Polynomial
from src.modules.exterior_algebra.models import Multivector


def multivector(n, terms, dual=False):
    """multivector(3, {(1, 3): 2}) -> 2 e_13 in dimension 3"""
    grade = len(next(iter(terms))) if terms else 0
    return Multivector.from_terms(n, grade, terms, dual)


def e(n, *word, coeff=1):
    return Multivector.basis(n, word, coeff)


def e_star(n, *word, coeff=1):
    return Multivector.basis(n, word, coeff, dual=True)


def poly(nvars, terms):
    """poly(2, {(2, 0): 1}) -> x1^2"""
    return Polynomial(nvars, terms)


def x(nvars, i):
    return Polynomial.variable(nvars, i)


def form(nvars, terms):
    """form(2, {(2,): x(2, 1)}) -> x1 dx2"""
    grade = len(next(iter(terms))) if terms else 0
    return PolyForm.from_terms(nvars, grade, terms)


def q(text):
    return Fraction(text)
