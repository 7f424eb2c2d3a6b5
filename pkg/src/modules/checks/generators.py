from fractions import Fraction
from typing import List, Optional, Tuple

from src.modules.checks.rng import SplitMix64
from src.modules.diff_forms.forms import PolyForm
from src.modules.diff_forms.polynomial import Polynomial
from src.modules.exterior_algebra.models import GradedElement, Matrix, Multivector
from src.modules.index_calculus.enumeration import iter_combination_words
from src.modules.index_calculus.words import Permutation
from src.modules.tensor_space.models import Tensor


def random_integer(rng: SplitMix64, bound: int) -> int:
    return rng.randint(-bound, bound)


def random_nonzero(rng: SplitMix64, bound: int) -> int:
    value = rng.randint(1, bound)
    return value if rng.coin() else -value


def random_rational(rng: SplitMix64, bound: int) -> Fraction:
    return Fraction(random_integer(rng, bound), rng.randint(1, bound))


def random_matrix(rng: SplitMix64, rows: int, cols: int, bound: int) -> Matrix:
    return Matrix.from_rows(
        [[random_integer(rng, bound) for _ in range(cols)] for _ in range(rows)], cols
    )


def random_permutation(rng: SplitMix64, degree: int) -> Permutation:
    images = list(range(1, degree + 1))
    rng.shuffle(images)
    return Permutation(tuple(images))


def random_combination_word(rng: SplitMix64, n: int, m: int) -> Tuple[int, ...]:
    return tuple(sorted(rng.sample(range(1, n + 1), m)))


def random_multivector(
    rng: SplitMix64, n: int, m: int, bound: int, dual: bool = False
) -> Multivector:
    """Each basis element present with probability 1/2, nonzero coefficients."""
    terms = {
        word: random_nonzero(rng, bound)
        for word in iter_combination_words(n, m)
        if rng.coin()
    }
    return Multivector.from_terms(n, m, terms, dual)


def random_graded(
    rng: SplitMix64, n: int, bound: int, max_grade: Optional[int] = None, dual: bool = False
) -> GradedElement:
    top = n if max_grade is None else min(n, max_grade)
    return GradedElement.from_parts(
        n,
        [random_multivector(rng, n, m, bound, dual) for m in range(top + 1) if rng.coin()],
        dual,
    )


def random_tensor(rng: SplitMix64, n: int, m: int, bound: int) -> Tensor:
    return Tensor(n, m, tuple(random_rational(rng, bound) for _ in range(n**m)))


def random_polynomial(
    rng: SplitMix64, nvars: int, degree: int, bound: int, max_terms: int = 4
) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        total = rng.randint(0, degree)
        exps = [0] * nvars
        for _ in range(total):
            exps[rng.randint(0, nvars - 1)] += 1
        terms[tuple(exps)] = random_rational(rng, bound)
    return Polynomial(nvars, terms)


def random_form(
    rng: SplitMix64, nvars: int, grade: int, degree: int, bound: int
) -> PolyForm:
    return PolyForm.from_terms(
        nvars,
        grade,
        {
            word: random_polynomial(rng, nvars, degree, bound)
            for word in iter_combination_words(nvars, grade)
            if rng.coin()
        },
    )


def random_point(rng: SplitMix64, nvars: int, bound: int) -> List[Fraction]:
    return [random_rational(rng, bound) for _ in range(nvars)]
