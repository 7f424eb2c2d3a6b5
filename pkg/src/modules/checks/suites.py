"""Property suites: brute-force oracles for every law the library promises."""

from fractions import Fraction
from itertools import product
from math import comb, factorial
from typing import List, Optional

from src.common.settings import settings
from src.modules.checks.base import Property, PropertySuite, describe
from src.modules.checks.generators import (
    random_combination_word,
    random_form,
    random_graded,
    random_matrix,
    random_multivector,
    random_permutation,
    random_point,
    random_polynomial,
    random_rational,
    random_tensor,
)
from src.modules.checks.rng import SplitMix64
from src.modules.determinants.engines import (
    cauchy_binet,
    det_bareiss,
    det_laplace,
    det_leibniz,
)
from src.modules.diff_forms.forms import evaluate, exterior_derivative, form_wedge
from src.modules.diff_forms.polynomial import increment_law_holds
from src.modules.exterior_algebra.clutch import clutch
from src.modules.exterior_algebra.functor import apply_map, exterior_power_map
from src.modules.exterior_algebra.models import GradedElement, Matrix, Multivector
from src.modules.exterior_algebra.pairing import (
    contract_sequence,
    dual_basis,
    pair,
    pair_chains,
)
from src.modules.exterior_algebra.wedge import wedge, wedge_vectors
from src.modules.index_calculus.enumeration import (
    enum_combinations,
    enum_injections,
    enum_placements,
    rank_combination,
    unrank_combination,
)
from src.modules.index_calculus.parity import (
    compose,
    decompose_injection,
    parity,
    recompose_injection,
    split_sign,
    transposition_decomposition,
)
from src.modules.index_calculus.words import Combination
from src.modules.tensor_space.operations import (
    alt,
    embed_multivector,
    is_alternating,
    project_multivector,
    tensor_product,
)


def _bound() -> int:
    return settings.check_max_entry


class IndexSuite(PropertySuite):
    name = "index"

    def properties(self) -> List[Property]:
        return [
            Property("counting_laws", self.counting_laws),
            Property("injection_isomorphism", self.injection_isomorphism),
            Property("parity_multiplicative", self.parity_multiplicative),
            Property("parity_transpositions", self.parity_transpositions),
            Property("split_sign_symmetry", self.split_sign_symmetry),
            Property("rank_roundtrip", self.rank_roundtrip),
        ]

    @staticmethod
    def counting_laws(rng: SplitMix64, n: int) -> Optional[str]:
        size = rng.randint(1, min(n, 5))
        m = rng.randint(0, size)
        counts = (
            sum(1 for _ in enum_combinations(size, m)),
            sum(1 for _ in enum_injections(size, m)),
            sum(1 for _ in enum_placements(size, m)),
        )
        expected = (comb(size, m), factorial(size) // factorial(size - m), size**m)
        if counts != expected:
            return describe(n=size, m=m, counts=list(counts), expected=list(expected))
        return None

    @staticmethod
    def injection_isomorphism(rng: SplitMix64, n: int) -> Optional[str]:
        size = rng.randint(1, min(n, 5))
        m = rng.randint(0, size)
        fibers = {}
        for injection in enum_injections(size, m):
            combination, permutation = decompose_injection(injection)
            if recompose_injection(combination, permutation) != injection:
                return describe(injection=injection)
            fibers[combination.word] = fibers.get(combination.word, 0) + 1
        if len(fibers) != comb(size, m) or any(
            count != factorial(m) for count in fibers.values()
        ):
            return describe(n=size, m=m, fiber_sizes=sorted(set(fibers.values())))
        return None

    @staticmethod
    def parity_multiplicative(rng: SplitMix64, n: int) -> Optional[str]:
        degree = rng.randint(1, min(n, 5))
        p = random_permutation(rng, degree)
        q = random_permutation(rng, degree)
        if parity(compose(p, q)) != parity(p) * parity(q):
            return describe(p=p, q=q)
        return None

    @staticmethod
    def parity_transpositions(rng: SplitMix64, n: int) -> Optional[str]:
        p = random_permutation(rng, rng.randint(1, min(n, 6)))
        swaps = len(transposition_decomposition(p))
        if parity(p) != (-1) ** swaps:
            return describe(p=p, transpositions=swaps)
        return None

    @staticmethod
    def split_sign_symmetry(rng: SplitMix64, n: int) -> Optional[str]:
        size = rng.randint(1, min(n, 6))
        left, right = [], []
        for i in range(1, size + 1):
            slot = rng.randint(0, 2)
            if slot == 0:
                left.append(i)
            elif slot == 1:
                right.append(i)
        a, b = Combination(size, tuple(left)), Combination(size, tuple(right))
        if split_sign(a, b) * split_sign(b, a) != (-1) ** (a.size * b.size):
            return describe(a=a, b=b)
        return None

    @staticmethod
    def rank_roundtrip(rng: SplitMix64, n: int) -> Optional[str]:
        size = rng.randint(1, min(n, 10))
        m = rng.randint(0, size)
        r = rng.randint(0, comb(size, m) - 1)
        combination = unrank_combination(size, m, r)
        if rank_combination(combination) != r:
            return describe(n=size, m=m, rank=r, combination=combination)
        return None


class FunctorialitySuite(PropertySuite):
    name = "functoriality"

    def properties(self) -> List[Property]:
        return [
            Property("compound_multiplicative", self.compound_multiplicative),
            Property("compound_identity", self.compound_identity),
            Property("compound_transpose", self.compound_transpose),
            Property("top_grade_determinant", self.top_grade_determinant),
            Property("apply_map_columns", self.apply_map_columns),
        ]

    @staticmethod
    def compound_multiplicative(rng: SplitMix64, n: int) -> Optional[str]:
        size = min(n, 5)
        r, k, c = (rng.randint(1, size) for _ in range(3))
        a = random_matrix(rng, r, k, _bound())
        b = random_matrix(rng, k, c, _bound())
        composite = a @ b
        for m in range(min(r, k, c) + 1):
            if exterior_power_map(composite, m) != exterior_power_map(
                a, m
            ) @ exterior_power_map(b, m):
                return describe(a=a, b=b, m=m)
        return None

    @staticmethod
    def compound_identity(rng: SplitMix64, n: int) -> Optional[str]:
        size = rng.randint(1, min(n, 5))
        for m in range(size + 1):
            if exterior_power_map(Matrix.identity(size), m) != Matrix.identity(
                comb(size, m)
            ):
                return describe(size=size, m=m)
        return None

    @staticmethod
    def compound_transpose(rng: SplitMix64, n: int) -> Optional[str]:
        size = min(n, 5)
        a = random_matrix(rng, rng.randint(1, size), rng.randint(1, size), _bound())
        m = rng.randint(0, min(a.rows, a.cols))
        if exterior_power_map(a.transpose(), m) != exterior_power_map(a, m).transpose():
            return describe(a=a, m=m)
        return None

    @staticmethod
    def top_grade_determinant(rng: SplitMix64, n: int) -> Optional[str]:
        size = rng.randint(1, min(n, 5))
        a = random_matrix(rng, size, size, _bound())
        if exterior_power_map(a, size) != Matrix.from_rows([[det_leibniz(a)]]):
            return describe(a=a)
        return None

    @staticmethod
    def apply_map_columns(rng: SplitMix64, n: int) -> Optional[str]:
        size = min(n, 5)
        a = random_matrix(rng, rng.randint(1, size), rng.randint(1, size), _bound())
        m = rng.randint(1, min(a.rows, a.cols))
        word = random_combination_word(rng, a.cols, m)
        columns = [Multivector.from_vector(a.column(j)) for j in word]
        if apply_map(a, Multivector.basis(a.cols, word)) != wedge_vectors(*columns):
            return describe(a=a, word=list(word))
        return None


class WedgeSuite(PropertySuite):
    name = "wedge"

    def properties(self) -> List[Property]:
        return [
            Property("graded_anticommutativity", self.graded_anticommutativity),
            Property("associativity", self.associativity),
            Property("unit_law", self.unit_law),
            Property("clutch_composition", self.clutch_composition),
        ]

    @staticmethod
    def graded_anticommutativity(rng: SplitMix64, n: int) -> Optional[str]:
        size = rng.randint(1, min(n, 5))
        p, q = rng.randint(0, min(3, size)), rng.randint(0, min(3, size))
        u = random_multivector(rng, size, p, _bound())
        v = random_multivector(rng, size, q, _bound())
        if wedge(u, v) != wedge(v, u).scale((-1) ** (p * q)):
            return describe(u=u, v=v)
        return None

    @staticmethod
    def associativity(rng: SplitMix64, n: int) -> Optional[str]:
        size = rng.randint(1, min(n, 4))
        u, v, w = (
            random_multivector(rng, size, rng.randint(0, size), _bound())
            for _ in range(3)
        )
        if wedge(wedge(u, v), w) != wedge(u, wedge(v, w)):
            return describe(u=u, v=v, w=w)
        return None

    @staticmethod
    def unit_law(rng: SplitMix64, n: int) -> Optional[str]:
        size = rng.randint(1, min(n, 5))
        w = random_graded(rng, size, _bound())
        if clutch(GradedElement.one(size))(w) != w:
            return describe(w=w)
        return None

    @staticmethod
    def clutch_composition(rng: SplitMix64, n: int) -> Optional[str]:
        size = rng.randint(1, min(n, 4))
        u, v, w = (random_graded(rng, size, _bound(), max_grade=2) for _ in range(3))
        if clutch(u)(clutch(v)(w)) != (clutch(u) @ clutch(v))(w):
            return describe(u=u, v=v, w=w)
        return None


class AltSuite(PropertySuite):
    name = "alt"

    def properties(self) -> List[Property]:
        return [
            Property("projector", self.projector),
            Property("image_alternating", self.image_alternating),
            Property("linearity", self.linearity),
            Property("embed_project_roundtrip", self.embed_project_roundtrip),
            Property("wedge_compatibility", self.wedge_compatibility),
        ]

    @staticmethod
    def _small_tensor(rng: SplitMix64, n: int):
        return random_tensor(
            rng, rng.randint(1, min(n, 3)), rng.randint(0, 3), _bound()
        )

    @classmethod
    def projector(cls, rng: SplitMix64, n: int) -> Optional[str]:
        t = cls._small_tensor(rng, n)
        once = alt(t)
        if alt(once) != once:
            return describe(t=t)
        return None

    @classmethod
    def image_alternating(cls, rng: SplitMix64, n: int) -> Optional[str]:
        t = cls._small_tensor(rng, n)
        if not is_alternating(alt(t)):
            return describe(t=t)
        return None

    @staticmethod
    def linearity(rng: SplitMix64, n: int) -> Optional[str]:
        size, order = rng.randint(1, min(n, 3)), rng.randint(0, 3)
        s = random_tensor(rng, size, order, _bound())
        t = random_tensor(rng, size, order, _bound())
        a, b = random_rational(rng, _bound()), random_rational(rng, _bound())
        if alt(s * a + t * b) != alt(s) * a + alt(t) * b:
            return describe(s=s, t=t, a=a, b=b)
        return None

    @staticmethod
    def embed_project_roundtrip(rng: SplitMix64, n: int) -> Optional[str]:
        size = rng.randint(1, min(n, 5))
        v = random_multivector(rng, size, rng.randint(0, min(size, 3)), _bound())
        if project_multivector(embed_multivector(v)) != v:
            return describe(v=v)
        return None

    @staticmethod
    def wedge_compatibility(rng: SplitMix64, n: int) -> Optional[str]:
        size = rng.randint(1, min(n, 4))
        p = rng.randint(0, size)
        q = rng.randint(0, size - p)
        u = random_multivector(rng, size, p, _bound())
        v = random_multivector(rng, size, q, _bound())
        weight = Fraction(factorial(p + q), factorial(p) * factorial(q))
        lhs = embed_multivector(wedge(u, v))
        rhs = alt(tensor_product(embed_multivector(u), embed_multivector(v))) * weight
        if lhs != rhs:
            return describe(u=u, v=v)
        return None


class LaplaceSuite(PropertySuite):
    name = "laplace"

    def properties(self) -> List[Property]:
        return [
            Property("method_agreement", self.method_agreement),
            Property("alternating_rows", self.alternating_rows),
            Property("multiplicativity", self.multiplicativity),
            Property("transpose_invariance", self.transpose_invariance),
        ]

    @staticmethod
    def method_agreement(rng: SplitMix64, n: int) -> Optional[str]:
        size = rng.randint(1, min(n, 6))
        a = random_matrix(rng, size, size, _bound())
        expected = det_leibniz(a)
        for m in range(1, size + 1):
            rowset = Combination(size, random_combination_word(rng, size, m))
            if det_laplace(a, rowset) != expected:
                return describe(a=a, rowset=rowset)
        if exterior_power_map(a, size).entry(1, 1) != expected:
            return describe(a=a, method="compound")
        if det_bareiss(a) != expected:
            return describe(a=a, method="bareiss")
        return None

    @staticmethod
    def alternating_rows(rng: SplitMix64, n: int) -> Optional[str]:
        size = rng.randint(2, max(2, min(n, 5)))
        a = random_matrix(rng, size, size, _bound())
        i, j = random_combination_word(rng, size, 2)
        if det_leibniz(a.swap_rows(i, j)) != -det_leibniz(a):
            return describe(a=a, swapped=[i, j])
        rows = [list(row) for row in a.entries]
        rows[j - 1] = rows[i - 1]
        repeated = Matrix.from_rows(rows, size)
        if det_leibniz(repeated) != 0:
            return describe(a=repeated)
        return None

    @staticmethod
    def multiplicativity(rng: SplitMix64, n: int) -> Optional[str]:
        size = rng.randint(1, min(n, 5))
        a = random_matrix(rng, size, size, _bound())
        b = random_matrix(rng, size, size, _bound())
        if det_leibniz(a @ b) != det_leibniz(a) * det_leibniz(b):
            return describe(a=a, b=b)
        return None

    @staticmethod
    def transpose_invariance(rng: SplitMix64, n: int) -> Optional[str]:
        size = rng.randint(1, min(n, 6))
        a = random_matrix(rng, size, size, _bound())
        if det_leibniz(a) != det_leibniz(a.transpose()):
            return describe(a=a)
        return None


class BinetSuite(PropertySuite):
    name = "binet"

    def properties(self) -> List[Property]:
        return [Property("cauchy_binet_equals_det", self.cauchy_binet_equals_det)]

    @staticmethod
    def cauchy_binet_equals_det(rng: SplitMix64, n: int) -> Optional[str]:
        k = rng.randint(1, min(n, 6))
        r = rng.randint(1, k)
        a = random_matrix(rng, r, k, _bound())
        b = random_matrix(rng, k, r, _bound())
        if cauchy_binet(a, b) != det_leibniz(a @ b):
            return describe(a=a, b=b)
        return None


class PairingSuite(PropertySuite):
    name = "pairing"

    def properties(self) -> List[Property]:
        return [
            Property("gram_identity", self.gram_identity),
            Property("adjointness", self.adjointness),
            Property("iterated_contraction", self.iterated_contraction),
            Property("chains_gradewise", self.chains_gradewise),
        ]

    @staticmethod
    def gram_identity(rng: SplitMix64, n: int) -> Optional[str]:
        size = rng.randint(1, min(n, 5))
        m = rng.randint(0, size)
        words = [c.word for c in enum_combinations(size, m)]
        for left, right in product(words, repeat=2):
            expected = 1 if left == right else 0
            if pair(dual_basis(size, left), Multivector.basis(size, right)) != expected:
                return describe(n=size, dual=list(left), primal=list(right))
        return None

    @staticmethod
    def adjointness(rng: SplitMix64, n: int) -> Optional[str]:
        size = min(n, 5)
        a = random_matrix(rng, rng.randint(1, size), rng.randint(1, size), _bound())
        m = rng.randint(0, min(a.rows, a.cols))
        v = random_multivector(rng, a.cols, m, _bound())
        w = random_multivector(rng, a.rows, m, _bound(), dual=True)
        if pair(w, apply_map(a, v)) != pair(apply_map(a.transpose(), w), v):
            return describe(a=a, w=w, v=v)
        return None

    @staticmethod
    def iterated_contraction(rng: SplitMix64, n: int) -> Optional[str]:
        size = rng.randint(1, min(n, 5))
        m = rng.randint(1, size)
        index = random_combination_word(rng, size, m)
        v = random_multivector(rng, size, m, _bound())
        contracted = contract_sequence(index, v).coefficient(())
        if contracted != pair(dual_basis(size, index), v):
            return describe(index=list(index), v=v)
        return None

    @staticmethod
    def chains_gradewise(rng: SplitMix64, n: int) -> Optional[str]:
        size = rng.randint(1, min(n, 5))
        w = random_graded(rng, size, _bound(), dual=True)
        v = random_graded(rng, size, _bound())
        expected = sum(
            (pair(w.part(m), v.part(m)) for m in range(size + 1)), Fraction(0)
        )
        if pair_chains(w, v) != expected:
            return describe(w=w, v=v)
        return None


class FormsSuite(PropertySuite):
    name = "dforms"

    def properties(self) -> List[Property]:
        return [
            Property("nilpotency", self.nilpotency),
            Property("graded_leibniz", self.graded_leibniz),
            Property("increment_law", self.increment_law),
            Property("pointwise_wedge", self.pointwise_wedge),
        ]

    @staticmethod
    def nilpotency(rng: SplitMix64, n: int) -> Optional[str]:
        nvars = rng.randint(1, min(n, 4))
        alpha = random_form(rng, nvars, rng.randint(0, nvars), 3, _bound())
        if not exterior_derivative(exterior_derivative(alpha)).is_zero:
            return describe(alpha=alpha)
        return None

    @staticmethod
    def graded_leibniz(rng: SplitMix64, n: int) -> Optional[str]:
        nvars = rng.randint(1, min(n, 4))
        p = rng.randint(0, nvars)
        q = rng.randint(0, nvars - p)
        alpha = random_form(rng, nvars, p, 3, _bound())
        beta = random_form(rng, nvars, q, 3, _bound())
        lhs = exterior_derivative(form_wedge(alpha, beta))
        rhs = form_wedge(exterior_derivative(alpha), beta) + form_wedge(
            alpha, exterior_derivative(beta)
        ).scale((-1) ** p)
        if lhs != rhs:
            return describe(alpha=alpha, beta=beta)
        return None

    @staticmethod
    def increment_law(rng: SplitMix64, n: int) -> Optional[str]:
        nvars = rng.randint(1, min(n, 4))
        f = random_polynomial(rng, nvars, 3, _bound())
        i = rng.randint(1, nvars)
        point = random_point(rng, nvars, _bound())
        h = Fraction(rng.randint(1, _bound()), rng.randint(1, _bound()))
        if not increment_law_holds(f, i, point, h):
            return describe(f=f, i=i, point=point, h=h)
        return None

    @staticmethod
    def pointwise_wedge(rng: SplitMix64, n: int) -> Optional[str]:
        nvars = rng.randint(1, min(n, 4))
        p = rng.randint(0, nvars)
        q = rng.randint(0, nvars - p)
        alpha = random_form(rng, nvars, p, 3, _bound())
        beta = random_form(rng, nvars, q, 3, _bound())
        point = random_point(rng, nvars, _bound())
        if evaluate(form_wedge(alpha, beta), point) != wedge(
            evaluate(alpha, point), evaluate(beta, point)
        ):
            return describe(alpha=alpha, beta=beta, point=point)
        return None


SUITE_ORDER = (
    IndexSuite,
    FunctorialitySuite,
    WedgeSuite,
    AltSuite,
    LaplaceSuite,
    BinetSuite,
    PairingSuite,
    FormsSuite,
)
