from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from src.common.exceptions import DimensionError, DomainError
from src.modules.index_calculus.enumeration import (
    combination_rank,
    iter_combination_words,
)
from src.modules.index_calculus.words import Combination, Word
from src.modules.scalars.rational import RationalLike, as_rational, binomial

Terms = Tuple[Tuple[Word, Fraction], ...]


def _canonical_terms(terms: Mapping[Word, RationalLike]) -> Terms:
    cleaned = {}
    for word, coeff in terms.items():
        value = as_rational(coeff)
        if value != 0:
            cleaned[tuple(word)] = value
    return tuple(sorted(cleaned.items()))


@dataclass(frozen=True)
class Multivector:
    """
    Sparse element of the m-th exterior power of an n-dimensional space.

    ``terms`` is the canonical form: combination words in rank order with
    nonzero coefficients. ``dual`` flags elements of the dual exterior power;
    they share the coordinates of the primal basis.
    """

    ambient: int
    grade: int
    terms: Terms = ()
    dual: bool = False

    def __post_init__(self):
        if self.grade < 0:
            raise DomainError(f"Negative grade: {self.grade}")
        previous = None
        for word, coeff in self.terms:
            if len(word) != self.grade:
                raise DimensionError(f"Term {word} does not have grade {self.grade}")
            Combination(self.ambient, word)
            if coeff == 0:
                raise DomainError(f"Stored zero coefficient at {word}")
            if previous is not None and word <= previous:
                raise DomainError("Terms are not in canonical order")
            previous = word

    @classmethod
    def from_terms(
        cls,
        ambient: int,
        grade: int,
        terms: Mapping[Word, RationalLike],
        dual: bool = False,
    ) -> "Multivector":
        return cls(ambient, grade, _canonical_terms(terms), dual)

    @classmethod
    def zero(cls, ambient: int, grade: int, dual: bool = False) -> "Multivector":
        return cls(ambient, grade, (), dual)

    @classmethod
    def basis(
        cls, ambient: int, word: Sequence[int], coeff: RationalLike = 1, dual=False
    ) -> "Multivector":
        combination = Combination(ambient, tuple(word))
        return cls.from_terms(ambient, combination.size, {combination.word: coeff}, dual)

    @classmethod
    def scalar(cls, ambient: int, value: RationalLike = 1, dual=False) -> "Multivector":
        return cls.from_terms(ambient, 0, {(): value}, dual)

    @classmethod
    def from_vector(cls, components: Sequence[RationalLike], dual=False):
        return cls.from_terms(
            len(components),
            1,
            {(i,): c for i, c in enumerate(components, start=1)},
            dual,
        )

    @classmethod
    def from_coordinates(
        cls, ambient: int, grade: int, coordinates: Sequence[RationalLike], dual=False
    ) -> "Multivector":
        words = list(iter_combination_words(ambient, grade))
        if len(coordinates) != len(words):
            raise DimensionError(
                f"Expected {len(words)} coordinates, got {len(coordinates)}"
            )
        return cls.from_terms(ambient, grade, dict(zip(words, coordinates)), dual)

    def to_coordinates(self) -> List[Fraction]:
        """Dense coordinate column in combination-rank order."""
        coordinates = [Fraction(0)] * binomial(self.ambient, self.grade)
        for word, coeff in self.terms:
            coordinates[combination_rank(self.ambient, word)] = coeff
        return coordinates

    def as_dict(self) -> Dict[Word, Fraction]:
        return dict(self.terms)

    def coefficient(self, word: Sequence[int]) -> Fraction:
        return self.as_dict().get(tuple(word), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def as_dual(self) -> "Multivector":
        return Multivector(self.ambient, self.grade, self.terms, True)

    def _check_compatible(self, other: "Multivector") -> None:
        if self.ambient != other.ambient:
            raise DimensionError(
                f"Ambient dimensions differ: {self.ambient}, {other.ambient}"
            )
        if self.grade != other.grade:
            raise DimensionError(f"Grades differ: {self.grade}, {other.grade}")
        if self.dual != other.dual:
            raise DomainError("Cannot combine primal and dual elements")

    def __add__(self, other: "Multivector") -> "Multivector":
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_compatible(other)
        merged = self.as_dict()
        for word, coeff in other.terms:
            merged[word] = merged.get(word, 0) + coeff
        return Multivector.from_terms(self.ambient, self.grade, merged, self.dual)

    def __neg__(self) -> "Multivector":
        return Multivector(
            self.ambient,
            self.grade,
            tuple((word, -coeff) for word, coeff in self.terms),
            self.dual,
        )

    def __sub__(self, other: "Multivector") -> "Multivector":
        if not isinstance(other, Multivector):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: RationalLike) -> "Multivector":
        factor = as_rational(factor)
        return Multivector.from_terms(
            self.ambient,
            self.grade,
            {word: coeff * factor for word, coeff in self.terms},
            self.dual,
        )

    def __mul__(self, factor):
        if isinstance(factor, (int, Fraction)) and not isinstance(factor, bool):
            return self.scale(factor)
        return NotImplemented

    __rmul__ = __mul__


@dataclass(frozen=True)
class GradedElement:
    """
    Element of the full exterior algebra, the direct sum over grades 0..n.

    ``parts`` holds the nonzero homogeneous components in increasing grade.
    """

    ambient: int
    parts: Tuple[Multivector, ...] = ()
    dual: bool = False

    def __post_init__(self):
        grades = [part.grade for part in self.parts]
        if grades != sorted(set(grades)):
            raise DomainError(f"Parts are not in strictly increasing grade: {grades}")
        for part in self.parts:
            if part.ambient != self.ambient:
                raise DimensionError(
                    f"Part of ambient {part.ambient} in element of ambient {self.ambient}"
                )
            if part.dual != self.dual:
                raise DomainError("Mixed primal and dual parts")
            if part.is_zero:
                raise DomainError(f"Stored zero part of grade {part.grade}")

    @classmethod
    def from_parts(
        cls, ambient: int, parts: Iterable[Multivector], dual: bool = False
    ) -> "GradedElement":
        by_grade: Dict[int, Multivector] = {}
        for part in parts:
            if part.ambient != ambient:
                raise DimensionError(
                    f"Part of ambient {part.ambient} in element of ambient {ambient}"
                )
            if part.dual != dual:
                raise DomainError("Mixed primal and dual parts")
            if part.grade in by_grade:
                by_grade[part.grade] = by_grade[part.grade] + part
            else:
                by_grade[part.grade] = part
        return cls(
            ambient,
            tuple(
                by_grade[grade] for grade in sorted(by_grade) if not by_grade[grade].is_zero
            ),
            dual,
        )

    @classmethod
    def from_multivector(cls, v: Multivector) -> "GradedElement":
        return cls.from_parts(v.ambient, [v], v.dual)

    @classmethod
    def zero(cls, ambient: int, dual: bool = False) -> "GradedElement":
        return cls(ambient, (), dual)

    @classmethod
    def one(cls, ambient: int, dual: bool = False) -> "GradedElement":
        return cls.from_multivector(Multivector.scalar(ambient, 1, dual))

    @property
    def grades(self) -> List[int]:
        return [part.grade for part in self.parts]

    @property
    def is_zero(self) -> bool:
        return not self.parts

    def part(self, grade: int) -> Multivector:
        for part in self.parts:
            if part.grade == grade:
                return part
        return Multivector.zero(self.ambient, grade, self.dual)

    def __add__(self, other: "GradedElement") -> "GradedElement":
        if not isinstance(other, GradedElement):
            return NotImplemented
        if self.ambient != other.ambient:
            raise DimensionError(
                f"Ambient dimensions differ: {self.ambient}, {other.ambient}"
            )
        if self.dual != other.dual:
            raise DomainError("Cannot combine primal and dual elements")
        return GradedElement.from_parts(
            self.ambient, self.parts + other.parts, self.dual
        )

    def __neg__(self) -> "GradedElement":
        return GradedElement(self.ambient, tuple(-part for part in self.parts), self.dual)

    def __sub__(self, other: "GradedElement") -> "GradedElement":
        if not isinstance(other, GradedElement):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: RationalLike) -> "GradedElement":
        return GradedElement.from_parts(
            self.ambient, [part.scale(factor) for part in self.parts], self.dual
        )


@dataclass(frozen=True)
class Matrix:
    """Dense exact r x c matrix; (i, j) accessors are 1-based."""

    rows: int
    cols: int
    entries: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DomainError(f"Negative shape: {self.rows}x{self.cols}")
        if len(self.entries) != self.rows or any(
            len(row) != self.cols for row in self.entries
        ):
            raise DimensionError(f"Entries do not form a {self.rows}x{self.cols} array")

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[RationalLike]], cols: Optional[int] = None
    ) -> "Matrix":
        entries = tuple(tuple(as_rational(value) for value in row) for row in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(len(entries), cols, entries)

    @classmethod
    def identity(cls, size: int) -> "Matrix":
        return cls.from_rows(
            [[1 if i == j else 0 for j in range(size)] for i in range(size)], size
        )

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls.from_rows([[0] * cols for _ in range(rows)], cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i - 1][j - 1]

    def column(self, j: int) -> Tuple[Fraction, ...]:
        return tuple(row[j - 1] for row in self.entries)

    def submatrix(self, row_word: Sequence[int], col_word: Sequence[int]) -> "Matrix":
        return Matrix(
            len(row_word),
            len(col_word),
            tuple(
                tuple(self.entries[i - 1][j - 1] for j in col_word) for i in row_word
            ),
        )

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols,
            self.rows,
            tuple(
                tuple(self.entries[i][j] for i in range(self.rows))
                for j in range(self.cols)
            ),
        )

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionError(
                f"Cannot compose {self.rows}x{self.cols} with {other.rows}x{other.cols}"
            )
        return Matrix(
            self.rows,
            other.cols,
            tuple(
                tuple(
                    sum(
                        (self.entries[i][k] * other.entries[k][j] for k in range(self.cols)),
                        Fraction(0),
                    )
                    for j in range(other.cols)
                )
                for i in range(self.rows)
            ),
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.matmul(other)

    def swap_rows(self, i: int, j: int) -> "Matrix":
        entries = list(self.entries)
        entries[i - 1], entries[j - 1] = entries[j - 1], entries[i - 1]
        return Matrix(self.rows, self.cols, tuple(entries))
