from fractions import Fraction
from typing import Dict, List, Union

from pydantic import NonNegativeInt, PlainSerializer, PlainValidator, PositiveInt
from pydantic import model_validator
from typing_extensions import Annotated

from src.common.data import WireModel
from src.common.exceptions import DomainError, MalformedInputError
from src.modules.exterior_algebra.models import GradedElement, Matrix, Multivector
from src.modules.index_calculus.words import Word
from src.modules.scalars.rational import format_rational, parse_rational
from src.modules.tensor_space.models import Tensor


def _rational_from_text(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if not isinstance(value, str):
        raise ValueError(f"Rationals are written as strings, got {value!r}")
    try:
        return parse_rational(value)
    except MalformedInputError as e:
        raise ValueError(e.detail)


RationalText = Annotated[
    Fraction,
    PlainValidator(_rational_from_text),
    PlainSerializer(format_rational, return_type=str),
]


class TermPayload(WireModel):
    index: List[PositiveInt]
    coeff: RationalText


class MultivectorPayload(WireModel):
    """
    {"dim": n, "terms": [{"index": [...], "coeff": "p/q"}]}

    Shared by homogeneous and mixed-grade elements; terms are emitted sorted
    by (grade, combination rank).
    """

    dim: NonNegativeInt
    terms: List[TermPayload] = []

    @model_validator(mode="after")
    def check_indices(self) -> "MultivectorPayload":
        seen = set()
        for term in self.terms:
            word = tuple(term.index)
            if any(a >= b for a, b in zip(word, word[1:])):
                raise ValueError(f"Index {list(word)} is not strictly increasing")
            if word and word[-1] > self.dim:
                raise ValueError(f"Index {list(word)} exceeds dim {self.dim}")
            if word in seen:
                raise ValueError(f"Index {list(word)} appears twice")
            seen.add(word)
        return self

    def _by_grade(self) -> Dict[int, Dict[Word, Fraction]]:
        grouped: Dict[int, Dict[Word, Fraction]] = {}
        for term in self.terms:
            grouped.setdefault(len(term.index), {})[tuple(term.index)] = term.coeff
        return grouped

    def to_graded(self, dual: bool = False) -> GradedElement:
        return GradedElement.from_parts(
            self.dim,
            [
                Multivector.from_terms(self.dim, grade, terms, dual)
                for grade, terms in sorted(self._by_grade().items())
            ],
            dual,
        )

    def to_multivector(self, dual: bool = False) -> Multivector:
        """The homogeneous element; an empty term list reads as zero of grade 0."""
        grouped = self._by_grade()
        if len(grouped) > 1:
            raise DomainError(
                f"Expected a homogeneous element, got grades {sorted(grouped)}"
            )
        grade, terms = next(iter(grouped.items()), (0, {}))
        return Multivector.from_terms(self.dim, grade, terms, dual)

    @property
    def is_homogeneous(self) -> bool:
        return len(self._by_grade()) <= 1

    @classmethod
    def from_domain(
        cls, value: Union[Multivector, GradedElement]
    ) -> "MultivectorPayload":
        parts = value.parts if isinstance(value, GradedElement) else (value,)
        return cls(
            dim=value.ambient,
            terms=[
                TermPayload(index=list(word), coeff=coeff)
                for part in sorted(parts, key=lambda part: part.grade)
                for word, coeff in part.terms
            ],
        )


class MatrixPayload(WireModel):
    rows: NonNegativeInt
    cols: NonNegativeInt
    entries: List[List[RationalText]]

    @model_validator(mode="after")
    def check_shape(self) -> "MatrixPayload":
        if len(self.entries) != self.rows or any(
            len(row) != self.cols for row in self.entries
        ):
            raise ValueError(f"Entries do not form a {self.rows}x{self.cols} array")
        return self

    def to_domain(self) -> Matrix:
        return Matrix(self.rows, self.cols, tuple(tuple(row) for row in self.entries))

    @classmethod
    def from_domain(cls, matrix: Matrix) -> "MatrixPayload":
        return cls(
            rows=matrix.rows,
            cols=matrix.cols,
            entries=[list(row) for row in matrix.entries],
        )


class TensorPayload(WireModel):
    dim: PositiveInt
    order: NonNegativeInt
    components: List[RationalText]

    @model_validator(mode="after")
    def check_components(self) -> "TensorPayload":
        if len(self.components) != self.dim**self.order:
            raise ValueError(
                f"Expected {self.dim**self.order} components, got {len(self.components)}"
            )
        return self

    def to_domain(self) -> Tensor:
        return Tensor(self.dim, self.order, tuple(self.components))

    @classmethod
    def from_domain(cls, tensor: Tensor) -> "TensorPayload":
        return cls(
            dim=tensor.ambient, order=tensor.order, components=list(tensor.components)
        )
