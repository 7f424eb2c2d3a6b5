from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from src.common.exceptions import DimensionError, DomainError
from src.modules.index_calculus.enumeration import placement_rank
from src.modules.index_calculus.words import Placement
from src.modules.scalars.rational import RationalLike, as_rational


@dataclass(frozen=True)
class Vector:
    ambient: int
    components: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "components", tuple(as_rational(c) for c in self.components)
        )
        if len(self.components) != self.ambient:
            raise DimensionError(
                f"Vector of ambient {self.ambient} with {len(self.components)} components"
            )

    @classmethod
    def of(cls, *components: RationalLike) -> "Vector":
        return cls(len(components), tuple(components))


@dataclass(frozen=True)
class Tensor:
    """
    Dense order-m tensor over an n-dimensional space.

    ``components`` has n^m entries in lexicographic placement order.
    """

    ambient: int
    order: int
    components: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.ambient < 1 or self.order < 0:
            raise DomainError(
                f"Tensor needs n >= 1 and m >= 0: n={self.ambient}, m={self.order}"
            )
        object.__setattr__(
            self, "components", tuple(as_rational(c) for c in self.components)
        )
        if len(self.components) != self.ambient**self.order:
            raise DimensionError(
                f"Order-{self.order} tensor over {self.ambient} dimensions needs "
                f"{self.ambient ** self.order} components, got {len(self.components)}"
            )

    @classmethod
    def zero(cls, ambient: int, order: int) -> "Tensor":
        return cls(ambient, order, (Fraction(0),) * ambient**order)

    @classmethod
    def basis(cls, ambient: int, word: Sequence[int], coeff: RationalLike = 1):
        placement = Placement(ambient, tuple(word))
        components = [Fraction(0)] * ambient ** placement.size
        components[placement_rank(ambient, placement.word)] = as_rational(coeff)
        return cls(ambient, placement.size, tuple(components))

    @classmethod
    def from_vector(cls, vector: Vector) -> "Tensor":
        return cls(vector.ambient, 1, vector.components)

    def component(self, word: Sequence[int]) -> Fraction:
        if len(word) != self.order:
            raise DimensionError(f"Placement {tuple(word)} for order {self.order}")
        return self.components[placement_rank(self.ambient, tuple(word))]

    @property
    def is_zero(self) -> bool:
        return not any(self.components)

    def _check_compatible(self, other: "Tensor") -> None:
        if (self.ambient, self.order) != (other.ambient, other.order):
            raise DimensionError(
                f"Tensors of shape ({self.ambient}, {self.order}) and "
                f"({other.ambient}, {other.order})"
            )

    def __add__(self, other: "Tensor") -> "Tensor":
        if not isinstance(other, Tensor):
            return NotImplemented
        self._check_compatible(other)
        return Tensor(
            self.ambient,
            self.order,
            tuple(a + b for a, b in zip(self.components, other.components)),
        )

    def __neg__(self) -> "Tensor":
        return Tensor(self.ambient, self.order, tuple(-a for a in self.components))

    def __sub__(self, other: "Tensor") -> "Tensor":
        if not isinstance(other, Tensor):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: RationalLike) -> "Tensor":
        factor = as_rational(factor)
        return Tensor(
            self.ambient, self.order, tuple(a * factor for a in self.components)
        )

    def __mul__(self, factor):
        if isinstance(factor, (int, Fraction)) and not isinstance(factor, bool):
            return self.scale(factor)
        return NotImplemented

    __rmul__ = __mul__
