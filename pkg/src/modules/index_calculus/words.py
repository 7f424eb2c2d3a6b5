from dataclasses import dataclass
from typing import Iterator, Tuple

from src.common.exceptions import DomainError, MalformedInputError

Word = Tuple[int, ...]


@dataclass(frozen=True)
class IndexWord:
    """A length-m word over {1..n}; indices are 1-based."""

    ambient: int
    word: Word

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        if self.ambient < 0:
            raise DomainError(f"Ambient dimension must be nonnegative: {self.ambient}")
        for entry in self.word:
            if not 1 <= entry <= self.ambient:
                raise DomainError(
                    f"Index {entry} outside 1..{self.ambient} in {self.word}"
                )

    @property
    def size(self) -> int:
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def __getitem__(self, position: int) -> int:
        return self.word[position]


@dataclass(frozen=True)
class Placement(IndexWord):
    """Arbitrary map {1..m} -> {1..n}, repetition allowed."""


@dataclass(frozen=True)
class Injection(IndexWord):
    """Repetition-free word."""

    def __post_init__(self):
        super().__post_init__()
        if len(set(self.word)) != len(self.word):
            raise DomainError(f"Injection has repeated entries: {self.word}")


@dataclass(frozen=True)
class Combination(IndexWord):
    """Strictly increasing word."""

    def __post_init__(self):
        super().__post_init__()
        if any(a >= b for a, b in zip(self.word, self.word[1:])):
            raise DomainError(f"Combination is not strictly increasing: {self.word}")


@dataclass(frozen=True)
class Permutation:
    """Bijection of {1..m} given by its images (one-line notation)."""

    images: Word

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise DomainError(f"Not a permutation of 1..{self.degree}: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(1, degree + 1)))

    def __call__(self, k: int) -> int:
        return self.images[k - 1]


def parse_word(text: str) -> Word:
    """Parse the comma-separated 1-based form, e.g. ``"1,3,4"``; empty text is ()."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise MalformedInputError(f"Not an index word: {text!r}")


def format_word(word) -> str:
    return ",".join(str(entry) for entry in word)
