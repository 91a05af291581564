#!/usr/bin/env python3
"""
Generator Schedule Model for whitealg

This module defines the generator schedule (the rational wedge of spheres the
engine works over) and the Hall basis elements built on it.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Tuple

from src.errors import OddParityUnsupported, UnknownGenerator
from src.models.words import Word, is_lyndon, standard_factorization, word_degree

FAMILY_HP = "HP"
FAMILY_CP = "CP"
FAMILY_RP = "RP"
FAMILY_CUSTOM = "custom"
FAMILIES = (FAMILY_HP, FAMILY_CP, FAMILY_RP, FAMILY_CUSTOM)


@dataclass(frozen=True)
class Generator:
    """
    One homotopy generator of the schedule.

    Attributes:
        name: Display name (x1, xi3, ...)
        whitehead_degree: Topological degree of the sphere class
        samelson_degree: Degree of the adjoint class in the loop space
    """

    name: str
    whitehead_degree: int
    samelson_degree: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "whitehead_degree": self.whitehead_degree,
            "samelson_degree": self.samelson_degree,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Generator":
        return cls(
            name=str(data["name"]),
            whitehead_degree=int(data["whitehead_degree"]),
            samelson_degree=int(data["samelson_degree"]),
        )


@dataclass(frozen=True)
class GeneratorSchedule:
    """
    Ordered homotopy generators with their Whitehead and Samelson degrees.

    Attributes:
        generators: Generators in index order (index 1 is the first entry)
        family_tag: One of HP, CP, RP, custom
    """

    generators: Tuple[Generator, ...] = ()
    family_tag: str = FAMILY_CUSTOM
    samelson_degrees: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        """Post-initialization validation and setup."""
        object.__setattr__(self, "generators", tuple(self.generators))
        self.validate()
        object.__setattr__(
            self,
            "samelson_degrees",
            tuple(g.samelson_degree for g in self.generators),
        )

    def validate(self) -> None:
        """
        Validate the schedule.

        Raises:
            OddParityUnsupported: If a generator has odd Samelson degree
            ValueError: If any other invariant is broken
        """
        if self.family_tag not in FAMILIES:
            raise ValueError(f"Unknown schedule family: {self.family_tag}")

        names = set()
        previous = 0
        for index, gen in enumerate(self.generators, start=1):
            if gen.samelson_degree != gen.whitehead_degree - 1:
                raise ValueError(
                    f"Generator {gen.name}: Samelson degree must be "
                    "Whitehead degree - 1"
                )
            if gen.samelson_degree <= 0:
                raise ValueError(f"Generator {gen.name}: degree must be positive")
            if gen.samelson_degree % 2:
                raise OddParityUnsupported(
                    f"Generator {gen.name} has odd Samelson degree "
                    f"{gen.samelson_degree}"
                )
            if gen.whitehead_degree <= previous:
                raise ValueError("Whitehead degrees must strictly increase")
            if gen.name in names:
                raise ValueError(f"Duplicate generator name: {gen.name}")
            names.add(gen.name)
            previous = gen.whitehead_degree

            expected = self._family_degree(index)
            if expected is not None and gen.whitehead_degree != expected:
                raise ValueError(
                    f"{self.family_tag} generator {index} must have Whitehead "
                    f"degree {expected}"
                )

        if self.family_tag == FAMILY_RP and self.generators:
            raise ValueError(
                "The RP schedule is rationally trivial and has no generators"
            )

    def _family_degree(self, index: int):
        if self.family_tag == FAMILY_HP:
            return 4 * index + 1
        if self.family_tag == FAMILY_CP:
            return 2 * index + 1
        return None

    @property
    def count(self) -> int:
        return len(self.generators)

    @property
    def divided_powers(self) -> bool:
        """Whether loop homology carries the divided-power coproduct (HP, CP)."""
        return self.family_tag in (FAMILY_HP, FAMILY_CP)

    def generator(self, index: int) -> Generator:
        """
        Get a generator by 1-based index.

        Raises:
            UnknownGenerator: If the index is outside the schedule
        """
        if not 1 <= index <= self.count:
            raise UnknownGenerator(
                f"Generator index {index} outside schedule of size {self.count}"
            )
        return self.generators[index - 1]

    def degree_of(self, index: int) -> int:
        """Samelson degree of generator ``index``."""
        return self.generator(index).samelson_degree

    def word_degree(self, word: Word) -> int:
        """Samelson degree of a word in generator indices."""
        return word_degree(word, self.samelson_degrees)

    def index_of_whitehead_degree(self, whitehead_degree: int) -> int:
        """
        Find the generator living in a given Whitehead degree.

        Raises:
            UnknownGenerator: If no generator has that degree
        """
        for index, gen in enumerate(self.generators, start=1):
            if gen.whitehead_degree == whitehead_degree:
                return index
        raise UnknownGenerator(f"No generator in Whitehead degree {whitehead_degree}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "family": self.family_tag,
            "generators": [g.to_dict() for g in self.generators],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "GeneratorSchedule":
        return cls(
            generators=tuple(
                Generator.from_dict(g) for g in data.get("generators", [])
            ),
            family_tag=data.get("family", FAMILY_CUSTOM),
        )

    def __str__(self) -> str:
        degrees = ",".join(str(g.whitehead_degree) for g in self.generators)
        return f"{self.family_tag}({degrees})"


@dataclass(frozen=True)
class HallBasisElement:
    """
    A basic product: a Lyndon word bracketed by standard factorization.

    Attributes:
        word: Lyndon word in generator indices
        samelson_degree: Sum of the letter degrees
    """

    word: Word
    samelson_degree: int

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        if not is_lyndon(self.word):
            raise ValueError(f"{self.word} is not a Lyndon word")

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def is_generator(self) -> bool:
        return len(self.word) == 1

    def sort_key(self) -> Tuple[int, int, Word]:
        """Canonical order: degree, then length, then word."""
        return (self.samelson_degree, len(self.word), self.word)

    def factors(self) -> Tuple[Word, Word]:
        """Standard factorization of the underlying word."""
        return standard_factorization(self.word)

    @classmethod
    def from_word(cls, word: Word, schedule: GeneratorSchedule) -> "HallBasisElement":
        for letter in word:
            schedule.generator(letter)
        return cls(word=tuple(word), samelson_degree=schedule.word_degree(tuple(word)))
