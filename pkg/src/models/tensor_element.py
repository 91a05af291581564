#!/usr/bin/env python3
"""
Tensor Element Models for whitealg

Elements of the Pontryagin algebra T[b1, b2, ...], of its tensor square (coproduct
values) and of the homology of the suspension (suspended elements).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Mapping, Optional, Tuple, Union

from src.errors import MixedSchedules, NonHomogeneous
from src.models.schedule import GeneratorSchedule
from src.models.words import (
    SparseVector,
    Word,
    WordTerms,
    add_scaled,
    concat_product,
)

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class TensorElement:
    """
    Exact-rational sparse vector over words in the generators b1, b2, ...

    Attributes:
        schedule: Generator schedule fixing the degree of each b_i
        terms: (word, nonzero coefficient) pairs ordered by degree, length, word
    """

    schedule: GeneratorSchedule
    terms: WordTerms = ()

    def __post_init__(self):
        items = self.terms.items() if isinstance(self.terms, Mapping) else self.terms
        merged: SparseVector = {}
        for word, coefficient in items:
            add_scaled(merged, {tuple(word): Fraction(coefficient)})
        for word in merged:
            for letter in word:
                self.schedule.generator(letter)
        ordered = sorted(
            merged.items(),
            key=lambda item: (
                self.schedule.word_degree(item[0]),
                len(item[0]),
                item[0],
            ),
        )
        object.__setattr__(self, "terms", tuple(ordered))

    @classmethod
    def zero(cls, schedule: GeneratorSchedule) -> "TensorElement":
        return cls(schedule, ())

    @classmethod
    def unit(cls, schedule: GeneratorSchedule) -> "TensorElement":
        return cls(schedule, (((), Fraction(1)),))

    @classmethod
    def generator(cls, schedule: GeneratorSchedule, index: int) -> "TensorElement":
        return cls(schedule, (((index,), Fraction(1)),))

    @property
    def vector(self) -> SparseVector:
        return dict(self.terms)

    def coefficient(self, word: Word) -> Fraction:
        return self.vector.get(tuple(word), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def homogeneous_degree(self) -> Optional[int]:
        """
        The common degree of all words, None for zero.

        Raises:
            NonHomogeneous: If words of different degrees occur
        """
        degrees = {self.schedule.word_degree(w) for w, _ in self.terms}
        if len(degrees) > 1:
            raise NonHomogeneous(f"Element spans degrees {sorted(degrees)}")
        return degrees.pop() if degrees else None

    def length_one_part(self) -> "TensorElement":
        letters = tuple((w, c) for w, c in self.terms if len(w) == 1)
        return TensorElement(self.schedule, letters)

    def _check_schedule(self, other: "TensorElement") -> None:
        if self.schedule != other.schedule:
            raise MixedSchedules(f"{self.schedule} vs {other.schedule}")

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._check_schedule(other)
        return TensorElement(self.schedule, self.terms + other.terms)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def __neg__(self) -> "TensorElement":
        return self * -1

    def __mul__(self, scale: Scalar) -> "TensorElement":
        scale = Fraction(scale)
        scaled = tuple((w, c * scale) for w, c in self.terms)
        return TensorElement(self.schedule, scaled)

    __rmul__ = __mul__

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schedule": self.schedule.to_dict(),
            "terms": [{"word": list(w), "coefficient": str(c)} for w, c in self.terms],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "TensorElement":
        schedule = GeneratorSchedule.from_dict(data["schedule"])
        terms = data.get("terms", [])
        return cls(
            schedule,
            tuple((tuple(t["word"]), Fraction(t["coefficient"])) for t in terms),
        )


@dataclass(frozen=True)
class CoproductValue:
    """
    Element of T ⊗ T, stored as ((left word, right word), coefficient) pairs.

    Multiplication is componentwise concatenation; the Koszul sign is trivial
    because every generator has even degree.
    """

    schedule: GeneratorSchedule
    terms: Tuple[Tuple[Tuple[Word, Word], Fraction], ...] = ()

    def __post_init__(self):
        items = self.terms.items() if isinstance(self.terms, Mapping) else self.terms
        merged: Dict[Tuple[Word, Word], Fraction] = {}
        for (left, right), coefficient in items:
            key = (tuple(left), tuple(right))
            value = merged.get(key, 0) + Fraction(coefficient)
            if value:
                merged[key] = value
            else:
                merged.pop(key, None)
        degree = self.schedule.word_degree
        ordered = sorted(
            merged.items(),
            key=lambda item: (
                degree(item[0][0]) + degree(item[0][1]),
                degree(item[0][0]),
                item[0],
            ),
        )
        object.__setattr__(self, "terms", tuple(ordered))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "CoproductValue") -> "CoproductValue":
        if self.schedule != other.schedule:
            raise MixedSchedules(f"{self.schedule} vs {other.schedule}")
        return CoproductValue(self.schedule, self.terms + other.terms)

    def __sub__(self, other: "CoproductValue") -> "CoproductValue":
        return self + CoproductValue(
            other.schedule, tuple((k, -c) for k, c in other.terms)
        )

    def __mul__(self, other: "CoproductValue") -> "CoproductValue":
        if self.schedule != other.schedule:
            raise MixedSchedules(f"{self.schedule} vs {other.schedule}")
        out: Dict[Tuple[Word, Word], Fraction] = {}
        for (a1, a2), ca in self.terms:
            for (b1, b2), cb in other.terms:
                key = (a1 + b1, a2 + b2)
                out[key] = out.get(key, 0) + ca * cb
        return CoproductValue(self.schedule, out)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schedule": self.schedule.to_dict(),
            "terms": [
                {"left": list(a), "right": list(b), "coefficient": str(c)}
                for (a, b), c in self.terms
            ],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CoproductValue":
        schedule = GeneratorSchedule.from_dict(data["schedule"])
        terms = [
            ((tuple(t["left"]), tuple(t["right"])), Fraction(t["coefficient"]))
            for t in data.get("terms", [])
        ]
        return cls(schedule, tuple(terms))


@dataclass(frozen=True)
class SuspendedElement:
    """
    Class in the homology of the suspension, in Whitehead grading.

    Attributes:
        schedule: Generator schedule
        terms: (generator index, nonzero coefficient) pairs; index i stands for beta_i
    """

    schedule: GeneratorSchedule
    terms: Tuple[Tuple[int, Fraction], ...] = ()

    def __post_init__(self):
        items = self.terms.items() if isinstance(self.terms, Mapping) else self.terms
        merged: Dict[int, Fraction] = {}
        for index, coefficient in items:
            self.schedule.generator(index)
            merged[index] = merged.get(index, Fraction(0)) + Fraction(coefficient)
        object.__setattr__(
            self, "terms", tuple(sorted((i, c) for i, c in merged.items() if c))
        )

    def is_zero(self) -> bool:
        return not self.terms

    def whitehead_degrees(self) -> Tuple[int, ...]:
        return tuple(self.schedule.generator(i).whitehead_degree for i, _ in self.terms)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schedule": self.schedule.to_dict(),
            "terms": [{"index": i, "coefficient": str(c)} for i, c in self.terms],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SuspendedElement":
        schedule = GeneratorSchedule.from_dict(data["schedule"])
        terms = data.get("terms", [])
        return cls(
            schedule,
            tuple((int(t["index"]), Fraction(t["coefficient"])) for t in terms),
        )


def tensor_from_vector(
    schedule: GeneratorSchedule, vector: SparseVector
) -> TensorElement:
    """Wrap a raw sparse vector as a TensorElement."""
    return TensorElement(schedule, tuple(vector.items()))


def tensor_product(u: TensorElement, v: TensorElement) -> TensorElement:
    """Concatenation product of two tensor elements."""
    u._check_schedule(v)
    return tensor_from_vector(u.schedule, concat_product(u.vector, v.vector))
