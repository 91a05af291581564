#!/usr/bin/env python3
"""
Lie Element Model for whitealg

Exact-rational sparse vectors over the Hall basis of the free graded Lie algebra.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, Mapping, Optional, Tuple, Union

from src.errors import MixedSchedules, NonHomogeneous
from src.models.schedule import GeneratorSchedule, HallBasisElement

Scalar = Union[int, Fraction]
TermsInput = Union[
    Mapping[HallBasisElement, Scalar], Iterable[Tuple[HallBasisElement, Scalar]]
]


Terms = Tuple[Tuple[HallBasisElement, Fraction], ...]


def _normalize_terms(terms: TermsInput) -> Terms:
    items = terms.items() if isinstance(terms, Mapping) else terms
    merged: Dict[HallBasisElement, Fraction] = {}
    for basis, coefficient in items:
        merged[basis] = merged.get(basis, Fraction(0)) + Fraction(coefficient)
    kept = [(b, c) for b, c in merged.items() if c]
    kept.sort(key=lambda item: item[0].sort_key())
    return tuple(kept)


@dataclass(frozen=True)
class LieElement:
    """
    Element of the rational homotopy Lie algebra, written in the Hall basis.

    Attributes:
        schedule: Generator schedule the element lives over
        terms: (basis element, nonzero coefficient) pairs in canonical order
    """

    schedule: GeneratorSchedule
    terms: Tuple[Tuple[HallBasisElement, Fraction], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", _normalize_terms(self.terms))

    @classmethod
    def zero(cls, schedule: GeneratorSchedule) -> "LieElement":
        return cls(schedule, ())

    @property
    def coefficients(self) -> Dict[HallBasisElement, Fraction]:
        return dict(self.terms)

    def coefficient(self, basis: HallBasisElement) -> Fraction:
        return self.coefficients.get(basis, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for _, c in self.terms)

    def is_decomposable(self) -> bool:
        """True when no term is a bare generator."""
        return all(not b.is_generator for b, _ in self.terms)

    def homogeneous_degree(self) -> Optional[int]:
        """
        The common Samelson degree of all terms.

        Returns:
            The degree, or None for the zero element

        Raises:
            NonHomogeneous: If terms live in different degrees
        """
        degrees = {b.samelson_degree for b, _ in self.terms}
        if len(degrees) > 1:
            raise NonHomogeneous(f"Element spans degrees {sorted(degrees)}")
        return degrees.pop() if degrees else None

    def _check_schedule(self, other: "LieElement") -> None:
        if self.schedule != other.schedule:
            raise MixedSchedules(f"{self.schedule} vs {other.schedule}")

    def __add__(self, other: "LieElement") -> "LieElement":
        self._check_schedule(other)
        return LieElement(self.schedule, self.terms + other.terms)

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def __neg__(self) -> "LieElement":
        return self * -1

    def __mul__(self, scale: Scalar) -> "LieElement":
        scale = Fraction(scale)
        return LieElement(self.schedule, tuple((b, c * scale) for b, c in self.terms))

    __rmul__ = __mul__

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schedule": self.schedule.to_dict(),
            "terms": [
                {"word": list(b.word), "coefficient": str(c)} for b, c in self.terms
            ],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "LieElement":
        schedule = GeneratorSchedule.from_dict(data["schedule"])
        terms = [
            (
                HallBasisElement.from_word(tuple(t["word"]), schedule),
                Fraction(t["coefficient"]),
            )
            for t in data.get("terms", [])
        ]
        return cls(schedule, terms)

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*{list(b.word)}" for b, c in self.terms) or "0"
        return f"LieElement({body})"
