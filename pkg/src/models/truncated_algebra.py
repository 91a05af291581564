#!/usr/bin/env python3
"""
Truncated Whitehead Algebra Model for whitealg

L<=n keeps the generators x1..xn and every basic product up to the degree of xn.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List

from src.errors import DegreeCapExceeded, IndexOutOfRange, LatticeViolation
from src.models.lie_element import LieElement
from src.models.schedule import GeneratorSchedule, HallBasisElement
from src.models.words import lyndon_words

RING_Z = "Z"
RING_Q = "Q"
RING_MODES = (RING_Z, RING_Q)


@dataclass(frozen=True)
class TruncatedAlgebra:
    """
    The truncation L<=n of the Whitehead algebra of a schedule.

    Attributes:
        schedule: The full generator schedule
        top_index: Number n of retained generators
        ring_mode: Z (lattice spanned by the Lyndon basis) or Q
        truncated: Schedule restricted to x1..xn; elements of L<=n live over it
        degree_cap: Samelson degree of xn (0 for the empty algebra)
    """

    schedule: GeneratorSchedule
    top_index: int
    ring_mode: str = RING_Z
    truncated: GeneratorSchedule = field(init=False, repr=False, compare=False)
    degree_cap: int = field(init=False, compare=False)

    def __post_init__(self):
        """Post-initialization validation and setup."""
        self.validate()
        object.__setattr__(
            self,
            "truncated",
            GeneratorSchedule(
                generators=self.schedule.generators[: self.top_index],
                family_tag=self.schedule.family_tag,
            ),
        )
        cap = self.schedule.degree_of(self.top_index) if self.top_index else 0
        object.__setattr__(self, "degree_cap", cap)

    def validate(self) -> None:
        """
        Validate the truncation.

        Raises:
            IndexOutOfRange: If top_index is negative or beyond the schedule
            ValueError: If the ring mode is unknown
        """
        if self.ring_mode not in RING_MODES:
            raise ValueError(f"Unknown ring mode: {self.ring_mode}")
        if not 0 <= self.top_index <= self.schedule.count:
            raise IndexOutOfRange(
                f"Truncation {self.top_index} outside schedule of size "
                f"{self.schedule.count}"
            )

    @property
    def is_integral(self) -> bool:
        return self.ring_mode == RING_Z

    def check_index(self, n: int, allow_zero: bool = False) -> None:
        """
        Raises:
            IndexOutOfRange: If n does not name a retained generator
        """
        low = 0 if allow_zero else 1
        if not low <= n <= self.top_index:
            raise IndexOutOfRange(f"Index {n} outside 1..{self.top_index}")

    def generator_degree(self, index: int) -> int:
        self.check_index(index)
        return self.truncated.degree_of(index)

    def generator(self, index: int) -> LieElement:
        """The generator x_index as an element of L<=n."""
        self.check_index(index)
        basis = HallBasisElement((index,), self.truncated.degree_of(index))
        return LieElement(self.truncated, ((basis, 1),))

    def basis(self, samelson_degree: int) -> List[HallBasisElement]:
        """
        Basic products of L<=n in a degree.

        Raises:
            DegreeCapExceeded: If the degree lies above the top generator
        """
        if samelson_degree > self.degree_cap:
            raise DegreeCapExceeded(
                f"Degree {samelson_degree} lies above L<={self.top_index} "
                f"(top degree {self.degree_cap})"
            )
        if samelson_degree <= 0 or samelson_degree % 2:
            return []
        words = lyndon_words(self.truncated.samelson_degrees, samelson_degree)
        return [HallBasisElement(word, samelson_degree) for word in words]

    def nonzero_degrees(self) -> List[int]:
        """Degrees up to the top in which L<=n is nonzero."""
        return [d for d in range(2, self.degree_cap + 1, 2) if self.basis(d)]

    def adopt(self, elem: LieElement) -> LieElement:
        """
        Re-home an element written over another schedule prefix into L<=n.

        Raises:
            IndexOutOfRange: If the element uses a generator beyond xn
            DegreeCapExceeded: If a term lies above the top degree
            LatticeViolation: If a coefficient is not integral in Z mode
        """
        terms = []
        for basis, coefficient in elem.terms:
            if max(basis.word) > self.top_index:
                raise IndexOutOfRange(
                    f"Word {list(basis.word)} uses a generator beyond x{self.top_index}"
                )
            if basis.samelson_degree > self.degree_cap:
                raise DegreeCapExceeded(
                    f"Degree {basis.samelson_degree} above the truncation"
                )
            basis = HallBasisElement.from_word(basis.word, self.truncated)
            terms.append((basis, coefficient))
        adopted = LieElement(self.truncated, terms)
        if self.is_integral and not adopted.is_integral():
            raise LatticeViolation("Non-integral coefficient in Z mode")
        return adopted

    def truncate(self, n: int) -> "TruncatedAlgebra":
        """The sub-truncation L<=n of the same schedule and ring."""
        self.check_index(n, allow_zero=True)
        return TruncatedAlgebra(self.schedule, n, self.ring_mode)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schedule": self.schedule.to_dict(),
            "top_index": self.top_index,
            "ring_mode": self.ring_mode,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "TruncatedAlgebra":
        return cls(
            schedule=GeneratorSchedule.from_dict(data["schedule"]),
            top_index=int(data["top_index"]),
            ring_mode=data.get("ring_mode", RING_Z),
        )

    def __str__(self) -> str:
        return f"L<={self.top_index} of {self.schedule} over {self.ring_mode}"
