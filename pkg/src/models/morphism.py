#!/usr/bin/env python3
"""
Graded Morphism Model for whitealg

A degree-preserving Lie endomorphism of a truncated algebra, fixed by the images
of its generators.
"""

from dataclasses import dataclass
from typing import Any, Dict, Mapping, Tuple

from src.errors import DegreeMismatch, IndexOutOfRange, LatticeViolation
from src.models.lie_element import LieElement
from src.models.truncated_algebra import TruncatedAlgebra


@dataclass(frozen=True)
class GradedMorphism:
    """
    Endomorphism of L<=n given on generators.

    Attributes:
        domain: The truncated algebra acted on
        images: (index, image of x_index) for every generator, in index order
    """

    domain: TruncatedAlgebra
    images: Tuple[Tuple[int, LieElement], ...] = ()

    def __post_init__(self):
        """Post-initialization validation and setup."""
        images = self.images
        given = dict(images.items() if isinstance(images, Mapping) else images)
        for index in given:
            self.domain.check_index(index)
        complete = []
        for index in range(1, self.domain.top_index + 1):
            if index in given:
                image = self.domain.adopt(given[index])
            else:
                image = self.domain.generator(index)
            complete.append((index, image))
        object.__setattr__(self, "images", tuple(complete))
        self.validate()

    def validate(self) -> None:
        """
        Validate degree preservation and integrality.

        Raises:
            DegreeMismatch: If an image is not homogeneous of its generator's degree
            LatticeViolation: If an image has non-integral coefficients in Z mode
        """
        for index, image in self.images:
            expected = self.domain.generator_degree(index)
            try:
                degree = image.homogeneous_degree()
            except ValueError:
                degree = -1
            if degree is not None and degree != expected:
                raise DegreeMismatch(
                    f"Image of generator {index} must have Samelson degree {expected}"
                )
            if self.domain.is_integral and not image.is_integral():
                raise LatticeViolation(f"Image of generator {index} is not integral")

    def image(self, index: int) -> LieElement:
        """
        Raises:
            IndexOutOfRange: If the index is not a generator of the domain
        """
        if not 1 <= index <= len(self.images):
            raise IndexOutOfRange(f"Index {index} outside 1..{len(self.images)}")
        return self.images[index - 1][1]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "domain": self.domain.to_dict(),
            "images": [
                {"index": index, "image": image.to_dict()["terms"]}
                for index, image in self.images
            ],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "GradedMorphism":
        domain = TruncatedAlgebra.from_dict(data["domain"])
        images = {}
        for entry in data.get("images", []):
            images[int(entry["index"])] = LieElement.from_dict(
                {"schedule": domain.truncated.to_dict(), "terms": entry["image"]}
            )
        return cls(domain, images)
