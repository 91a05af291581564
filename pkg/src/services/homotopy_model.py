#!/usr/bin/env python3
"""
Homotopy Model Service for whitealg

This module is the Whitehead-graded side of the engine: it builds generator
schedules for the suspensions of HP, CP and RP (and custom wedges of spheres),
tabulates ranks per Whitehead dimension and cuts out truncated algebras.
"""

import logging
from typing import List, Optional, Sequence, Tuple

from src.config.config_manager import ConfigManager
from src.errors import DegreeCapExceeded
from src.models.reports import RankTable, RankTableRow
from src.models.schedule import (
    FAMILIES,
    FAMILY_CP,
    FAMILY_HP,
    FAMILY_RP,
    Generator,
    GeneratorSchedule,
    HallBasisElement,
)
from src.models.truncated_algebra import RING_MODES, RING_Z, TruncatedAlgebra
from src.services.expr_io import format_word
from src.services.graded_lie import FreeLieAlgebra

logger = logging.getLogger(__name__)


def _family(name: str) -> str:
    for family in FAMILIES:
        if family.lower() == str(name).lower():
            return family
    raise ValueError(f"Unknown schedule family: {name}")


def make_schedule(
    family: str,
    generator_count: int = 0,
    whitehead_degrees: Optional[Sequence[int]] = None,
) -> GeneratorSchedule:
    """
    Build the generator schedule of a suspension.

    Args:
        family: HP, CP, RP or custom (case insensitive)
        generator_count: Number of generators for HP and CP
        whitehead_degrees: Sphere dimensions of a custom wedge

    Returns:
        HP gives x_i in Whitehead degree 4i+1, CP gives xi_(2i+1) in degree 2i+1,
        RP is empty and custom gives x_i in the listed degrees

    Raises:
        OddParityUnsupported: If a custom sphere has odd Samelson degree
    """
    family = _family(family)
    if generator_count < 0:
        raise ValueError("Generator count must be non-negative")

    if family == FAMILY_HP:
        generators = [
            Generator(f"x{i}", 4 * i + 1, 4 * i) for i in range(1, generator_count + 1)
        ]
    elif family == FAMILY_CP:
        generators = [
            Generator(f"xi{2 * i + 1}", 2 * i + 1, 2 * i)
            for i in range(1, generator_count + 1)
        ]
    elif family == FAMILY_RP:
        generators = []
    else:
        degrees = list(whitehead_degrees or [])
        generators = [
            Generator(f"x{i}", degree, degree - 1)
            for i, degree in enumerate(degrees, start=1)
        ]
    return GeneratorSchedule(generators=tuple(generators), family_tag=family)


def generator_count_for(family: str, max_whitehead_dim: int) -> int:
    """Number of HP or CP generators living in Whitehead dimension at most the bound."""
    family = _family(family)
    if family == FAMILY_HP:
        return max(0, (max_whitehead_dim - 1) // 4)
    if family == FAMILY_CP:
        return max(0, (max_whitehead_dim - 1) // 2)
    return 0


class HomotopyModel:
    """
    Whitehead-graded facade over the free Lie algebra engine.

    All degrees in this class are Whitehead (topological) dimensions unless the
    name says otherwise; Samelson degree is one less.
    """

    def __init__(self, config_manager: ConfigManager = None, degree_cap: int = None):
        """
        Initialize the model.

        Args:
            config_manager: Configuration manager instance
            degree_cap: Samelson degree cap; defaults to the configured one
        """
        self.config_manager = config_manager or ConfigManager()
        if degree_cap is None:
            degree_cap = self.config_manager.get_degree_cap()
        self.degree_cap = degree_cap

    def algebra(self, schedule: GeneratorSchedule) -> FreeLieAlgebra:
        return FreeLieAlgebra(schedule, degree_cap=self.degree_cap)

    def basis_row(
        self, schedule: GeneratorSchedule, whitehead_dim: int
    ) -> RankTableRow:
        """Basis of the rational homotopy group in one Whitehead dimension."""
        basis = self.algebra(schedule).lyndon_basis(whitehead_dim - 1)
        expressions = [format_word(b.word, schedule) for b in basis]
        return RankTableRow(whitehead_dim, len(expressions), expressions)

    def whitehead_rank_table(
        self, schedule: GeneratorSchedule, max_whitehead_dim: int
    ) -> RankTable:
        """
        Ranks and bases of every nonzero Whitehead dimension up to a bound.

        Raises:
            DegreeCapExceeded: If the bound is above cap + 1
        """
        if max_whitehead_dim - 1 > self.degree_cap:
            raise DegreeCapExceeded(
                f"Whitehead dimension {max_whitehead_dim} exceeds cap "
                f"{self.degree_cap + 1}"
            )
        rows = []
        for dim in range(2, max_whitehead_dim + 1):
            row = self.basis_row(schedule, dim)
            if row.rank:
                rows.append(row)
        logger.info("Rank table of %s up to dimension %d", schedule, max_whitehead_dim)
        return RankTable(str(schedule), max_whitehead_dim, rows)

    def truncated_algebra(
        self, schedule: GeneratorSchedule, n: int, ring_mode: str = RING_Z
    ) -> TruncatedAlgebra:
        """
        The truncation L<=n.

        Raises:
            IndexOutOfRange: If n exceeds the schedule length
            DegreeCapExceeded: If x_n lies above the degree cap
        """
        ring_mode = str(ring_mode).upper()
        if ring_mode not in RING_MODES:
            raise ValueError(f"Unknown ring mode: {ring_mode}")
        algebra = TruncatedAlgebra(schedule, n, ring_mode)
        if algebra.degree_cap > self.degree_cap:
            raise DegreeCapExceeded(
                f"Generator x{n} has Samelson degree {algebra.degree_cap} above the cap"
            )
        return algebra


def indecomposables_and_decomposables(
    algebra: TruncatedAlgebra, n: int
) -> Tuple[List[HallBasisElement], List[HallBasisElement]]:
    """
    Split the degree of x_n into its indecomposable and decomposable basis.

    Returns:
        (I_n basis, D_n basis); I_n is ``[x_n]`` for any valid schedule

    Raises:
        IndexOutOfRange: If n is not a retained generator
    """
    degree = algebra.generator_degree(n)
    basis = algebra.basis(degree)
    indecomposables = [b for b in basis if b.is_generator]
    decomposables = [b for b in basis if not b.is_generator]
    return indecomposables, decomposables
