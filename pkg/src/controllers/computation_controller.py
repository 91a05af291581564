#!/usr/bin/env python3
"""
Computation Controller for whitealg

This module turns validated command-line requests into service calls and hands
back result values for rendering.
"""

import logging
import re
from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence, Tuple

from src.config.config_manager import ConfigManager
from src.errors import DegreeCapExceeded, UsageError
from src.models.expression import generators_in
from src.models.lie_element import LieElement
from src.models.reports import (
    AutReport,
    ExactSequenceReport,
    NoncommuteWitness,
    OrderResult,
    PrimitiveCheck,
    RankTable,
    RankTableRow,
    SntReport,
)
from src.models.schedule import (
    FAMILY_CP,
    FAMILY_CUSTOM,
    FAMILY_HP,
    FAMILY_RP,
    GeneratorSchedule,
)
from src.models.tensor_element import SuspendedElement, TensorElement
from src.models.truncated_algebra import RING_Z
from src.services import expr_io
from src.services.aut_group import AlphaKey, AutGroup
from src.services.graded_lie import FreeLieAlgebra
from src.services.homotopy_model import (
    HomotopyModel,
    generator_count_for,
    make_schedule,
)
from src.services.tensor_hopf import TensorHopfAlgebra

logger = logging.getLogger(__name__)

_SPACES = {"hp": FAMILY_HP, "cp": FAMILY_CP, "rp": FAMILY_RP}
_CUSTOM_PATTERN = re.compile(r"^custom:\s*(\d+(?:\s*,\s*\d+)*)\s*$", re.IGNORECASE)

# (layer, bracket expression text, coefficient) as typed after --alpha
RawAlpha = Tuple[int, str, int]


@dataclass(frozen=True)
class SpaceSpec:
    """
    A ``--space`` value.

    Attributes:
        family: HP, CP, RP or custom
        whitehead_degrees: Sphere dimensions of a custom wedge
    """

    family: str
    whitehead_degrees: Tuple[int, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "SpaceSpec":
        """
        Raises:
            UsageError: If the text is not hp, cp, rp or custom:<degrees>
        """
        text = str(text).strip()
        if text.lower() in _SPACES:
            return cls(_SPACES[text.lower()])
        match = _CUSTOM_PATTERN.match(text)
        if not match:
            raise UsageError(
                f"Unknown space: {text!r} (use hp, cp, rp or custom:3,5,...)"
            )
        degrees = tuple(int(d) for d in match.group(1).split(","))
        return cls(FAMILY_CUSTOM, degrees)

    def schedule(self, generator_count: int = 0) -> GeneratorSchedule:
        """Schedule with enough generators; custom wedges ignore the count."""
        return make_schedule(self.family, generator_count, self.whitehead_degrees)


class ComputationController:
    """
    Controller between the command line and the engines.

    Each public method takes plain values, builds the schedule the request needs
    and returns a value the output layer knows how to render.
    """

    def __init__(self, config_manager: ConfigManager = None, degree_cap: int = None):
        """
        Initialize the controller.

        Args:
            config_manager: Configuration manager instance
            degree_cap: Samelson degree cap overriding the configuration
        """
        self.config_manager = config_manager or ConfigManager()
        if degree_cap is None:
            degree_cap = self.config_manager.get_degree_cap()
        if degree_cap <= 0:
            raise UsageError("Degree cap must be positive")
        self.degree_cap = degree_cap
        self.model = HomotopyModel(self.config_manager, degree_cap=degree_cap)

    # Schedules

    def _schedule_for_expression(
        self, space: SpaceSpec, text: str
    ) -> GeneratorSchedule:
        numbers = [g.number for g in generators_in(expr_io.parse_expr(text))]
        return self._schedule(space, max(numbers, default=0))

    def _schedule(self, space: SpaceSpec, count: int) -> GeneratorSchedule:
        """
        Raises:
            DegreeCapExceeded: If the count alone would pass the degree cap
        """
        if count > self.degree_cap:
            raise DegreeCapExceeded(f"Generator {count} lies above the degree cap")
        return space.schedule(count)

    def _group(self, space: SpaceSpec, truncate: int, ring: str) -> AutGroup:
        count = max(truncate, 0)
        algebra = self.model.truncated_algebra(
            self._schedule(space, count), truncate, ring
        )
        return AutGroup(algebra, self.config_manager)

    def _alphas(
        self, group: AutGroup, raw: Optional[Sequence[RawAlpha]]
    ) -> Dict[AlphaKey, int]:
        """
        Resolve ``(layer, expression) = value`` entries to Lyndon-word keys.

        Raises:
            UsageError: If an expression is not a single basic product
        """
        alphas: Dict[AlphaKey, int] = {}
        for layer, text, value in raw or ():
            group.algebra.check_index(layer)
            element = group.lie.reduce(text)
            if len(element.terms) != 1 or element.terms[0][1] != 1:
                raise UsageError(f"Alpha key {text!r} is not one basic product")
            alphas[(layer, element.terms[0][0].word)] = value
        return alphas

    # Lie algebra

    def basis(self, space: SpaceSpec, whitehead_dim: int) -> RankTableRow:
        """Basis of the rational homotopy in one Whitehead dimension."""
        count = generator_count_for(space.family, whitehead_dim)
        return self.model.basis_row(self._schedule(space, count), whitehead_dim)

    def rank_table(self, space: SpaceSpec, max_whitehead_dim: int) -> RankTable:
        count = generator_count_for(space.family, max_whitehead_dim)
        schedule = self._schedule(space, count)
        return self.model.whitehead_rank_table(schedule, max_whitehead_dim)

    def reduce(self, space: SpaceSpec, text: str) -> LieElement:
        schedule = self._schedule_for_expression(space, text)
        return FreeLieAlgebra(schedule, degree_cap=self.degree_cap).reduce(text)

    # Tensor Hopf algebra

    def _hopf(self, space: SpaceSpec, text: str) -> TensorHopfAlgebra:
        schedule = self._schedule_for_expression(space, text)
        return TensorHopfAlgebra(schedule, degree_cap=self.degree_cap)

    def primitive_check(
        self, space: SpaceSpec, text: str, via_hurewicz: bool = False
    ) -> PrimitiveCheck:
        hopf = self._hopf(space, text)
        element = hopf.evaluate(text, via_hurewicz=via_hurewicz)
        return PrimitiveCheck(
            expression=text,
            element=expr_io.format_tensor(element),
            is_primitive=hopf.is_primitive(element),
            is_decomposable=hopf.is_decomposable(element),
            via_hurewicz=via_hurewicz,
        )

    def hurewicz(self, space: SpaceSpec, index: int) -> TensorElement:
        schedule = self._schedule(space, index)
        return TensorHopfAlgebra(schedule, degree_cap=self.degree_cap).hurewicz(index)

    def suspension(
        self, space: SpaceSpec, text: str, via_hurewicz: bool = False
    ) -> SuspendedElement:
        hopf = self._hopf(space, text)
        return hopf.homology_suspension(hopf.evaluate(text, via_hurewicz=via_hurewicz))

    # Automorphisms

    def aut_report(
        self,
        space: SpaceSpec,
        truncate: int,
        ring: str = RING_Z,
        alphas: Optional[Sequence[RawAlpha]] = None,
    ) -> AutReport:
        group = self._group(space, truncate, ring)
        return group.aut_report(self._alphas(group, alphas))

    def order(
        self, space: SpaceSpec, truncate: int, morphism: str, ring: str = RING_Z
    ) -> OrderResult:
        group = self._group(space, truncate, ring)
        return group.order(group.morphism_from_images(morphism))

    def noncommute_witness(
        self,
        space: SpaceSpec,
        m: int,
        alpha1: int = 1,
        alpha2: int = 1,
        ring: str = RING_Z,
    ) -> NoncommuteWitness:
        group = self._group(space, m + 1 if m >= 3 else 0, ring)
        return group.noncommuting_witness(m, alpha1, alpha2)

    def exact_sequence(
        self, space: SpaceSpec, n: int, ring: str = RING_Z
    ) -> ExactSequenceReport:
        group = self._group(space, n, ring)
        return group.exact_sequence_report(n)

    def snt_witness(
        self,
        space: SpaceSpec,
        truncate: int,
        alphas: Optional[Sequence[RawAlpha]] = None,
    ) -> SntReport:
        group = self._group(space, truncate, RING_Z)
        default = int(self.config_manager.get_aut_config().get("default_alpha", 1))
        return group.snt_cokernel_witness(self._alphas(group, alphas), default=default)

    # Dispatch

    def run(self, args: Any) -> Any:
        """
        Execute a parsed command line.

        Raises:
            UsageError: If a required flag is missing
        """
        space = SpaceSpec.parse(args.space)
        command = args.command
        logger.info("Running %s on %s", command, args.space)

        def need(name: str) -> Any:
            value = getattr(args, name, None)
            if value is None:
                raise UsageError(f"{command} needs --{name.replace('_', '-')}")
            return value

        ring = args.ring.upper()
        if command == "basis":
            return self.basis(space, need("dim"))
        if command == "rank-table":
            return self.rank_table(space, need("max_dim"))
        if command == "reduce":
            return self.reduce(space, need("expr"))
        if command == "primitive-check":
            return self.primitive_check(space, need("expr"), args.via_hurewicz)
        if command == "hurewicz":
            return self.hurewicz(space, need("index"))
        if command == "suspension":
            return self.suspension(space, need("expr"), args.via_hurewicz)
        if command == "aut-report":
            return self.aut_report(space, need("truncate"), ring, args.alpha)
        if command == "order":
            return self.order(space, need("truncate"), need("morphism"), ring)
        if command == "noncommute-witness":
            return self.noncommute_witness(
                space, need("m"), args.alpha1, args.alpha2, ring
            )
        if command == "exact-seq":
            return self.exact_sequence(space, need("n"), ring)
        if command == "snt-witness":
            return self.snt_witness(space, need("truncate"), args.alpha)
        raise UsageError(f"Unknown command: {command}")

