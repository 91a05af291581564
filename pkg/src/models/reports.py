#!/usr/bin/env python3
"""
Report Models for whitealg

This module defines the result records produced by the services: rank tables,
order analyses, automorphism-group reports, exact-sequence checks and the
finite-cokernel witness. Every record round-trips through to_dict/from_dict;
elements and morphisms inside reports are stored as formatted expressions.
"""

from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from src.errors import InvariantViolation

VERDICT_FINITE = "cokernel finite"


@dataclass
class RankTableRow:
    """
    One Whitehead dimension of a rank table.

    Attributes:
        whitehead_dim: Topological dimension
        rank: Number of basic products in that dimension
        basis_expressions: Formatted basic products in canonical order
    """

    whitehead_dim: int
    rank: int
    basis_expressions: Tuple[str, ...] = ()

    def __post_init__(self):
        """Post-initialization validation and setup."""
        self.basis_expressions = tuple(self.basis_expressions)
        self.validate()

    def validate(self) -> None:
        """
        Raises:
            ValueError: If rank disagrees with the listed basis
        """
        if self.rank != len(self.basis_expressions):
            raise ValueError(
                f"Rank {self.rank} does not match {len(self.basis_expressions)} "
                "basis expressions"
            )

    @property
    def samelson_degree(self) -> int:
        return self.whitehead_dim - 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "whitehead_dim": self.whitehead_dim,
            "rank": self.rank,
            "basis_expressions": list(self.basis_expressions),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RankTableRow":
        return cls(
            whitehead_dim=int(data["whitehead_dim"]),
            rank=int(data["rank"]),
            basis_expressions=tuple(data.get("basis_expressions", [])),
        )

    def __str__(self) -> str:
        return f"dim {self.whitehead_dim}: rank {self.rank}"


@dataclass
class RankTable:
    """Rank table of a schedule up to a Whitehead dimension."""

    space: str
    max_whitehead_dim: int
    rows: List[RankTableRow] = field(default_factory=list)

    def ranks(self) -> Dict[int, int]:
        return {row.whitehead_dim: row.rank for row in self.rows}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "space": self.space,
            "max_whitehead_dim": self.max_whitehead_dim,
            "rows": [row.to_dict() for row in self.rows],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RankTable":
        return cls(
            space=data["space"],
            max_whitehead_dim=int(data["max_whitehead_dim"]),
            rows=[RankTableRow.from_dict(row) for row in data.get("rows", [])],
        )


@dataclass
class OrderResult:
    """
    Order of an automorphism.

    Attributes:
        morphism: Formatted morphism
        is_finite: Whether the order is finite
        order: The order when finite
        period: Order of the linear part (0 when the linear part has infinite order)
        witness_generator: Generator whose orbit is infinite
        displacement: ``f^period(x) - x`` on the witness generator
        orbit: Closed form of the witness orbit
    """

    morphism: str
    is_finite: bool
    order: Optional[int] = None
    period: int = 1
    witness_generator: Optional[str] = None
    displacement: Optional[str] = None
    orbit: Optional[str] = None

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        """
        Raises:
            InvariantViolation: If the verdict and its evidence disagree
        """
        if self.is_finite and (self.order is None or self.order < 1):
            raise InvariantViolation("A finite order must be a positive integer")
        if not self.is_finite and (
            self.order is not None or not self.witness_generator
        ):
            raise InvariantViolation("An infinite order needs a witness and no order")

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "OrderResult":
        return cls(
            morphism=data["morphism"],
            is_finite=bool(data["is_finite"]),
            order=data.get("order"),
            period=int(data.get("period", 1)),
            witness_generator=data.get("witness_generator"),
            displacement=data.get("displacement"),
            orbit=data.get("orbit"),
        )

    def __str__(self) -> str:
        if self.is_finite:
            return f"finite, order {self.order}"
        return f"infinite: {self.orbit}"


@dataclass
class NoncommutingPair:
    """
    Two automorphisms whose composites differ on a generator.

    ``fg_image`` is ``f(g(x))`` and ``gf_image`` is ``g(f(x))``.
    """

    f: str
    g: str
    generator: str
    fg_image: str
    gf_image: str
    discrepancy: str

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "NoncommutingPair":
        fields = ("f", "g", "generator", "fg_image", "gf_image", "discrepancy")
        return cls(**{key: str(data[key]) for key in fields})


@dataclass
class NoncommuteWitness:
    """The pair of unipotents built from ``[x1, x_(m-1)]`` and ``[x1, x_m]``."""

    m: int
    alpha1: int
    alpha2: int
    pair: NoncommutingPair

    def to_dict(self) -> Dict[str, Any]:
        return {
            "m": self.m,
            "alpha1": self.alpha1,
            "alpha2": self.alpha2,
            "pair": self.pair.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "NoncommuteWitness":
        return cls(
            m=int(data["m"]),
            alpha1=int(data["alpha1"]),
            alpha2=int(data["alpha2"]),
            pair=NoncommutingPair.from_dict(data["pair"]),
        )


@dataclass
class AutReport:
    """
    Structure of the automorphism group of a truncated algebra.

    Attributes:
        space: Schedule label
        top_index: Truncation n
        ring_mode: Z or Q
        is_finite: Whether the group is finite
        order: Group order when finite
        is_abelian: Whether the canonical generators commute
        unipotent_rank: Total number of decomposable basis elements over all layers
        structure: Short description such as ``Z2 + Z2``, ``Q* + Q*`` or ``infinite``
        infinite_witness: Formatted automorphism of infinite order
        witness_order: Order analysis of that automorphism
        noncommuting_pair: Evidence for a non-abelian verdict
    """

    space: str
    top_index: int
    ring_mode: str
    is_finite: bool
    order: Optional[int]
    is_abelian: bool
    unipotent_rank: int
    structure: str
    infinite_witness: Optional[str] = None
    witness_order: Optional[OrderResult] = None
    noncommuting_pair: Optional[NoncommutingPair] = None

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        """
        Raises:
            InvariantViolation: If a verdict lacks its evidence
        """
        if self.is_finite:
            if self.order is None or self.infinite_witness is not None:
                raise InvariantViolation(
                    "A finite group reports an order and no witness"
                )
        else:
            if self.order is not None:
                raise InvariantViolation("An infinite group has no order")
            if self.infinite_witness is None or self.witness_order is None:
                raise InvariantViolation("An infinite group needs a witness")
            if self.witness_order.is_finite:
                raise InvariantViolation("The infinite-order witness has finite order")
        if not self.is_abelian and self.noncommuting_pair is None:
            raise InvariantViolation("A non-abelian verdict needs a witness pair")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "space": self.space,
            "top_index": self.top_index,
            "ring_mode": self.ring_mode,
            "is_finite": self.is_finite,
            "order": self.order,
            "is_abelian": self.is_abelian,
            "unipotent_rank": self.unipotent_rank,
            "structure": self.structure,
            "infinite_witness": self.infinite_witness,
            "witness_order": (
                self.witness_order.to_dict() if self.witness_order else None
            ),
            "noncommuting_pair": (
                self.noncommuting_pair.to_dict() if self.noncommuting_pair else None
            ),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "AutReport":
        witness_order = data.get("witness_order")
        pair = data.get("noncommuting_pair")
        return cls(
            space=data["space"],
            top_index=int(data["top_index"]),
            ring_mode=data["ring_mode"],
            is_finite=bool(data["is_finite"]),
            order=data.get("order"),
            is_abelian=bool(data["is_abelian"]),
            unipotent_rank=int(data["unipotent_rank"]),
            structure=data["structure"],
            infinite_witness=data.get("infinite_witness"),
            witness_order=(
                OrderResult.from_dict(witness_order) if witness_order else None
            ),
            noncommuting_pair=NoncommutingPair.from_dict(pair) if pair else None,
        )


@dataclass
class ExactSequenceReport:
    """
    Computational checks of ``0 -> Hom(I_n, D_n) -> Aut(L<=n) -> Aut(L<n) + Z2 -> 0``.

    Attributes:
        space: Schedule label
        n: Layer
        kernel_rank: Rank of the kernel, i.e. the number of decomposables in layer n
        kernel_basis: Formatted decomposable basis of layer n
        checks: Check name mapped to pass/fail
    """

    space: str
    n: int
    kernel_rank: int
    kernel_basis: Tuple[str, ...] = ()
    checks: Dict[str, bool] = field(default_factory=dict)

    def __post_init__(self):
        self.kernel_basis = tuple(self.kernel_basis)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "space": self.space,
            "n": self.n,
            "kernel_rank": self.kernel_rank,
            "kernel_basis": list(self.kernel_basis),
            "checks": dict(self.checks),
            "passed": self.passed,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ExactSequenceReport":
        return cls(
            space=data["space"],
            n=int(data["n"]),
            kernel_rank=int(data["kernel_rank"]),
            kernel_basis=tuple(data.get("kernel_basis", [])),
            checks={str(k): bool(v) for k, v in data.get("checks", {}).items()},
        )


@dataclass
class SntLayer:
    """Translation sublattice realized in one layer."""

    layer: int
    whitehead_dim: int
    decomposables: Tuple[str, ...] = ()
    alphas: Tuple[int, ...] = ()
    index: int = 1

    def __post_init__(self):
        self.decomposables = tuple(self.decomposables)
        self.alphas = tuple(self.alphas)

    @property
    def fully_covered(self) -> bool:
        return self.index == 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "layer": self.layer,
            "whitehead_dim": self.whitehead_dim,
            "decomposables": list(self.decomposables),
            "alphas": list(self.alphas),
            "index": self.index,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SntLayer":
        return cls(
            layer=int(data["layer"]),
            whitehead_dim=int(data["whitehead_dim"]),
            decomposables=tuple(data.get("decomposables", [])),
            alphas=tuple(int(a) for a in data.get("alphas", [])),
            index=int(data.get("index", 1)),
        )


@dataclass
class SntReport:
    """Finite-cokernel witness over all layers of a truncation."""

    space: str
    top_index: int
    layers: List[SntLayer] = field(default_factory=list)
    total_index: int = 1
    verdict: str = VERDICT_FINITE

    def to_dict(self) -> Dict[str, Any]:
        return {
            "space": self.space,
            "top_index": self.top_index,
            "layers": [layer.to_dict() for layer in self.layers],
            "total_index": self.total_index,
            "verdict": self.verdict,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SntReport":
        return cls(
            space=data["space"],
            top_index=int(data["top_index"]),
            layers=[SntLayer.from_dict(layer) for layer in data.get("layers", [])],
            total_index=int(data["total_index"]),
            verdict=data["verdict"],
        )


@dataclass
class PrimitiveCheck:
    """Primitivity and decomposability of one tensor expression."""

    expression: str
    element: str
    is_primitive: bool
    is_decomposable: bool
    via_hurewicz: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "PrimitiveCheck":
        return cls(
            expression=data["expression"],
            element=data["element"],
            is_primitive=bool(data["is_primitive"]),
            is_decomposable=bool(data["is_decomposable"]),
            via_hurewicz=bool(data.get("via_hurewicz", False)),
        )
