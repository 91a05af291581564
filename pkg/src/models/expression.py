#!/usr/bin/env python3
"""
Bracket Expression Model for whitealg

This module defines the syntax tree produced by the expression parser. Nodes are
immutable; evaluation against a schedule lives in the expression service.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

ALIAS_X = "x"
ALIAS_CHI = "chi"
ALIAS_XI = "xi"
ALIAS_B = "b"
ALIASES = (ALIAS_X, ALIAS_CHI, ALIAS_XI, ALIAS_B)


@dataclass(frozen=True)
class Generator:
    """
    A generator leaf such as ``x3``, ``chi2``, ``xi7`` or ``b1``.

    Attributes:
        alias: Name prefix; ``xi`` numbers by Whitehead dimension, the rest by index
        number: The digits following the prefix
    """

    alias: str
    number: int

    def __post_init__(self):
        if self.alias not in ALIASES:
            raise ValueError(f"Unknown generator alias: {self.alias}")
        if self.number <= 0:
            raise ValueError("Generator numbers start at 1")

    @property
    def name(self) -> str:
        return f"{self.alias}{self.number}"


@dataclass(frozen=True)
class Bracket:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sum:
    terms: Tuple["Expr", ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms:
            raise ValueError("A sum needs at least one term")


@dataclass(frozen=True)
class Scale:
    coefficient: Fraction
    node: "Expr"

    def __post_init__(self):
        object.__setattr__(self, "coefficient", Fraction(self.coefficient))
        if not self.coefficient:
            raise ValueError("Scale coefficient must be nonzero")


@dataclass(frozen=True)
class Product:
    """Concatenation ``u.v`` in the tensor algebra."""

    factors: Tuple["Expr", ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if len(self.factors) < 2:
            raise ValueError("A product needs at least two factors")


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class One:
    """The unit of the tensor algebra (the empty word)."""


Expr = Union[Generator, Bracket, Sum, Scale, Product, Zero, One]


def generators_in(expr: Expr) -> Tuple[Generator, ...]:
    """All generator leaves of a tree, left to right."""
    if isinstance(expr, Generator):
        return (expr,)
    if isinstance(expr, Bracket):
        return generators_in(expr.left) + generators_in(expr.right)
    if isinstance(expr, Sum):
        return tuple(g for term in expr.terms for g in generators_in(term))
    if isinstance(expr, Product):
        return tuple(g for factor in expr.factors for g in generators_in(factor))
    if isinstance(expr, Scale):
        return generators_in(expr.node)
    return ()
