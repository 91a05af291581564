#!/usr/bin/env python3
"""
Exact Linear Algebra Service for whitealg

Thin wrappers around sympy's DomainMatrix over QQ for rank, determinant and
inverse computations on Fraction data.
"""

import logging
from fractions import Fraction
from typing import Dict, Hashable, List, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from src.errors import NotInvertible

logger = logging.getLogger(__name__)

Matrix = List[List[Fraction]]


def _to_qq(value: Fraction):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _from_qq(value) -> Fraction:
    rational = QQ.to_sympy(value)
    return Fraction(int(rational.p), int(rational.q))


def rank(vectors: Sequence[Dict[Hashable, Fraction]]) -> int:
    """
    Rank of a family of sparse vectors.

    Args:
        vectors: Mappings coordinate -> coefficient; coordinates may be any hashable

    Returns:
        Dimension of the span of the vectors
    """
    columns: Dict[Hashable, int] = {}
    rows: Dict[int, Dict[int, object]] = {}
    for vector in vectors:
        row = {}
        for key, coefficient in vector.items():
            if coefficient:
                row[columns.setdefault(key, len(columns))] = _to_qq(coefficient)
        if row:
            rows[len(rows)] = row
    if not rows:
        return 0
    logger.debug("Rank of sparse %d x %d matrix", len(rows), len(columns))
    matrix = DomainMatrix(rows, (len(rows), len(columns)), QQ)
    return matrix.rank()


def _dense(matrix: Matrix) -> DomainMatrix:
    size = len(matrix)
    return DomainMatrix([[_to_qq(c) for c in row] for row in matrix], (size, size), QQ)


def determinant(matrix: Matrix) -> Fraction:
    """Determinant of a square Fraction matrix; the empty matrix has determinant 1."""
    if not matrix:
        return Fraction(1)
    return _from_qq(_dense(matrix).det())


def inverse(matrix: Matrix) -> Matrix:
    """
    Inverse of a square Fraction matrix.

    Raises:
        NotInvertible: If the determinant is zero
    """
    if not matrix:
        return []
    if determinant(matrix) == 0:
        raise NotInvertible("Singular layer matrix")
    inverted = _dense(matrix).inv().to_Matrix()
    return [
        [Fraction(int(entry.p), int(entry.q)) for entry in row]
        for row in inverted.tolist()
    ]


def is_independent(vectors: Sequence[Dict[Hashable, Fraction]]) -> bool:
    """True when the vectors are linearly independent."""
    return rank(vectors) == len(vectors)
