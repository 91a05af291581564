#!/usr/bin/env python3
"""
Free Graded Lie Algebra Service for whitealg

This module provides the free graded Lie algebra over the rationals on a
generator schedule: Lyndon basis enumeration, normal forms of brackets and the
embedding into the free associative (tensor) algebra.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple, Union

from sympy.ntheory import divisors, mobius

from src.config.config_manager import ConfigManager
from src.errors import DegreeCapExceeded, MixedSchedules, NotALieElement
from src.models.expression import Expr
from src.models.lie_element import LieElement
from src.models.schedule import (
    FAMILY_CP,
    FAMILY_HP,
    GeneratorSchedule,
    HallBasisElement,
)
from src.models.tensor_element import TensorElement, tensor_from_vector
from src.models.words import (
    SparseVector,
    Word,
    add_scaled,
    commutator,
    is_lyndon,
    lyndon_expansion,
    lyndon_words,
)
from src.services import expr_io

logger = logging.getLogger(__name__)

# Samelson degree step of the arithmetic families: generator i sits in unit * i
_FAMILY_UNIT = {FAMILY_HP: 4, FAMILY_CP: 2}


@lru_cache(maxsize=None)
def _word_counts_by_length(degrees: Tuple[int, ...], target: int) -> Tuple[int, ...]:
    """``counts[k]`` is the number of words of length k and total degree ``target``."""
    table: List[Dict[int, int]] = [dict() for _ in range(target + 1)]
    table[0][0] = 1
    for total in range(1, target + 1):
        row = table[total]
        for degree in degrees:
            if degree <= total:
                for length, count in table[total - degree].items():
                    row[length + 1] = row.get(length + 1, 0) + count
    top = max(table[target], default=0)
    return tuple(table[target].get(k, 0) for k in range(top + 1))


def _log_series_coefficient(degrees: Tuple[int, ...], total: int) -> int:
    """``total * [t^total] log 1/(1 - g(t))`` for the generator series g."""
    counts = _word_counts_by_length(degrees, total)
    value = sum(
        Fraction(total * count, length)
        for length, count in enumerate(counts)
        if length
    )
    return int(value)


class FreeLieAlgebra:
    """
    Free graded Lie algebra on a schedule of even-degree generators.

    Elements are LieElement values written in the Lyndon basis. Every operation
    is pure; the heavy word-level work is cached per word.
    """

    def __init__(
        self,
        schedule: GeneratorSchedule,
        config_manager: ConfigManager = None,
        degree_cap: int = None,
    ):
        """
        Initialize the algebra.

        Args:
            schedule: Generator schedule
            config_manager: Source of the default degree cap
            degree_cap: Explicit Samelson degree cap; overrides the configuration
        """
        self.schedule = schedule
        if degree_cap is None:
            degree_cap = (config_manager or ConfigManager()).get_degree_cap()
        if degree_cap <= 0:
            raise ValueError("Degree cap must be positive")
        self.degree_cap = degree_cap

    def check_degree(self, samelson_degree: int) -> None:
        """
        Raises:
            DegreeCapExceeded: If the degree lies above the cap
        """
        if samelson_degree > self.degree_cap:
            raise DegreeCapExceeded(
                f"Samelson degree {samelson_degree} exceeds cap {self.degree_cap}"
            )

    def _check_schedule(self, elem: Union[LieElement, TensorElement]) -> None:
        if elem.schedule != self.schedule:
            raise MixedSchedules(f"{elem.schedule} vs {self.schedule}")

    # Basis

    def lyndon_basis(self, samelson_degree: int) -> List[HallBasisElement]:
        """
        Basic products of a given Samelson degree in canonical order.

        Args:
            samelson_degree: Degree to enumerate; odd or non-positive degrees give
                an empty list

        Returns:
            Hall basis elements sorted by length, then word

        Raises:
            DegreeCapExceeded: If the degree is above the cap
        """
        self.check_degree(samelson_degree)
        if samelson_degree <= 0 or samelson_degree % 2:
            return []
        words = lyndon_words(self.schedule.samelson_degrees, samelson_degree)
        logger.debug("Degree %d: %d basic products", samelson_degree, len(words))
        return [HallBasisElement(word, samelson_degree) for word in words]

    def rank(self, samelson_degree: int) -> int:
        """Number of basic products in a degree."""
        return len(self.lyndon_basis(samelson_degree))

    def witt_rank(self, samelson_degree: int) -> int:
        """
        Rank predicted by the necklace count, without enumerating words.

        Uses the closed form ``(1/n) sum mu(n/d) (2^d - 1)`` when the schedule is an
        HP or CP schedule long enough to reach the degree, and the Moebius
        inversion of the word-count log series otherwise.
        """
        self.check_degree(samelson_degree)
        if samelson_degree <= 0 or not self.schedule.count:
            return 0
        unit = _FAMILY_UNIT.get(self.schedule.family_tag)
        n = samelson_degree // unit if unit else 0
        if unit and samelson_degree % unit == 0 and n <= self.schedule.count:
            total = sum(mobius(n // d) * (2 ** d - 1) for d in divisors(n))
            return int(total) // n

        degrees = self.schedule.samelson_degrees
        total = sum(
            mobius(samelson_degree // d) * _log_series_coefficient(degrees, d)
            for d in divisors(samelson_degree)
        )
        return int(total) // samelson_degree

    # Elements

    def zero(self) -> LieElement:
        return LieElement.zero(self.schedule)

    def generator(self, index: int) -> LieElement:
        """The generator x_index as a Lie element."""
        return self.basis_element((index,))

    def basis_element(self, word: Word) -> LieElement:
        """
        The basic product of a Lyndon word.

        Raises:
            ValueError: If the word is not Lyndon
            UnknownGenerator: If a letter is outside the schedule
        """
        basis = HallBasisElement.from_word(tuple(word), self.schedule)
        self.check_degree(basis.samelson_degree)
        return LieElement(self.schedule, ((basis, 1),))

    # Tensor embedding and straightening

    def embed_assoc(self, elem: LieElement) -> TensorElement:
        """
        Image of a Lie element in the tensor algebra.

        Generators go to letters and brackets to commutators.
        """
        self._check_schedule(elem)
        vector: SparseVector = {}
        for basis, coefficient in elem.terms:
            add_scaled(vector, dict(lyndon_expansion(basis.word)), coefficient)
        return tensor_from_vector(self.schedule, vector)

    def lie_from_assoc(self, elem: TensorElement) -> LieElement:
        """
        Recover the Lie element whose commutator expansion is ``elem``.

        The smallest word left in the residual must be Lyndon; its basic product
        is subtracted until nothing remains.

        Raises:
            NotALieElement: If a non-Lyndon word leads the residual
        """
        self._check_schedule(elem)
        return self._straighten(elem.vector)

    def _straighten(self, vector: SparseVector) -> LieElement:
        residual = dict(vector)
        terms: List[Tuple[HallBasisElement, Fraction]] = []
        while residual:
            leading = min(residual)
            coefficient = residual[leading]
            if not is_lyndon(leading):
                raise NotALieElement(
                    f"Word {list(leading)} with coefficient {coefficient} "
                    "remains after straightening"
                )
            basis = HallBasisElement.from_word(leading, self.schedule)
            terms.append((basis, coefficient))
            add_scaled(residual, dict(lyndon_expansion(leading)), -coefficient)
        logger.debug("Straightened %d words into %d terms", len(vector), len(terms))
        return LieElement(self.schedule, terms)

    def _checked(self, elem: LieElement) -> LieElement:
        for basis, _ in elem.terms:
            self.check_degree(basis.samelson_degree)
        return elem

    def bracket(self, a: LieElement, b: LieElement) -> LieElement:
        """
        Graded bracket in normal form.

        Raises:
            MixedSchedules: If the operands live over different schedules
        """
        self._check_schedule(a)
        self._check_schedule(b)
        if a.is_zero() or b.is_zero():
            return self.zero()
        # even schedule: the Koszul sign is +1
        product = commutator(self.embed_assoc(a).vector, self.embed_assoc(b).vector)
        return self._checked(self._straighten(product))

    def reduce(self, expr: Union[Expr, str]) -> LieElement:
        """
        Normal form of a bracket expression.

        Args:
            expr: Syntax tree or expression text

        Raises:
            UnknownGenerator: If a leaf is not in the schedule
            DegreeCapExceeded: If a term of the expression lies above the cap
            NotALieElement: If the expression uses products that leave the Lie
                algebra
        """
        if isinstance(expr, str):
            expr = expr_io.parse_expr(expr)
        self.check_degree(expr_io.expression_degree(expr, self.schedule))
        tensor = expr_io.evaluate_tensor(expr, self.schedule)
        return self._checked(self.lie_from_assoc(tensor))
