#!/usr/bin/env python3
"""
Tensor Hopf Algebra Service for whitealg

This module models the loop-space homology T[b1, b2, ...] as a Hopf algebra:
coproduct, primitivity and decomposability tests, the Eulerian projection onto
primitives, Hurewicz lifts of Lie elements and the homology suspension.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

from src.config.config_manager import ConfigManager
from src.errors import (
    DegreeCapExceeded,
    InvariantViolation,
    MixedSchedules,
    TooFewIndices,
)
from src.models.expression import Expr
from src.models.lie_element import LieElement
from src.models.schedule import GeneratorSchedule
from src.models.tensor_element import (
    CoproductValue,
    SuspendedElement,
    TensorElement,
    tensor_from_vector,
    tensor_product,
)
from src.models.words import (
    EMPTY_WORD,
    SparseVector,
    Word,
    WordTerms,
    add_scaled,
    commutator,
    concat_product,
    standard_factorization,
    words_of_degree,
)
from src.services import expr_io, linear_algebra

logger = logging.getLogger(__name__)

Pair = Tuple[Word, Word]
PairVector = Dict[Pair, Fraction]


def _letter_coproduct(letter: int, divided_powers: bool) -> PairVector:
    if not divided_powers:
        return {
            ((letter,), EMPTY_WORD): Fraction(1),
            (EMPTY_WORD, (letter,)): Fraction(1),
        }
    # b_n -> sum of b_i (x) b_j over i + j = n, with b_0 the unit
    out: PairVector = {}
    for i in range(letter + 1):
        left = (i,) if i else EMPTY_WORD
        right = (letter - i,) if letter - i else EMPTY_WORD
        out[(left, right)] = Fraction(1)
    return out


def _pair_product(u: PairVector, v: PairVector) -> PairVector:
    out: PairVector = {}
    for (a1, a2), ca in u.items():
        for (b1, b2), cb in v.items():
            key = (a1 + b1, a2 + b2)
            value = out.get(key, 0) + ca * cb
            if value:
                out[key] = value
            else:
                out.pop(key, None)
    return out


@lru_cache(maxsize=None)
def word_coproduct(
    word: Word, divided_powers: bool
) -> Tuple[Tuple[Pair, Fraction], ...]:
    """Coproduct of a single word, extended multiplicatively from its letters."""
    if not word:
        return (((EMPTY_WORD, EMPTY_WORD), Fraction(1)),)
    prefix = dict(word_coproduct(word[:-1], divided_powers))
    last = _letter_coproduct(word[-1], divided_powers)
    return tuple(_pair_product(prefix, last).items())


def _reduced_pairs(word: Word, divided_powers: bool) -> List[Tuple[Pair, Fraction]]:
    return [
        (pair, c)
        for pair, c in word_coproduct(word, divided_powers)
        if pair[0] and pair[1]
    ]


@lru_cache(maxsize=None)
def _convolution_power(word: Word, k: int, divided_powers: bool) -> WordTerms:
    """``m^(k-1) of the (k-1)-fold reduced coproduct`` applied to one word."""
    if k == 1:
        return ((word, Fraction(1)),)
    out: SparseVector = {}
    for (left, right), coefficient in _reduced_pairs(word, divided_powers):
        tail = dict(_convolution_power(right, k - 1, divided_powers))
        add_scaled(out, concat_product({left: coefficient}, tail))
    return tuple(out.items())


@lru_cache(maxsize=None)
def eulerian_word(word: Word, divided_powers: bool) -> WordTerms:
    """First Eulerian idempotent of one nonempty word."""
    out: SparseVector = {}
    k = 1
    while True:
        power = dict(_convolution_power(word, k, divided_powers))
        if not power:
            break
        add_scaled(out, power, Fraction((-1) ** (k - 1), k))
        k += 1
    return tuple(out.items())


@lru_cache(maxsize=None)
def hurewicz_word(word: Word, divided_powers: bool) -> WordTerms:
    """Primitive image of a basic product: generators lift by e1, brackets commute."""
    if len(word) == 1:
        return eulerian_word(word, divided_powers)
    left, right = standard_factorization(word)
    return tuple(
        commutator(
            dict(hurewicz_word(left, divided_powers)),
            dict(hurewicz_word(right, divided_powers)),
        ).items()
    )


class TensorHopfAlgebra:
    """
    The Hopf algebra T[b1, b2, ...] over the rationals.

    HP and CP schedules carry the divided-power coproduct on generators; custom
    schedules model a wedge of spheres whose generators are primitive.
    """

    def __init__(
        self,
        schedule: GeneratorSchedule,
        config_manager: ConfigManager = None,
        degree_cap: int = None,
    ):
        """
        Initialize the Hopf algebra.

        Args:
            schedule: Generator schedule
            config_manager: Source of the default degree cap
            degree_cap: Explicit Samelson degree cap; overrides the configuration
        """
        self.schedule = schedule
        self.divided_powers = schedule.divided_powers
        if degree_cap is None:
            degree_cap = (config_manager or ConfigManager()).get_degree_cap()
        self.degree_cap = degree_cap

    def _check_schedule(self, elem: Union[TensorElement, LieElement]) -> None:
        if elem.schedule != self.schedule:
            raise MixedSchedules(f"{elem.schedule} vs {self.schedule}")

    def _check_degree(self, samelson_degree: int) -> None:
        if samelson_degree > self.degree_cap:
            raise DegreeCapExceeded(
                f"Samelson degree {samelson_degree} exceeds cap {self.degree_cap}"
            )

    def _wrap(self, vector: SparseVector) -> TensorElement:
        return tensor_from_vector(self.schedule, vector)

    # Algebra and coalgebra structure

    def product(self, u: TensorElement, v: TensorElement) -> TensorElement:
        """Concatenation product; the unit is the empty word."""
        self._check_schedule(u)
        return tensor_product(u, v)

    def coproduct(self, u: TensorElement) -> CoproductValue:
        """Coproduct, an algebra map into T (x) T with trivial Koszul signs."""
        self._check_schedule(u)
        out: PairVector = {}
        for word, coefficient in u.terms:
            for pair, c in word_coproduct(word, self.divided_powers):
                out[pair] = out.get(pair, 0) + coefficient * c
        return CoproductValue(self.schedule, out)

    def reduced_coproduct(self, u: TensorElement) -> CoproductValue:
        """Coproduct with the ``u (x) 1`` and ``1 (x) u`` parts removed."""
        self._check_schedule(u)
        out: PairVector = {}
        for word, coefficient in u.terms:
            if not word:
                continue
            for pair, c in _reduced_pairs(word, self.divided_powers):
                out[pair] = out.get(pair, 0) + coefficient * c
        return CoproductValue(self.schedule, out)

    def cohomology_pairing(self, i: int, j: int, n: int) -> Tuple[Fraction, Fraction]:
        """
        Both sides of ``<l^i (x) l^j, coproduct(b_n)> = <l^(i+j), b_n>``.

        ``l`` is the polynomial generator dual to ``b_1`` and ``l^i`` pairs to 1 with
        ``b_i`` only (``b_0`` is the unit).

        Returns:
            (coefficient of b_i (x) b_j in the coproduct of b_n, delta(i + j, n))
        """
        self.schedule.generator(n)
        left = (i,) if i else EMPTY_WORD
        right = (j,) if j else EMPTY_WORD
        value = dict(word_coproduct((n,), self.divided_powers)).get((left, right), 0)
        return Fraction(value), Fraction(int(i + j == n))

    # Tests

    def _positive_degree(self, u: TensorElement) -> Optional[int]:
        self._check_schedule(u)
        return u.homogeneous_degree()

    def is_primitive(self, u: TensorElement) -> bool:
        """
        True when ``coproduct(u) = u (x) 1 + 1 (x) u``.

        Raises:
            NonHomogeneous: If u spans several degrees
        """
        degree = self._positive_degree(u)
        if degree is None:
            return True
        if degree == 0:
            return False
        return self.reduced_coproduct(u).is_zero()

    def is_decomposable(self, u: TensorElement) -> bool:
        """
        True when every word of u has length at least two.

        Raises:
            NonHomogeneous: If u spans several degrees
        """
        self._positive_degree(u)
        return all(len(word) >= 2 for word, _ in u.terms)

    def graded_commutator(self, u: TensorElement, v: TensorElement) -> TensorElement:
        """
        ``uv - (-1)^(|u||v|) vu``.

        Raises:
            NonHomogeneous: If either input spans several degrees
        """
        self._check_schedule(u)
        self._check_schedule(v)
        du, dv = u.homogeneous_degree(), v.homogeneous_degree()
        if du is None or dv is None:
            return TensorElement.zero(self.schedule)
        sign = -1 if (du * dv) % 2 else 1
        return self._wrap(commutator(u.vector, v.vector, sign))

    # Primitives

    def primitive_projection(self, u: TensorElement) -> TensorElement:
        """
        First Eulerian idempotent ``sum (-1)^(k-1)/k m^(k-1) reduced^(k-1)(u)``.

        The result is primitive and e1 fixes primitives.

        Raises:
            NonHomogeneous: If u spans several degrees
        """
        self._positive_degree(u)
        out: SparseVector = {}
        for word, coefficient in u.terms:
            if word:
                image = eulerian_word(word, self.divided_powers)
                add_scaled(out, dict(image), coefficient)
        return self._wrap(out)

    def hurewicz(self, n: int) -> TensorElement:
        """
        The primitive lift ``p_n = e1(b_n) = b_n + decomposables``.

        Raises:
            UnknownGenerator: If n is not in the schedule
        """
        self.schedule.generator(n)
        return self._wrap(dict(eulerian_word((n,), self.divided_powers)))

    def hurewicz_of_lie(self, elem: LieElement) -> TensorElement:
        """
        Primitive image of a Lie element: x_i goes to p_i, brackets to commutators.

        Raises:
            MixedSchedules: If the element lives over another schedule
        """
        self._check_schedule(elem)
        out: SparseVector = {}
        for basis, coefficient in elem.terms:
            image = hurewicz_word(basis.word, self.divided_powers)
            add_scaled(out, dict(image), coefficient)
        return self._wrap(out)

    def iterated_commutator_image(self, indices: Sequence[int]) -> TensorElement:
        """
        The nested commutator ``[p_i1, [p_i2, [..., p_ik]]]``, read left to right.

        The image is primitive and decomposable; both are checked on return.

        Raises:
            TooFewIndices: If fewer than two indices are given
            UnknownGenerator: If an index is not in the schedule
            InvariantViolation: If the image fails either check
        """
        indices = tuple(indices)
        if len(indices) < 2:
            raise TooFewIndices(f"Need at least two indices, got {len(indices)}")
        lifts = [self.hurewicz(i) for i in indices]
        image = lifts[-1]
        for lift in reversed(lifts[:-1]):
            image = self.graded_commutator(lift, image)

        if not (self.is_primitive(image) and self.is_decomposable(image)):
            raise InvariantViolation(
                f"Commutator image of {list(indices)} is not primitive and decomposable"
            )
        logger.debug("Commutator image of %s has %d words", indices, len(image.terms))
        return image

    def homology_suspension(self, u: TensorElement) -> SuspendedElement:
        """
        Suspension into Whitehead grading: b_n goes to beta_n, products to zero.

        Raises:
            NonHomogeneous: If u spans several degrees
        """
        self._positive_degree(u)
        letters = u.length_one_part()
        return SuspendedElement(
            self.schedule, tuple((word[0], c) for word, c in letters.terms)
        )

    def primitive_space_dim(self, samelson_degree: int) -> int:
        """
        Dimension of the primitives in a degree, by exact rank of the reduced coproduct.

        Only coordinates ``(l, r)`` with ``l <= r`` are kept; the coproduct is
        cocommutative, so the dropped half mirrors the kept one.

        Raises:
            DegreeCapExceeded: If the degree lies above the cap
        """
        self._check_degree(samelson_degree)
        if samelson_degree <= 0:
            return 0
        words = words_of_degree(self.schedule.samelson_degrees, samelson_degree)
        degree = self.schedule.word_degree
        rows = []
        for word in words:
            rows.append(
                {
                    (left, right): c
                    for (left, right), c in _reduced_pairs(word, self.divided_powers)
                    if (degree(left), left) <= (degree(right), right)
                }
            )
        dimension = len(words) - linear_algebra.rank(rows)
        logger.debug(
            "Degree %d: %d words, %d primitives", samelson_degree, len(words), dimension
        )
        return dimension

    def evaluate(
        self, expr: Union[Expr, str], via_hurewicz: bool = False
    ) -> TensorElement:
        """
        Evaluate an expression in the tensor algebra.

        Args:
            expr: Syntax tree or expression text
            via_hurewicz: Send generator i to p_i instead of b_i

        Raises:
            UnknownGenerator: If a leaf is not in the schedule
            DegreeCapExceeded: If a term of the expression lies above the cap
        """
        if isinstance(expr, str):
            expr = expr_io.parse_expr(expr)
        self._check_degree(expr_io.expression_degree(expr, self.schedule))
        leaf = self.hurewicz if via_hurewicz else None
        return expr_io.evaluate_tensor(expr, self.schedule, leaf)
