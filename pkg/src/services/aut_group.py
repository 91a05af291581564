#!/usr/bin/env python3
"""
Automorphism Group Service for whitealg

This module works with the graded Lie automorphisms of a truncated Whitehead
algebra L<=n: it builds sign, scaling and unipotent automorphisms, composes,
inverts and powers them, decides their order and assembles the group-level
reports (structure, exact-sequence checks and the finite-cokernel witness).
"""

import itertools
import logging
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from src.config.config_manager import ConfigManager
from src.errors import (
    DegreeMismatch,
    IndexOutOfRange,
    InvariantViolation,
    LatticeViolation,
    MissingAlpha,
    MixedSchedules,
    NonDiagonalLinearPart,
    NotDecomposable,
    NotInvertible,
    ScalingInZMode,
    ZeroAlpha,
    ZeroScalar,
)
from src.models.lie_element import LieElement
from src.models.morphism import GradedMorphism
from src.models.reports import (
    VERDICT_FINITE,
    AutReport,
    ExactSequenceReport,
    NoncommuteWitness,
    NoncommutingPair,
    OrderResult,
    SntLayer,
    SntReport,
)
from src.models.schedule import HallBasisElement
from src.models.truncated_algebra import TruncatedAlgebra
from src.models.words import Word, standard_factorization
from src.services import expr_io
from src.services.graded_lie import FreeLieAlgebra
from src.services.homotopy_model import indecomposables_and_decomposables
from src.services.linear_algebra import determinant, inverse

logger = logging.getLogger(__name__)

Matrix = List[List[Fraction]]
AlphaKey = Tuple[int, Word]
Translation = Union[HallBasisElement, LieElement, Word]

STRUCTURE_TRIVIAL = "trivial"
STRUCTURE_INFINITE = "infinite"

# Coefficient patterns for the sampled kernel elements of the exact sequence
_KERNEL_SAMPLES = ((1,), (2, -1), (-3, 1, 2))


class AutGroup:
    """
    Automorphisms of one truncated algebra.

    Morphisms are GradedMorphism values over ``algebra``; every method is pure
    apart from per-call memo tables.
    """

    def __init__(self, algebra: TruncatedAlgebra, config_manager: ConfigManager = None):
        """
        Initialize the group.

        Args:
            algebra: The truncation L<=n acted on
            config_manager: Source of the default unipotent coefficient
        """
        self.algebra = algebra
        self.config_manager = config_manager
        self.lie = FreeLieAlgebra(
            algebra.truncated, degree_cap=max(algebra.degree_cap, 2)
        )

    @property
    def default_alpha(self) -> int:
        config_manager = self.config_manager or ConfigManager()
        return int(config_manager.get_aut_config().get("default_alpha", 1))

    def _check_domain(self, *morphisms: GradedMorphism) -> None:
        for morphism in morphisms:
            if morphism.domain != self.algebra:
                raise MixedSchedules(f"{morphism.domain} is not {self.algebra}")

    def _name(self, index: int) -> str:
        return self.algebra.truncated.generator(index).name

    # Constructors

    def identity(self) -> GradedMorphism:
        return GradedMorphism(self.algebra, {})

    def scaling_morphism(
        self, scalars: Union[Sequence[Fraction], Mapping[int, Fraction]]
    ) -> GradedMorphism:
        """
        Diagonal automorphism ``x_i -> s_i x_i``.

        Args:
            scalars: One scalar per generator, or index -> scalar for the moved ones

        Raises:
            ZeroScalar: If a scalar is zero
            ScalingInZMode: If a scalar other than +-1 is used in Z mode
        """
        if not isinstance(scalars, Mapping):
            scalars = dict(enumerate(scalars, start=1))
        images = {}
        for index, scalar in scalars.items():
            scalar = Fraction(scalar)
            if scalar == 0:
                raise ZeroScalar(f"Scalar on generator {index} is zero")
            if self.algebra.is_integral and abs(scalar) != 1:
                raise ScalingInZMode(f"Scalar {scalar} is not a unit of Z")
            images[index] = self.algebra.generator(index) * scalar
        return GradedMorphism(self.algebra, images)

    def sign_morphism(
        self, signs: Union[Sequence[int], Mapping[int, int]]
    ) -> GradedMorphism:
        """
        Automorphism ``x_i -> eps_i x_i`` with every eps_i in {+1, -1}.

        Raises:
            ValueError: If a sign is not +-1
        """
        values = signs.values() if isinstance(signs, Mapping) else signs
        if any(sign not in (1, -1) for sign in values):
            raise ValueError("Signs must be +1 or -1")
        return self.scaling_morphism(signs)

    def _translation(self, n: int, w: Translation) -> LieElement:
        if isinstance(w, HallBasisElement):
            w = w.word
        if isinstance(w, tuple):
            w = self.lie.basis_element(w)
        w = self.algebra.adopt(w)
        expected = self.algebra.generator_degree(n)
        degree = w.homogeneous_degree()
        if degree != expected:
            raise DegreeMismatch(
                f"Translation of degree {degree} cannot move x{n} of degree {expected}"
            )
        if not w.is_decomposable():
            raise NotDecomposable(f"Translation of x{n} contains a generator")
        return w

    def unipotent_morphism(
        self, n: int, w: Translation, alpha: Fraction = 1
    ) -> GradedMorphism:
        """
        Automorphism fixing every generator but ``x_n -> x_n + alpha * w``.

        Args:
            n: Index of the moved generator
            w: Decomposable element (or basic product, or Lyndon word) in the
                degree of x_n
            alpha: Nonzero coefficient

        Raises:
            IndexOutOfRange: If n is not a retained generator
            ZeroAlpha: If alpha is zero
            LatticeViolation: If alpha is not an integer in Z mode
            DegreeMismatch: If w is zero or has the wrong degree
            NotDecomposable: If w has a generator term
        """
        self.algebra.check_index(n)
        alpha = Fraction(alpha)
        if alpha == 0:
            raise ZeroAlpha(f"Unipotent on x{n} with alpha = 0")
        if self.algebra.is_integral and alpha.denominator != 1:
            raise LatticeViolation(f"Alpha {alpha} is not an integer")
        w = self._translation(n, w)
        return GradedMorphism(self.algebra, {n: self.algebra.generator(n) + w * alpha})

    def morphism_from_images(
        self, spec: Union[str, Mapping[int, Union[str, LieElement]]]
    ) -> GradedMorphism:
        """
        Morphism from text such as ``"x3 -> x3 + [x1,x2]"`` or index -> image.

        Unlisted generators are fixed; ``"id"`` is the identity.

        Raises:
            ExprSyntaxError: If the text does not parse
            IndexOutOfRange: If a generator beyond x_n is assigned
            DegreeMismatch: If an image has the wrong degree
            ValueError: If a generator is assigned twice
        """
        if isinstance(spec, str):
            if spec.strip() == expr_io.IDENTITY_TEXT:
                return self.identity()
            pairs = [
                (expr_io.resolve_index(source, self.algebra.schedule), image)
                for source, image in expr_io.parse_morphism_spec(spec)
            ]
        else:
            pairs = list(spec.items())

        images = {}
        for index, image in pairs:
            self.algebra.check_index(index)
            if index in images:
                raise ValueError(f"Generator {index} assigned twice")
            if not isinstance(image, LieElement):
                image = self.lie.reduce(image)
            images[index] = image
        return GradedMorphism(self.algebra, images)

    # Action

    def _word_image(self, f: GradedMorphism, word: Word, memo: Dict) -> LieElement:
        if word not in memo:
            if len(word) == 1:
                memo[word] = f.image(word[0])
            else:
                left, right = standard_factorization(word)
                memo[word] = self.lie.bracket(
                    self._word_image(f, left, memo), self._word_image(f, right, memo)
                )
        return memo[word]

    def apply(
        self, f: GradedMorphism, elem: LieElement, memo: Optional[Dict] = None
    ) -> LieElement:
        """
        Image of an element under the Lie extension of ``f``.

        Basic products are mapped through their standard bracketing.
        """
        self._check_domain(f)
        elem = self.algebra.adopt(elem)
        memo = {} if memo is None else memo
        result = LieElement.zero(self.algebra.truncated)
        for basis, coefficient in elem.terms:
            result = result + self._word_image(f, basis.word, memo) * coefficient
        return result

    def matrix(
        self, f: GradedMorphism, samelson_degree: int, memo: Optional[Dict] = None
    ) -> Matrix:
        """
        Matrix of ``f`` on one degree; column j is the image of basis element j.

        Raises:
            DegreeCapExceeded: If the degree lies above x_n
        """
        basis = self.algebra.basis(samelson_degree)
        memo = {} if memo is None else memo
        columns = [self._word_image(f, b.word, memo).coefficients for b in basis]
        return [[column.get(row, Fraction(0)) for column in columns] for row in basis]

    def compose(self, f: GradedMorphism, g: GradedMorphism) -> GradedMorphism:
        """The composite ``f o g`` (apply g first)."""
        self._check_domain(f, g)
        memo: Dict = {}
        images = {index: self.apply(f, image, memo) for index, image in g.images}
        return GradedMorphism(self.algebra, images)

    def equal(self, f: GradedMorphism, g: GradedMorphism) -> bool:
        return f.domain == g.domain and f.images == g.images

    def is_identity(self, f: GradedMorphism) -> bool:
        return self.equal(f, self.identity())

    def is_automorphism(self, f: GradedMorphism) -> bool:
        """
        Whether every layer matrix is invertible over the ring.

        Z mode needs determinant +-1, Q mode a nonzero determinant.
        """
        self._check_domain(f)
        memo: Dict = {}
        for degree in self.algebra.nonzero_degrees():
            det = determinant(self.matrix(f, degree, memo))
            if det == 0 or (self.algebra.is_integral and abs(det) != 1):
                return False
        return True

    def invert(self, f: GradedMorphism) -> GradedMorphism:
        """
        Inverse automorphism.

        The inverse image of a generator is read off the inverse of its layer
        matrix, then the result is checked against ``f``.

        Raises:
            NotInvertible: If f is not an automorphism
            InvariantViolation: If the candidate inverse fails the check
        """
        if not self.is_automorphism(f):
            raise NotInvertible("Morphism is not an automorphism")
        memo: Dict = {}
        images = {}
        for index in range(1, self.algebra.top_index + 1):
            degree = self.algebra.generator_degree(index)
            basis = self.algebra.basis(degree)
            inv = inverse(self.matrix(f, degree, memo))
            column = [b.word for b in basis].index((index,))
            terms = [(b, inv[row][column]) for row, b in enumerate(basis)]
            images[index] = LieElement(self.algebra.truncated, terms)
        candidate = GradedMorphism(self.algebra, images)
        if not self.is_identity(self.compose(f, candidate)):
            raise InvariantViolation("Inverse does not compose to the identity")
        return candidate

    def power(self, f: GradedMorphism, k: int) -> GradedMorphism:
        """``f^k``; negative powers go through the inverse."""
        if k < 0:
            return self.power(self.invert(f), -k)
        result = self.identity()
        base = f
        while k:
            if k & 1:
                result = self.compose(base, result)
            k >>= 1
            if k:
                base = self.compose(base, base)
        return result

    # Order

    def linear_part(self, f: GradedMorphism) -> List[Fraction]:
        """
        Diagonal scalars of ``f`` on the generators.

        Raises:
            NonDiagonalLinearPart: If a generator image has another generator term
        """
        self._check_domain(f)
        scalars = []
        for index, image in f.images:
            for basis, _ in image.terms:
                if basis.is_generator and basis.word != (index,):
                    raise NonDiagonalLinearPart(
                        f"Image of x{index} involves x{basis.word[0]}"
                    )
            generator = self.algebra.generator(index).terms[0][0]
            scalars.append(image.coefficient(generator))
        return scalars

    def linear_part_sign(self, f: GradedMorphism, n: int) -> Fraction:
        """Coefficient of x_n in f(x_n); +-1 for automorphisms in Z mode."""
        self.algebra.check_index(n)
        return self.linear_part(f)[n - 1]

    def order(self, f: GradedMorphism) -> OrderResult:
        """
        Order of an automorphism.

        With m the order of the diagonal part, ``f^m`` is unipotent: either it is
        the identity or it translates its lowest moved generator by a nonzero
        element, and the orbit of that generator grows linearly.

        Raises:
            NotInvertible: If f is not an automorphism
            NonDiagonalLinearPart: If f mixes generators
        """
        if not self.is_automorphism(f):
            raise NotInvertible("Order is only defined for automorphisms")
        text = expr_io.format_morphism(f)
        scalars = self.linear_part(f)
        for index, scalar in enumerate(scalars, start=1):
            if abs(scalar) != 1:
                name = self._name(index)
                return OrderResult(
                    morphism=text,
                    is_finite=False,
                    period=0,
                    witness_generator=name,
                    orbit=f"f^k({name}) = ({scalar})^k*{name} + ...",
                )

        period = 2 if -1 in scalars else 1
        unipotent = self.power(f, period)
        if self.is_identity(unipotent):
            order = 1 if self.is_identity(f) else period
            logger.debug("Finite order %d for %s", order, text)
            return OrderResult(
                morphism=text, is_finite=True, order=order, period=period
            )

        index = next(
            i for i, image in unipotent.images if image != self.algebra.generator(i)
        )
        generator = self.algebra.generator(index)
        displacement = unipotent.image(index) - generator
        twice = self.apply(unipotent, unipotent.image(index))
        if twice != generator + displacement * 2:
            raise InvariantViolation("Unipotent orbit is not linear")

        name = self._name(index)
        shift = expr_io.format_lie(displacement)
        if len(displacement.terms) > 1 or displacement.terms[0][1] != 1:
            shift = f"({shift})"
        exponent = "k" if period == 1 else f"{period}k"
        return OrderResult(
            morphism=text,
            is_finite=False,
            period=period,
            witness_generator=name,
            displacement=expr_io.format_lie(displacement),
            orbit=f"f^({exponent})({name}) = {name} + k*{shift}",
        )

    # Non-commutativity

    def _pair(
        self, f: GradedMorphism, g: GradedMorphism
    ) -> Optional[NoncommutingPair]:
        fg = self.compose(f, g)
        gf = self.compose(g, f)
        for index in range(1, self.algebra.top_index + 1):
            fg_image, gf_image = fg.image(index), gf.image(index)
            if fg_image != gf_image:
                return NoncommutingPair(
                    f=expr_io.format_morphism(f),
                    g=expr_io.format_morphism(g),
                    generator=self._name(index),
                    fg_image=expr_io.format_lie(fg_image),
                    gf_image=expr_io.format_lie(gf_image),
                    discrepancy=expr_io.format_lie(fg_image - gf_image),
                )
        return None

    def noncommuting_witness(
        self, m: int, alpha1: int = 1, alpha2: int = 1
    ) -> NoncommuteWitness:
        """
        The unipotents ``x_m -> x_m + a1 [x1, x_(m-1)]`` and
        ``x_(m+1) -> x_(m+1) + a2 [x1, x_m]``, which fail to commute on x_(m+1).

        Raises:
            IndexOutOfRange: If m < 3 or x_(m+1) is not retained
            ZeroAlpha: If a coefficient is zero
            InvariantViolation: If the discrepancy is not ``a1 a2 [x1,[x1,x_(m-1)]]``
        """
        if m < 3:
            raise IndexOutOfRange(f"The witness needs m >= 3, got {m}")
        self.algebra.check_index(m + 1)
        f = self.unipotent_morphism(m, (1, m - 1), alpha1)
        g = self.unipotent_morphism(m + 1, (1, m), alpha2)
        top = self.algebra.generator(m + 1)
        fg_image = self.apply(self.compose(f, g), top)
        gf_image = self.apply(self.compose(g, f), top)
        expected = self.lie.basis_element((1, 1, m - 1)) * (alpha1 * alpha2)
        if fg_image - gf_image != expected:
            raise InvariantViolation(f"Unexpected commutator on x{m + 1}")
        pair = NoncommutingPair(
            f=expr_io.format_morphism(f),
            g=expr_io.format_morphism(g),
            generator=self._name(m + 1),
            fg_image=expr_io.format_lie(fg_image),
            gf_image=expr_io.format_lie(gf_image),
            discrepancy=expr_io.format_lie(fg_image - gf_image),
        )
        return NoncommuteWitness(m=m, alpha1=alpha1, alpha2=alpha2, pair=pair)

    # Exact sequence

    def restriction(self, f: GradedMorphism, n: int) -> GradedMorphism:
        """Restriction of ``f`` to the sub-truncation L<=n."""
        self._check_domain(f)
        sub = self.algebra.truncate(n)
        return GradedMorphism(sub, {i: f.image(i) for i in range(1, n + 1)})

    def decomposables(self, n: int) -> List[HallBasisElement]:
        """Basis D_n of the decomposables in the degree of x_n."""
        return indecomposables_and_decomposables(self.algebra, n)[1]

    def exact_sequence_report(self, n: int) -> ExactSequenceReport:
        """
        Check ``0 -> Hom(I_n, D_n) -> Aut(L<=n) -> Aut(L<n) + Z2 -> 0`` on L<=n.

        The kernel is spanned by the unipotents ``phi_d: x_n -> x_n + d``; lifts
        extend an automorphism of L<n by ``x_n -> +-x_n``.

        Raises:
            IndexOutOfRange: If n is not a retained generator
        """
        self.algebra.check_index(n)
        group = AutGroup(self.algebra.truncate(n), self.config_manager)
        lower = AutGroup(group.algebra.truncate(n - 1), self.config_manager)
        basis = group.decomposables(n)
        elements = [group.lie.basis_element(d.word) for d in basis]
        kernel = [group.unipotent_morphism(n, d, 1) for d in elements]

        def in_kernel(f: GradedMorphism) -> bool:
            return (
                group.is_automorphism(f)
                and lower.is_identity(group.restriction(f, n - 1))
                and group.linear_part_sign(f, n) == 1
            )

        distinct = {phi.images for phi in kernel}
        embeds = len(distinct) == len(kernel) and all(
            in_kernel(phi) and not group.is_identity(phi) for phi in kernel
        )

        additive = all(
            group.equal(
                group.compose(kernel[i], kernel[j]),
                group.unipotent_morphism(n, elements[i] + elements[j], 1),
            )
            for i, j in itertools.product(range(len(kernel)), repeat=2)
        )

        exact = True
        top = group.algebra.generator(n)
        for pattern in _KERNEL_SAMPLES if kernel else ():
            translation = LieElement.zero(group.algebra.truncated)
            for d, c in zip(elements, itertools.cycle(pattern)):
                translation = translation + d * c
            sample = GradedMorphism(group.algebra, {n: top + translation})
            if not in_kernel(sample):
                exact = False
                continue
            shift = group.apply(sample, top) - top
            exact = exact and shift.is_decomposable()
            exact = exact and group.equal(sample, group.unipotent_morphism(n, shift, 1))

        lower_generators = [
            lower.sign_morphism({i: -1}) for i in range(1, n)
        ] + [
            lower.unipotent_morphism(k, d, 1)
            for k in range(1, n)
            for d in lower.decomposables(k)
        ]
        surjects = True
        lower_generators = lower_generators or [lower.identity()]
        for psi, epsilon in itertools.product(lower_generators, (1, -1)):
            images = dict(psi.images)
            images[n] = top * epsilon
            lift = GradedMorphism(group.algebra, images)
            surjects = surjects and (
                group.is_automorphism(lift)
                and lower.equal(group.restriction(lift, n - 1), psi)
                and group.linear_part_sign(lift, n) == epsilon
            )

        checks = {
            "kernel_embeds": embeds,
            "kernel_additive": additive,
            "kernel_exact": exact,
            "lifts_surject": surjects,
        }
        logger.info("Exact sequence at layer %d: %s", n, checks)
        return ExactSequenceReport(
            space=str(self.algebra.schedule),
            n=n,
            kernel_rank=len(basis),
            kernel_basis=[
                expr_io.format_word(d.word, self.algebra.truncated) for d in basis
            ],
            checks=checks,
        )

    # Group structure

    def _alpha(
        self,
        alphas: Optional[Mapping[AlphaKey, int]],
        layer: int,
        word: Word,
        default: Optional[int],
    ) -> int:
        value = (alphas or {}).get((layer, tuple(word)), default)
        if value is None:
            raise MissingAlpha(
                f"No alpha for {expr_io.format_word(word, self.algebra.truncated)} "
                f"in layer {layer}"
            )
        if Fraction(value) == 0:
            raise ZeroAlpha(f"Alpha for layer {layer} is zero")
        if Fraction(value).denominator != 1:
            raise LatticeViolation(f"Alpha {value} is not an integer")
        return int(value)

    def aut_report(self, alphas: Optional[Mapping[AlphaKey, int]] = None) -> AutReport:
        """
        Structure of Aut(L<=n).

        With no decomposables below the top the group is diagonal: (Z2)^n in Z mode
        and (Q*)^n in Q mode. Otherwise a unipotent of infinite order exists, and
        the canonical generators are searched for a non-commuting pair.

        Args:
            alphas: Optional (layer, Lyndon word) -> coefficient of the unipotents

        Raises:
            InvariantViolation: If an exhaustive check contradicts the verdict
        """
        n = self.algebra.top_index
        layers = {k: self.decomposables(k) for k in range(1, n + 1)}
        unipotent_rank = sum(len(d) for d in layers.values())
        common = dict(
            space=str(self.algebra.schedule),
            top_index=n,
            ring_mode=self.algebra.ring_mode,
            unipotent_rank=unipotent_rank,
        )

        if not unipotent_rank:
            return self._diagonal_report(common)

        default = self.default_alpha
        unipotents = [
            self.unipotent_morphism(k, d, self._alpha(alphas, k, d.word, default))
            for k in range(1, n + 1)
            for d in layers[k]
        ]
        witness = unipotents[0]
        witness_order = self.order(witness)
        if witness_order.is_finite:
            raise InvariantViolation("A nonzero unipotent has finite order")

        signs = [self.sign_morphism({i: -1}) for i in range(1, n + 1)]
        candidates = itertools.chain(
            itertools.combinations(unipotents, 2),
            itertools.product(signs, unipotents),
        )
        pair = None
        for f, g in candidates:
            pair = self._pair(f, g)
            if pair is not None:
                break
        logger.info(
            "Aut(L<=%d) of %s: abelian=%s", n, self.algebra.schedule, pair is None
        )
        return AutReport(
            is_finite=False,
            order=None,
            is_abelian=pair is None,
            structure=STRUCTURE_INFINITE,
            infinite_witness=expr_io.format_morphism(witness),
            witness_order=witness_order,
            noncommuting_pair=pair,
            **common,
        )

    def _diagonal_report(self, common: Dict) -> AutReport:
        n = self.algebra.top_index
        if n == 0:
            return AutReport(
                is_finite=True, order=1, is_abelian=True, structure=STRUCTURE_TRIVIAL,
                **common,
            )
        if not self.algebra.is_integral:
            witness = self.scaling_morphism({1: 2})
            return AutReport(
                is_finite=False,
                order=None,
                is_abelian=True,
                structure=" + ".join(["Q*"] * n),
                infinite_witness=expr_io.format_morphism(witness),
                witness_order=self.order(witness),
                **common,
            )

        elements = [
            self.sign_morphism(signs) for signs in itertools.product((1, -1), repeat=n)
        ]
        keys = {f.images for f in elements}
        for f, g in itertools.product(elements, repeat=2):
            fg = self.compose(f, g)
            if fg.images not in keys or not self.equal(fg, self.compose(g, f)):
                raise InvariantViolation(
                    "Sign automorphisms do not form an abelian group"
                )
        if not all(self.is_automorphism(f) for f in elements):
            raise InvariantViolation("A sign morphism is not invertible")
        return AutReport(
            is_finite=True,
            order=len(keys),
            is_abelian=True,
            structure=" + ".join(["Z2"] * n),
            **common,
        )

    def snt_cokernel_witness(
        self,
        alphas: Optional[Mapping[AlphaKey, int]] = None,
        default: Optional[int] = None,
    ) -> SntReport:
        """
        Finite-index witness for the realized translations.

        Each decomposable d of layer k contributes ``x_k -> x_k + alpha(k, d) d``;
        the translations of a layer span a sublattice of Z^|D_k| whose index is
        ``|det|`` of their coordinate matrix.

        Args:
            alphas: (layer, Lyndon word) -> nonzero integer
            default: Coefficient for pairs missing from ``alphas``

        Raises:
            MissingAlpha: If a pair has no coefficient and no default is given
            ZeroAlpha: If a coefficient is zero
            LatticeViolation: If a coefficient is not an integer
        """
        layers = []
        total = 1
        for k in range(1, self.algebra.top_index + 1):
            basis = self.decomposables(k)
            if not basis:
                continue
            values = [self._alpha(alphas, k, d.word, default) for d in basis]
            top = self.algebra.generator(k)
            rows = []
            for d, alpha in zip(basis, values):
                phi = self.unipotent_morphism(k, d, alpha)
                shift = self.apply(phi, top) - top
                rows.append([shift.coefficient(b) for b in basis])
            index = int(abs(determinant(rows)))
            total *= index
            layers.append(
                SntLayer(
                    layer=k,
                    whitehead_dim=self.algebra.generator_degree(k) + 1,
                    decomposables=[
                        expr_io.format_word(d.word, self.algebra.truncated)
                        for d in basis
                    ],
                    alphas=values,
                    index=index,
                )
            )
        return SntReport(
            space=str(self.algebra.schedule),
            top_index=self.algebra.top_index,
            layers=layers,
            total_index=total,
            verdict=VERDICT_FINITE,
        )
