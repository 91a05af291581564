"""Tests for the tensor Hopf algebra: coproduct, primitives and Hurewicz lifts."""

import itertools
from fractions import Fraction

import pytest

from src.errors import (
    DegreeCapExceeded,
    NonHomogeneous,
    TooFewIndices,
    UnknownGenerator,
)
from src.models.tensor_element import CoproductValue, TensorElement
from src.models.words import words_of_degree
from src.services import linear_algebra
from src.services.expr_io import format_suspended, format_tensor
from src.services.graded_lie import FreeLieAlgebra
from src.services.tensor_hopf import TensorHopfAlgebra, word_coproduct


def random_tensor(rng, schedule, degree):
    words = words_of_degree(schedule.samelson_degrees, degree)
    terms = [(w, rng.randint(-2, 2)) for w in words if rng.random() < 0.5]
    return TensorElement(schedule, terms)


def triple_left(word, divided):
    out = {}
    for (a, b), c in word_coproduct(word, divided):
        for (a1, a2), c2 in word_coproduct(a, divided):
            key = (a1, a2, b)
            out[key] = out.get(key, 0) + c * c2
    return {k: v for k, v in out.items() if v}


def triple_right(word, divided):
    out = {}
    for (a, b), c in word_coproduct(word, divided):
        for (b1, b2), c2 in word_coproduct(b, divided):
            key = (a, b1, b2)
            out[key] = out.get(key, 0) + c * c2
    return {k: v for k, v in out.items() if v}


class TestCoproduct:
    def test_divided_power_rule(self, hopf6, hp6):
        delta = hopf6.coproduct(TensorElement.generator(hp6, 2))
        assert dict(delta.terms) == {
            ((2,), ()): 1,
            ((1,), (1,)): 1,
            ((), (2,)): 1,
        }

    def test_custom_generators_are_primitive(self, wedge):
        hopf = TensorHopfAlgebra(wedge, degree_cap=60)
        for index in (1, 2, 3):
            assert hopf.is_primitive(TensorElement.generator(wedge, index))

    def test_cohomology_pairing(self, hopf6):
        for n in range(1, 7):
            for i, j in itertools.product(range(n + 1), repeat=2):
                left, right = hopf6.cohomology_pairing(i, j, n)
                assert left == right

    def test_coassociative(self, hp6):
        for degree in range(4, 25, 4):
            words = words_of_degree(hp6.samelson_degrees, degree)
            for word in words[:40]:
                for divided in (True, False):
                    assert triple_left(word, divided) == triple_right(word, divided)

    def test_multiplicative(self, hopf6, hp6, rng):
        for _ in range(30):
            u = random_tensor(rng, hp6, rng.choice([4, 8, 12]))
            v = random_tensor(rng, hp6, rng.choice([4, 8, 12]))
            product = hopf6.coproduct(hopf6.product(u, v))
            assert product == hopf6.coproduct(u) * hopf6.coproduct(v)

    def test_reduced_coproduct(self, hopf6, hp6):
        reduced = hopf6.reduced_coproduct(TensorElement.generator(hp6, 1))
        assert reduced.is_zero()
        reduced = hopf6.reduced_coproduct(TensorElement.generator(hp6, 3))
        assert dict(reduced.terms) == {((1,), (2,)): 1, ((2,), (1,)): 1}

    def test_round_trip_dict(self, hopf6, hp6):
        delta = hopf6.coproduct(TensorElement(hp6, [((1, 2), 3), ((3,), -1)]))
        assert CoproductValue.from_dict(delta.to_dict()) == delta


class TestPrimitives:
    def test_hurewicz_two(self, hopf6):
        assert format_tensor(hopf6.hurewicz(2)) == "b2 - 1/2*b1.b1"

    def test_hurewicz_three(self, hopf6):
        assert format_tensor(hopf6.hurewicz(3)) == (
            "b3 - 1/2*b1.b2 - 1/2*b2.b1 + 1/3*b1.b1.b1"
        )

    def test_hurewicz_lifts_are_primitive(self, hopf6):
        for n in range(1, 7):
            lift = hopf6.hurewicz(n)
            assert hopf6.is_primitive(lift)
            assert lift.coefficient((n,)) == 1
            assert not hopf6.is_decomposable(lift)

    def test_generator_is_not_primitive(self, hopf6, hp6):
        assert hopf6.is_primitive(TensorElement.generator(hp6, 1))
        assert not hopf6.is_primitive(TensorElement.generator(hp6, 2))

    def test_degree_zero_and_zero(self, hopf6, hp6):
        assert not hopf6.is_primitive(TensorElement.unit(hp6))
        assert hopf6.is_primitive(TensorElement.zero(hp6))

    def test_generator_plus_product_is_not_decomposable(self, hopf6, hp6):
        u = TensorElement(hp6, [((3,), 1), ((1, 2), 1)])
        assert not hopf6.is_decomposable(u)
        assert hopf6.is_decomposable(TensorElement(hp6, [((1, 2), 1)]))

    def test_non_homogeneous(self, hopf6, hp6):
        mixed = TensorElement(hp6, [((1,), 1), ((2,), 1)])
        with pytest.raises(NonHomogeneous):
            hopf6.is_primitive(mixed)

    def test_eulerian_idempotent(self, hopf6, hp6, rng):
        for _ in range(20):
            u = random_tensor(rng, hp6, rng.choice([8, 12, 16, 20, 24]))
            once = hopf6.primitive_projection(u)
            assert hopf6.is_primitive(once)
            assert hopf6.primitive_projection(once) == once

    def test_primitive_space_matches_rank(self, hp10):
        hopf = TensorHopfAlgebra(hp10, degree_cap=60)
        algebra = FreeLieAlgebra(hp10, degree_cap=60)
        for degree in range(2, 41, 2):
            assert hopf.primitive_space_dim(degree) == algebra.rank(degree)

    def test_hurewicz_images_form_a_basis(self, hp10):
        hopf = TensorHopfAlgebra(hp10, degree_cap=60)
        algebra = FreeLieAlgebra(hp10, degree_cap=60)
        for degree in range(4, 29, 4):
            images = [
                hopf.hurewicz_of_lie(algebra.basis_element(b.word))
                for b in algebra.lyndon_basis(degree)
            ]
            assert all(hopf.is_primitive(image) for image in images)
            vectors = [image.vector for image in images]
            assert linear_algebra.is_independent(vectors)
            assert len(images) == hopf.primitive_space_dim(degree)


class TestCommutatorImages:
    def test_two_fold(self, hopf6):
        image = hopf6.iterated_commutator_image((1, 2))
        assert hopf6.is_primitive(image)
        assert hopf6.is_decomposable(image)

    def test_suite(self, hp6):
        hopf = TensorHopfAlgebra(hp6, degree_cap=60)
        checked = 0
        for k in (2, 3, 4):
            for indices in itertools.product(range(1, 5), repeat=k):
                if 4 * sum(indices) > 32:
                    continue
                image = hopf.iterated_commutator_image(indices)
                if image.is_zero():
                    continue
                checked += 1
                assert hopf.is_primitive(image)
                assert hopf.is_decomposable(image)
                assert hopf.homology_suspension(image).is_zero()
        assert checked > 50

    def test_too_few_indices(self, hopf6):
        with pytest.raises(TooFewIndices):
            hopf6.iterated_commutator_image((1,))

    def test_unknown_index(self, hopf6):
        with pytest.raises(UnknownGenerator):
            hopf6.iterated_commutator_image((1, 9))


class TestSuspension:
    def test_products_vanish(self, hopf6):
        suspended = hopf6.homology_suspension(hopf6.evaluate("b1.b2"))
        assert format_suspended(suspended) == "0"

    def test_lift_suspends_to_generator(self, hopf6):
        suspended = hopf6.homology_suspension(hopf6.hurewicz(3))
        assert format_suspended(suspended) == "beta3"
        assert suspended.whitehead_degrees() == (13,)

    def test_evaluate_via_hurewicz(self, hopf6):
        image = hopf6.evaluate("[b1,b2]", via_hurewicz=True)
        assert image == hopf6.iterated_commutator_image((1, 2))
        assert hopf6.evaluate("2*b1") * Fraction(1, 2) == hopf6.evaluate("b1")

    def test_evaluate_checks_cap_before_expanding(self, hopf6):
        text = "b3"
        for depth in range(24):
            text = f"[b{1 + depth % 2},{text}]"
        with pytest.raises(DegreeCapExceeded):
            hopf6.evaluate(text)
        with pytest.raises(DegreeCapExceeded):
            hopf6.evaluate(text, via_hurewicz=True)
        with pytest.raises(DegreeCapExceeded):
            hopf6.evaluate("b6.b6.b6")
