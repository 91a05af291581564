"""Tests for generator schedules, Hall basis elements and Lie elements."""

from fractions import Fraction

import pytest

from src.errors import (
    MixedSchedules,
    NonHomogeneous,
    OddParityUnsupported,
    UnknownGenerator,
)
from src.models.lie_element import LieElement
from src.models.schedule import (
    FAMILY_CP,
    FAMILY_CUSTOM,
    FAMILY_HP,
    FAMILY_RP,
    Generator,
    GeneratorSchedule,
    HallBasisElement,
)
from src.services.homotopy_model import generator_count_for, make_schedule


class TestGeneratorSchedule:
    def test_hp_degrees(self):
        schedule = make_schedule(FAMILY_HP, 3)
        assert [g.name for g in schedule.generators] == ["x1", "x2", "x3"]
        assert schedule.samelson_degrees == (4, 8, 12)
        assert str(schedule) == "HP(5,9,13)"
        assert schedule.divided_powers

    def test_cp_names_follow_whitehead_degree(self):
        schedule = make_schedule(FAMILY_CP, 3)
        assert [g.name for g in schedule.generators] == ["xi3", "xi5", "xi7"]
        assert schedule.samelson_degrees == (2, 4, 6)
        assert schedule.index_of_whitehead_degree(7) == 3

    def test_rp_is_empty(self):
        schedule = make_schedule(FAMILY_RP, 5)
        assert schedule.count == 0

    def test_custom_wedge(self, wedge):
        assert wedge.samelson_degrees == (2, 4, 8)
        assert wedge.family_tag == FAMILY_CUSTOM
        assert not wedge.divided_powers

    def test_odd_samelson_degree_rejected(self):
        with pytest.raises(OddParityUnsupported):
            make_schedule(FAMILY_CUSTOM, whitehead_degrees=[3, 4])

    def test_degrees_must_increase(self):
        with pytest.raises(ValueError):
            make_schedule(FAMILY_CUSTOM, whitehead_degrees=[5, 3])

    def test_family_degrees_enforced(self):
        with pytest.raises(ValueError):
            GeneratorSchedule((Generator("x1", 7, 6),), FAMILY_HP)

    def test_unknown_generator(self, hp6):
        with pytest.raises(UnknownGenerator):
            hp6.generator(7)
        with pytest.raises(UnknownGenerator):
            hp6.index_of_whitehead_degree(11)

    def test_round_trip_dict(self, cp4):
        assert GeneratorSchedule.from_dict(cp4.to_dict()) == cp4

    def test_generator_count_for(self):
        assert generator_count_for(FAMILY_HP, 21) == 5
        assert generator_count_for(FAMILY_HP, 4) == 0
        assert generator_count_for(FAMILY_CP, 9) == 4
        assert generator_count_for(FAMILY_RP, 30) == 0


class TestHallBasisElement:
    def test_from_word(self, hp6):
        basis = HallBasisElement.from_word((1, 1, 2), hp6)
        assert basis.samelson_degree == 16
        assert basis.length == 3
        assert basis.factors() == ((1,), (1, 2))
        assert not basis.is_generator

    def test_non_lyndon_rejected(self, hp6):
        with pytest.raises(ValueError):
            HallBasisElement.from_word((2, 1), hp6)

    def test_sort_key_puts_generators_first(self, hp6):
        x3 = HallBasisElement.from_word((3,), hp6)
        bracket = HallBasisElement.from_word((1, 2), hp6)
        assert x3.sort_key() < bracket.sort_key()


class TestLieElement:
    def element(self, schedule, *pairs):
        return LieElement(
            schedule, [(HallBasisElement.from_word(w, schedule), c) for w, c in pairs]
        )

    def test_terms_merge_and_sort(self, hp6):
        elem = self.element(hp6, ((1, 2), 1), ((3,), 2), ((1, 2), 1))
        assert [b.word for b, _ in elem.terms] == [(3,), (1, 2)]
        assert elem.coefficient(HallBasisElement.from_word((1, 2), hp6)) == 2

    def test_cancellation(self, hp6):
        elem = self.element(hp6, ((1, 2), 1), ((1, 2), -1))
        assert elem.is_zero()
        assert elem.homogeneous_degree() is None

    def test_arithmetic(self, hp6):
        a = self.element(hp6, ((3,), 1))
        b = self.element(hp6, ((1, 2), Fraction(1, 2)))
        total = a + b * 2 - a
        assert total == self.element(hp6, ((1, 2), 1))
        assert (-total).terms[0][1] == -1

    def test_decomposable_and_integral(self, hp6):
        assert self.element(hp6, ((1, 2), 3)).is_decomposable()
        assert not self.element(hp6, ((3,), 1), ((1, 2), 1)).is_decomposable()
        assert not self.element(hp6, ((1, 2), Fraction(1, 3))).is_integral()

    def test_non_homogeneous(self, hp6):
        with pytest.raises(NonHomogeneous):
            self.element(hp6, ((1,), 1), ((2,), 1)).homogeneous_degree()

    def test_mixed_schedules(self, hp6, cp4):
        with pytest.raises(MixedSchedules):
            self.element(hp6, ((1,), 1)) + self.element(cp4, ((1,), 1))

    def test_round_trip_dict(self, hp6):
        elem = self.element(hp6, ((3,), 2), ((1, 2), Fraction(-3, 4)))
        assert LieElement.from_dict(elem.to_dict()) == elem
