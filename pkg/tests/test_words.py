"""Tests for Lyndon word combinatorics."""

from fractions import Fraction

import pytest

from src.models.words import (
    commutator,
    concat_product,
    is_lyndon,
    lyndon_expansion,
    lyndon_words,
    standard_factorization,
    words_of_degree,
)


class TestLyndonWords:
    def test_is_lyndon(self):
        assert is_lyndon((1,))
        assert is_lyndon((1, 2))
        assert is_lyndon((1, 1, 2))
        assert is_lyndon((1, 2, 2))
        assert not is_lyndon((1, 1))
        assert not is_lyndon((2, 1))
        assert not is_lyndon((1, 2, 1))
        assert not is_lyndon(())

    def test_standard_factorization_uses_smallest_suffix(self):
        assert standard_factorization((1, 2)) == ((1,), (2,))
        assert standard_factorization((1, 1, 2)) == ((1,), (1, 2))
        assert standard_factorization((1, 2, 2)) == ((1, 2), (2,))
        assert standard_factorization((1, 1, 1, 2)) == ((1,), (1, 1, 2))

    def test_standard_factorization_needs_two_letters(self):
        with pytest.raises(ValueError):
            standard_factorization((3,))

    def test_weight_five_words(self):
        # letter i has weight i
        words = lyndon_words((1, 2, 3, 4, 5), 5)
        assert words == (
            (5,),
            (1, 4),
            (2, 3),
            (1, 1, 3),
            (1, 2, 2),
            (1, 1, 1, 2),
        )

    def test_generated_words_are_lyndon(self):
        degrees = (2, 4, 6, 8)
        for target in range(2, 17, 2):
            words = lyndon_words(degrees, target)
            assert len(set(words)) == len(words)
            for word in words:
                assert is_lyndon(word)
                assert sum(degrees[i - 1] for i in word) == target

    def test_matches_brute_force(self):
        degrees = (4, 8, 12, 16)
        for target in (4, 8, 12, 16, 20, 24):
            brute = [w for w in words_of_degree(degrees, target) if is_lyndon(w)]
            assert sorted(brute) == sorted(lyndon_words(degrees, target))

    def test_non_positive_target(self):
        assert lyndon_words((2,), 0) == ()
        assert lyndon_words((2,), -2) == ()

    def test_words_of_degree(self):
        assert words_of_degree((4, 8), 0) == ((),)
        assert words_of_degree((4, 8), 8) == ((2,), (1, 1))
        assert len(words_of_degree((4, 8, 12, 16), 16)) == 8


class TestExpansion:
    def test_commutator(self):
        a = {(1,): Fraction(1)}
        b = {(2,): Fraction(1)}
        assert commutator(a, b) == {(1, 2): 1, (2, 1): -1}
        assert commutator(a, a) == {}

    def test_concat_product_cancels(self):
        u = {(1,): Fraction(1), (2,): Fraction(-1)}
        v = {(3,): Fraction(1)}
        assert concat_product(u, v) == {(1, 3): 1, (2, 3): -1}

    def test_expansion_leads_with_its_word(self):
        for word in [(1, 2), (1, 1, 2), (1, 2, 2), (1, 1, 1, 2), (1, 2, 3), (1, 3, 2)]:
            expansion = dict(lyndon_expansion(word))
            assert min(expansion) == word
            assert expansion[word] == 1

    def test_expansion_of_nested_bracket(self):
        # [x1,[x1,x2]] = 112 - 2*121 + 211
        assert dict(lyndon_expansion((1, 1, 2))) == {
            (1, 1, 2): 1,
            (1, 2, 1): -2,
            (2, 1, 1): 1,
        }
