#!/usr/bin/env python3
"""
Word combinatorics for free graded Lie and tensor algebras.

Words are tuples of 1-based generator indices. Letters carry Samelson degrees given
by a tuple ``degrees`` where ``degrees[i - 1]`` is the degree of letter ``i``. Sparse
vectors over words are plain dictionaries ``word -> Fraction`` with no zero values.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

Word = Tuple[int, ...]
SparseVector = Dict[Word, Fraction]
WordTerms = Tuple[Tuple[Word, Fraction], ...]

EMPTY_WORD: Word = ()


def word_degree(word: Word, degrees: Tuple[int, ...]) -> int:
    """Sum of the letter degrees of ``word``."""
    return sum(degrees[letter - 1] for letter in word)


def is_lyndon(word: Word) -> bool:
    """
    Check the Lyndon property under index order.

    A nonempty word is Lyndon when it is strictly smaller than each of its proper
    suffixes.
    """
    if not word:
        return False
    return all(word < word[i:] for i in range(1, len(word)))


def standard_factorization(word: Word) -> Tuple[Word, Word]:
    """
    Split a Lyndon word of length >= 2 as ``u v`` with ``v`` its smallest proper suffix.

    Both factors are Lyndon and ``u < v``.
    """
    if len(word) < 2:
        raise ValueError(f"Word {word} has no standard factorization")
    split = min(range(1, len(word)), key=lambda i: word[i:])
    return word[:split], word[split:]


def _extend_prenecklace(
    prefix: List[int],
    period: int,
    remaining: int,
    degrees: Tuple[int, ...],
) -> Iterator[Word]:
    if remaining == 0:
        if prefix and period == len(prefix):
            yield tuple(prefix)
        return
    for letter, degree in enumerate(degrees, start=1):
        if degree > remaining:
            continue
        if prefix:
            reference = prefix[len(prefix) - period]
            if letter < reference:
                continue
            new_period = period if letter == reference else len(prefix) + 1
        else:
            new_period = 1
        prefix.append(letter)
        yield from _extend_prenecklace(prefix, new_period, remaining - degree, degrees)
        prefix.pop()


@lru_cache(maxsize=None)
def lyndon_words(degrees: Tuple[int, ...], target: int) -> Tuple[Word, ...]:
    """
    All Lyndon words whose letter degrees sum to ``target``.

    Generation extends prenecklaces only (each prefix tracks its period), so
    non-Lyndon branches are cut as soon as a letter falls below the periodic
    reference. Output is sorted by (length, word).
    """
    if target <= 0:
        return ()
    found = list(_extend_prenecklace([], 0, target, degrees))
    found.sort(key=lambda w: (len(w), w))
    return tuple(found)


@lru_cache(maxsize=None)
def words_of_degree(degrees: Tuple[int, ...], target: int) -> Tuple[Word, ...]:
    """All words (not only Lyndon ones) of total degree ``target``, sorted."""
    if target < 0:
        return ()
    if target == 0:
        return (EMPTY_WORD,)
    found: List[Word] = []
    for letter, degree in enumerate(degrees, start=1):
        if degree <= target:
            rests = words_of_degree(degrees, target - degree)
            found.extend((letter,) + rest for rest in rests)
    found.sort(key=lambda w: (len(w), w))
    return tuple(found)


def add_scaled(
    acc: SparseVector, terms: SparseVector, scale: Fraction = Fraction(1)
) -> None:
    """In place: ``acc += scale * terms``, dropping entries that cancel."""
    if not scale:
        return
    for word, coefficient in terms.items():
        value = acc.get(word, 0) + scale * coefficient
        if value:
            acc[word] = value
        else:
            acc.pop(word, None)


def concat_product(u: SparseVector, v: SparseVector) -> SparseVector:
    """Bilinear extension of word concatenation."""
    out: SparseVector = {}
    for left, a in u.items():
        for right, b in v.items():
            word = left + right
            value = out.get(word, 0) + a * b
            if value:
                out[word] = value
            else:
                out.pop(word, None)
    return out


def commutator(u: SparseVector, v: SparseVector, sign: int = 1) -> SparseVector:
    """``u v - sign * v u``; ``sign`` is the Koszul sign (-1)^{|u||v|}."""
    out = concat_product(u, v)
    add_scaled(out, concat_product(v, u), Fraction(-sign))
    return out


@lru_cache(maxsize=None)
def lyndon_expansion(word: Word) -> WordTerms:
    """
    Expansion of the standard bracketing of a Lyndon word in the free associative
    algebra.

    Signs are those of an even grading. The smallest word of the expansion is
    ``word`` itself, with coefficient 1.
    """
    if len(word) == 1:
        return ((word, Fraction(1)),)
    left, right = standard_factorization(word)
    expanded = commutator(dict(lyndon_expansion(left)), dict(lyndon_expansion(right)))
    return tuple(sorted(expanded.items()))
