from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from braidforge.words import (
    A, IDENTITY, Alphabet, Sigma, Word, WordError, WordSyntaxError, commutator, format_word, free_reduce,
    full_twist_pure, parse_word, pure_pairs,
)

from conftest import FREE_LETTERS, raw_syllables, words

FREE = Alphabet.free(FREE_LETTERS)


def test_free_reduce_cancels_and_merges():
    w = free_reduce([("a", 1), ("b", 2), ("b", -2), ("a", 1), ("c", -1), ("c", 1)])
    assert w == Word.gen("a", 2)
    assert free_reduce([("a", 3), ("a", -3)]).is_identity()


def test_conjugate_and_commutator_conventions():
    x, y = Word.gen("a"), Word.gen("b")
    assert y.conj(x) == Word.product((~x, y, x))
    assert commutator(x, y) == Word.product((~x, ~y, x, y))


def test_parse_examples():
    assert parse_word("s1 s2^-1 s1", Alphabet.braid(3)) == Word(((Sigma(1), 1), (Sigma(2), -1), (Sigma(1), 1)))
    assert parse_word("A(1,2)^2 A(1,2)^-2", Alphabet.pure(3)).is_identity()
    assert parse_word("z", Alphabet.pure(3)) == full_twist_pure(3)
    assert parse_word("x y^-1", Alphabet.free(["x", "y"])) == Word((("x", 1), ("y", -1)))


@pytest.mark.parametrize("text, alphabet", [
    ("s3", Alphabet.braid(3)),
    ("A(2,1)", Alphabet.pure(3)),
    ("A(1,4)", Alphabet.pure(3)),
    ("a^0", FREE),
    ("q", FREE),
    ("", FREE),
    ("a^", FREE),
])
def test_parse_rejects(text, alphabet):
    with pytest.raises(WordError):
        parse_word(text, alphabet)


def test_syntax_error_has_position():
    with pytest.raises(WordSyntaxError) as info:
        parse_word("a b ?", FREE)
    assert info.value.pos == 4


def test_full_twist_pure_is_ordered_product():
    expect = Word(tuple((A(i, j), 1) for j in range(2, 4) for i in range(1, j)))
    assert full_twist_pure(3) == expect
    assert len(pure_pairs(5)) == 10


@given(raw_syllables(FREE_LETTERS))
def test_free_reduce_idempotent(raw):
    w = free_reduce(raw)
    assert free_reduce(w.syllables) == w
    assert all(a[0] != b[0] for a, b in zip(w.syllables, w.syllables[1:]))


@given(words(FREE_LETTERS), words(FREE_LETTERS), words(FREE_LETTERS))
def test_group_laws(u, v, w):
    assert (u * v) * w == u * (v * w)
    assert (u * ~u).is_identity() and (~u * u).is_identity()
    assert u * IDENTITY == u
    assert ~(u * v) == ~v * ~u


@given(words(FREE_LETTERS), st.integers(-4, 4))
def test_power_matches_repeated_product(u, k):
    expect = IDENTITY
    for _ in range(abs(k)):
        expect = expect * (u if k > 0 else ~u)
    assert u ** k == expect


@given(words(FREE_LETTERS))
def test_parse_format_round_trip(w):
    assert parse_word(format_word(w), FREE) == w
