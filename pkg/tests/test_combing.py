from __future__ import annotations

import pytest
from hypothesis import given

from braidforge.braids import braid_words_equal, expand_pure_word
from braidforge.combing import (
    CombedPureBraid, P3Element, ResourceBudgetExceeded, center_split, comb, combed_invert, combed_multiply,
    p3_coordinates, pure_equal, pure_relators, rule_conjugate,
)
from braidforge.words import A, IDENTITY, Alphabet, Word, full_twist_pure, parse_word, pure_pairs

from conftest import pure_words, short_pure_words


def P(text, n):
    return parse_word(text, Alphabet.pure(n))


def test_comb_full_twist_example():
    c = comb(P("A(1,2) A(1,3) A(2,3)", 3), 3)
    assert c.component(3) == P("A(1,3) A(2,3)", 3)
    assert c.component(2) == P("A(1,2)", 3)


def test_comb_moves_lower_letters_left():
    # A(2,3) A(1,2) = A(1,2) (A(2,3) conjugated by A(1,2))
    c = comb(P("A(2,3) A(1,2)", 3), 3)
    assert c.component(2) == P("A(1,2)", 3)
    assert braid_words_equal(expand_pure_word(c.to_word(), 3), expand_pure_word(P("A(2,3) A(1,2)", 3), 3))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_conjugation_rules_against_oracle(n):
    for t in pure_pairs(n):
        for c in pure_pairs(n):
            if c.j > t.j:
                continue
            for sign in (1, -1):
                lit = Word.product((Word.gen(c, -sign), Word.gen(t), Word.gen(c, sign)))
                got = rule_conjugate(tuple(t), tuple(c), sign)
                assert braid_words_equal(expand_pure_word(lit, n), expand_pure_word(got, n))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_relators_comb_equal(n):
    counts = {3: 2, 4: 11, 5: 35}
    rels = pure_relators(n)
    assert len(rels) == counts[n]
    for _, lhs, rhs in rels:
        assert pure_equal(lhs, rhs, n)


def test_budget_guard():
    w = P("A(1,4) A(2,3) A(1,4)^-1 A(1,2) A(2,4) A(1,3)^-1 A(3,4)", 4)
    with pytest.raises(ResourceBudgetExceeded):
        comb(w, 4, budget=3)


def test_center_split_examples():
    z = full_twist_pure(4)
    a = P("A(1,3) A(2,4)", 4)
    assert center_split(a * z ** 3, a, 4) == 3
    assert center_split(a, P("A(1,2)", 4), 4) is None


def test_p3_coordinates_examples():
    assert p3_coordinates(full_twist_pure(3)) == P3Element(1, IDENTITY)
    assert p3_coordinates(P("A(1,2)", 3)) == P3Element(1, Word.product((Word.gen("y", -1), Word.gen("x", -1))))


@given(short_pure_words(4))
def test_comb_sound(w):
    assert braid_words_equal(expand_pure_word(w, 4), expand_pure_word(comb(w, 4).to_word(), 4))


@given(pure_words(4), pure_words(4))
def test_comb_multiplicative(u, v):
    assert combed_multiply(comb(u, 4), comb(v, 4)) == comb(u * v, 4)


@given(pure_words(4))
def test_comb_inverse_and_idempotence(w):
    c = comb(w, 4)
    assert combed_multiply(c, combed_invert(c)).is_identity()
    assert comb(c.to_word(), 4) == c


@given(pure_words(5, 5))
def test_full_twist_central_in_pure(w):
    z = full_twist_pure(5)
    assert pure_equal(w * z, z * w, 5)


@given(pure_words(3), pure_words(3))
def test_p3_coordinates_homomorphism(u, v):
    assert p3_coordinates(u * v) == p3_coordinates(u) * p3_coordinates(v)
    assert pure_equal(p3_coordinates(u).to_pure(), u, 3)
