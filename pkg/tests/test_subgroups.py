from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from braidforge import automorphisms as am
from braidforge.subgroups import (
    ball_size, conjugation_endo, enumerate_fixed_elements, fix_set_instance, fold_subgroup, reduced_words,
    subgroup_contains, verify_fix_lemmas, verify_nonextension_instance, verify_nonlifting_automorphism,
    verify_u4_coordinate_actions,
)
from braidforge.words import A, IDENTITY, Word

from conftest import words

U4 = [A(1, 4), A(2, 4), A(3, 4)]


def g(*pairs):
    return Word(tuple((A(i, 4), e) for i, e in pairs))


def test_fold_examples():
    h = fold_subgroup([g((1, 1)), g((2, 1), (1, 1), (2, -1))])
    assert h.is_folded() and h.rank() == 2
    assert subgroup_contains(h, g((2, 1), (1, 3), (2, -1)))
    assert not subgroup_contains(h, g((2, 1)))
    assert fold_subgroup([g((1, 2)), g((1, 3))]).rank() == 1


def test_ball_size_matches_enumeration():
    for r in range(4):
        assert sum(1 for _ in reduced_words(["x", "y"], r)) == ball_size(2, r)


def test_fix_lemmas_radius_8():
    reports = verify_fix_lemmas(8)
    assert all(r.passed for r in reports), [r.to_json() for r in reports if not r.passed]


def test_u4_coordinates_record_displayed_typo():
    reports = verify_u4_coordinate_actions()
    assert [r.passed for r in reports].count(False) == 1
    assert "displayed" in next(r for r in reports if not r.passed).claim


def test_instances():
    assert fix_set_instance().passed
    assert all(r.passed for r in verify_nonextension_instance())
    assert verify_nonlifting_automorphism().passed


def test_fixed_elements_of_identity_fill_ball():
    ident = am.GeneratorMap.identity(conjugation_endo(IDENTITY, 4).domain)
    assert len(enumerate_fixed_elements(ident, 3)) == ball_size(3, 3)


@given(words(U4, 6), st.permutations([0, 1, 2]))
def test_folding_is_confluent(w, order):
    gens = [g((1, 1), (2, 1)), g((3, 2)), g((2, -1), (1, 1), (2, 1))]
    a = fold_subgroup(gens)
    b = fold_subgroup([gens[k] for k in order])
    assert subgroup_contains(a, w) == subgroup_contains(b, w)
    assert a.rank() == b.rank()


@given(st.lists(st.tuples(st.integers(0, 1), st.sampled_from((1, -1))), max_size=6))
def test_membership_of_products(choices):
    gens = [g((1, 1), (2, 1)), g((3, 2), (1, -1))]
    h = fold_subgroup(gens)
    w = IDENTITY
    for k, e in choices:
        w = w * (gens[k] if e == 1 else ~gens[k])
    assert subgroup_contains(h, w)


@given(words([A(1, 2), A(1, 3), A(2, 3)], 5))
def test_conjugation_inverse(c):
    f, h = conjugation_endo(c, 4), conjugation_endo(~c, 4)
    assert am.compose(f, h, normalize=False) == am.GeneratorMap.identity(f.domain)
