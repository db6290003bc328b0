from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from braidforge import automorphisms as am
from braidforge.braids import braid_words_equal, expand_pure_generator, expand_pure_word, tau
from braidforge.combing import center_split, pure_equal
from braidforge.words import A, IDENTITY, Alphabet, Word, full_twist_pure, parse_word, pure_pairs

from conftest import pure_words, short_pure_words


def P(text, n):
    return parse_word(text, Alphabet.pure(n))


def test_t_eps_on_a12_example():
    img = am.evaluate("t ; eps", 4).image(A(1, 2))
    assert pure_equal(img, P("A(1,2) z^-2", 4), 4)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_t_formula_matches_tau(n):
    t = am.t_map(n)
    for a in pure_pairs(n):
        assert braid_words_equal(tau(expand_pure_generator(a.i, a.j, n)), expand_pure_word(t.image(a), n))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_catalog_homomorphisms(n):
    for name, params in [("t", ()), ("psi", ()), ("eps", ()), ("w", ()), ("s", (1,)), ("phi", (1, 3)),
                         ("omega", (2,)), ("omega", (n,))]:
        assert am.verify_homomorphism(am.named_automorphism(name, params, n)).passed, name


@pytest.mark.parametrize("n", [4, 5])
def test_t_eps_psi_identities(n):
    psi = am.psi_map(n)
    assert am.endomorphisms_equal(am.evaluate("t ; eps", n), psi)
    assert am.endomorphisms_equal(am.evaluate("eps ; t", n), psi)
    assert am.endomorphisms_equal(am.evaluate("psi^2", n), am.GeneratorMap.identity(Alphabet.pure(n)))


def test_left_to_right_composition():
    f, g = am.s_map(1, 4), am.phi_map(1, 3, 4)
    fg = am.compose(f, g)
    for a in pure_pairs(4):
        assert pure_equal(fg.image(a), g(f.image(a)), 4)


def test_w_inverts_center():
    for n in (4, 5):
        assert center_split(am.w_map(n)(full_twist_pure(n)), IDENTITY, n) == -1


def test_omega_n_differs_from_w_only_by_center():
    om, w = am.omega_map(4, 4), am.w_map(4)
    assert not am.endomorphisms_equal(om, w)
    assert am.endomorphisms_equal(om, w, "modCenter")


def test_expression_parser():
    e = am.parse_auto_expr("(s1 ; s2)^3 ; phi(1,3)^-1 ; w4")
    assert str(e) == "(s(1) ; s(2))^3 ; phi(1,3)^-1 ; w(4)"
    assert str(am.parse_auto_expr("phi13 ; id")) == "phi(1,3)"
    for bad in ("s1 s2", "foo", "phi(1", "s1 ;", ""):
        with pytest.raises(am.ExprSyntaxError):
            am.parse_auto_expr(bad)


def test_relation_failure_reports_witness():
    r = am.verify_relation("s2 ; w4", "w4 ; s2", 4)
    assert r.status in ("pass", "fail")
    bad = am.verify_relation("s1", "s2", 4)
    assert not bad.passed and bad.witness


def test_free_automorphisms_and_lifts():
    z = full_twist_pure(3)
    for name in ("rho", "sigma", "nu"):
        f = am.lift_map(name)
        assert pure_equal(f(z), z, 3)
        assert am.verify_homomorphism(f).passed
        ident = am.GeneratorMap.identity(f.domain)
        assert am.endomorphisms_equal(am.compose(f, am.lift_map(name, -1)), ident)
    assert not am.verify_homomorphism(am.rho_lift_as_printed()).passed


@pytest.mark.parametrize("n", [3, 4, 5])
def test_mod_relators(n):
    assert all(r.passed for r in am.verify_mod_relators(n))


@given(pure_words(4, 6), st.sampled_from(["t", "psi", "eps", "w4", "s2", "omega2", "phi(2,4)"]))
def test_maps_are_homomorphisms_on_products(w, expr):
    f = am.evaluate(expr, 4)
    u = P("A(1,3) A(2,4)^-1", 4)
    assert pure_equal(f(u * w), f(u) * f(w), 4)


@given(short_pure_words(4))
def test_t_commutes_with_tau(w):
    assert braid_words_equal(tau(expand_pure_word(w, 4)), expand_pure_word(am.t_map(4)(w), 4))
