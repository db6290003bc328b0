from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, strategies as st

from braidforge import automorphisms as am
from braidforge.abelian import (
    AbelianVector, abelianize, induced_matrix, pair_permutation_image, signed_generator_mod_center_test,
    signed_permutation_mod_center, unimodular_via_inverse, verify_center_inversion, verify_theta0_obstruction,
    verify_wn_obstruction, wn_witness_vector,
)
from braidforge.words import A, full_twist_pure, pure_pairs

from conftest import pure_words


def test_abelianize_full_twist():
    assert abelianize(full_twist_pure(4), 4) == AbelianVector.ones(4)


def test_signed_generator_test():
    n = 4
    assert signed_generator_mod_center_test(AbelianVector.basis(n, 1, 3) + 5 * AbelianVector.ones(n))
    assert signed_generator_mod_center_test(-AbelianVector.basis(n, 2, 4))
    assert not signed_generator_mod_center_test(wn_witness_vector(n))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_wn_obstruction(n):
    r = verify_wn_obstruction(n)
    assert r.passed
    assert r.details["vector"] == list(wn_witness_vector(n).entries)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_center_inversion(n):
    r = verify_center_inversion(n)
    assert r.passed and r.details["exponent_sums"] == [n * (n - 1), -n * (n - 1)]


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_theta0(n):
    assert verify_theta0_obstruction(n).passed


def test_t_induces_minus_identity():
    m = induced_matrix(am.t_map(4))
    assert np.array_equal(m.array, -np.eye(6, dtype=np.int64))
    assert signed_permutation_mod_center(m)


@given(st.sampled_from(["s1", "s2", "s3", "psi", "w4", "phi(1,3)", "eps"]),
       st.sampled_from(["s1", "s3", "t", "phi(2,4)", "omega2"]))
def test_induced_matrix_of_composition(f_expr, g_expr):
    f, g = am.evaluate(f_expr, 4), am.evaluate(g_expr, 4)
    assert induced_matrix(am.compose(f, g)) == induced_matrix(g) @ induced_matrix(f)
    assert abs(induced_matrix(f).determinant()) == 1


@given(pure_words(4))
def test_abelianize_is_additive(w):
    u = full_twist_pure(4)
    assert abelianize(w * u, 4) == abelianize(w, 4) + abelianize(u, 4)
    assert abelianize(~w, 4) == -abelianize(w, 4)


@given(st.permutations([1, 2, 3, 4]), st.permutations([1, 2, 3, 4]))
def test_pair_permutation_action(p, q):
    v = AbelianVector(4, tuple(range(1, 7)))
    pq = tuple(q[p[k] - 1] for k in range(4))
    assert pair_permutation_image(pair_permutation_image(v, tuple(p)), tuple(q)) == pair_permutation_image(v, pq)


def test_unimodular_catalog():
    for name, params in [("w", ()), ("omega", (2,)), ("eps", ())]:
        f = am.named_automorphism(name, params, 4)
        g = am.named_automorphism(name, params, 4, sign=-1)
        assert unimodular_via_inverse(f, g)
