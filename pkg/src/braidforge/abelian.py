"""
Exponent vectors in the abelianization P_n / P_n' and the obstructions read off from them.

P_n / P_n' is free abelian on the classes of the A(i,j), so a pure braid word
maps to the vector of its exponent sums. Vectors are indexed in the order of
``pure_pairs(n)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Optional

import numpy as np

from .automorphisms import GeneratorMap, named_automorphism, psi_map, w_map
from .braids import BraidWord, braid_words_equal, full_twist_word, sigma, tau
from .combing import center_split
from .reports import Report, status_of
from .words import A, IDENTITY, Alphabet, Word, full_twist_pure, pure_pairs


@dataclass(frozen=True)
class AbelianVector:
    n: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != len(pure_pairs(self.n)):
            raise ValueError(f"expected {len(pure_pairs(self.n))} entries for n = {self.n}")

    @classmethod
    def zero(cls, n: int) -> "AbelianVector":
        return cls(n, (0,) * len(pure_pairs(n)))

    @classmethod
    def basis(cls, n: int, i: int, j: int) -> "AbelianVector":
        pairs = pure_pairs(n)
        return cls(n, tuple(int(p == (i, j)) for p in pairs))

    @classmethod
    def ones(cls, n: int) -> "AbelianVector":
        return cls(n, (1,) * len(pure_pairs(n)))

    def __getitem__(self, pair) -> int:
        return self.entries[pure_pairs(self.n).index(A(*pair))]

    def __add__(self, other: "AbelianVector") -> "AbelianVector":
        return AbelianVector(self.n, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "AbelianVector":
        return AbelianVector(self.n, tuple(-a for a in self.entries))

    def __sub__(self, other: "AbelianVector") -> "AbelianVector":
        return self + (-other)

    def __mul__(self, k: int) -> "AbelianVector":
        return AbelianVector(self.n, tuple(k * a for a in self.entries))

    __rmul__ = __mul__

    def __str__(self) -> str:
        terms = [f"{e:+d} e{p.i}{p.j}" for p, e in zip(pure_pairs(self.n), self.entries) if e]
        return " ".join(terms) if terms else "0"


def abelianize(w: Word, n: int) -> AbelianVector:
    Alphabet.pure(n).check(w)
    return AbelianVector(n, tuple(w.exponent_sum(p) for p in pure_pairs(n)))


@dataclass(frozen=True)
class AbelianMatrix:
    """Column ``k`` is the image of the k-th generator."""

    n: int
    array: np.ndarray

    def column(self, k: int) -> AbelianVector:
        return AbelianVector(self.n, tuple(int(x) for x in self.array[:, k]))

    def __matmul__(self, other: "AbelianMatrix") -> "AbelianMatrix":
        return AbelianMatrix(self.n, self.array @ other.array)

    def __eq__(self, other) -> bool:
        return isinstance(other, AbelianMatrix) and self.n == other.n and np.array_equal(self.array, other.array)

    def __hash__(self):
        return hash((self.n, self.array.tobytes()))

    def is_identity(self) -> bool:
        return np.array_equal(self.array, np.eye(len(self.array), dtype=np.int64))

    def determinant(self) -> int:
        return int(round(np.linalg.det(self.array)))


def induced_matrix(f: GeneratorMap) -> AbelianMatrix:
    if f.domain.context != "pure":
        raise ValueError("induced matrices need a pure braid domain")
    n = f.domain.n
    cols = [abelianize(img, n).entries for img in f.images]
    return AbelianMatrix(n, np.array(cols, dtype=np.int64).reshape(len(cols), len(cols)).T.copy())


def unimodular_via_inverse(f: GeneratorMap, f_inverse: GeneratorMap) -> bool:
    """The induced matrix is invertible over the integers: the inverse map gives an integer inverse."""
    return (induced_matrix(f) @ induced_matrix(f_inverse)).is_identity()


def signed_generator_mod_center_test(v: AbelianVector) -> bool:
    """Is ``v = alpha e(k,l) + beta (1, ..., 1)`` for some pair, alpha = +-1 and integer beta?"""
    return _signed_generator_witness(v) is not None


def _signed_generator_witness(v: AbelianVector) -> Optional[tuple[A, int, int]]:
    pairs = pure_pairs(v.n)
    for idx, p in enumerate(pairs):
        for alpha in (1, -1):
            rest = list(v.entries)
            rest[idx] -= alpha
            if len(set(rest)) == 1:
                return p, alpha, rest[0]
    return None


def signed_permutation_mod_center(m: AbelianMatrix) -> bool:
    """Every column has the form ``alpha e(k,l) + beta 1``, with the pairs (k,l) all distinct."""
    seen = set()
    for k in range(len(m.array)):
        w = _signed_generator_witness(m.column(k))
        if w is None or w[0] in seen:
            return False
        seen.add(w[0])
    return True


def wn_witness_vector(n: int) -> AbelianVector:
    """``-(e(1,n) + e(1,2) + ... + e(1,n-1))``."""
    v = AbelianVector.basis(n, 1, n)
    for k in range(2, n):
        v = v + AbelianVector.basis(n, 1, k)
    return -v


def verify_wn_obstruction(n: int) -> Report:
    if n < 4:
        return Report("w_n obstruction", n, "skipped", "needs n >= 4")
    v = abelianize(w_map(n).image(A(1, n)), n)
    expected = wn_witness_vector(n)
    ok = (not signed_generator_mod_center_test(v)) and v == expected
    generators = {"psi": (), "t": ()}
    generators.update({f"phi({i},{j})": (i, j) for (i, j) in pure_pairs(n) if (i, j) != (1, 2)})
    generators.update({f"s{k}": (k,) for k in range(1, n)})
    forms = {}
    for label, params in generators.items():
        name = label.split("(")[0].rstrip("0123456789")
        forms[label] = signed_permutation_mod_center(induced_matrix(named_automorphism(name, params, n)))
    return Report(
        "w_n obstruction", n, status_of(ok), str(v),
        {"vector": list(v.entries), "expected": list(expected.entries),
         "signed_generator_mod_center": signed_generator_mod_center_test(v),
         "subgroup_generators_have_signed_form": forms},
    )


def verify_center_inversion(n: int) -> Report:
    if n < 2:
        return Report("z_n^tau = z_n^-1", n, "skipped", "needs n >= 2")
    z = full_twist_word(n)
    tz = tau(z)
    sums = (sum(e for _, e in z.word.syllables), sum(e for _, e in tz.word.syllables))
    central = all(
        braid_words_equal(tz * sigma(k, n), sigma(k, n) * tz) for k in range(1, n)
    )
    # z^tau is z or z^-1; z^tau = z would force 2 n (n-1) = 0 in the abelianization Z
    conclusion = "z^tau = z^-1" if central and sums[0] != sums[1] else "undetermined"
    direct = braid_words_equal(tz, ~z)
    ok = sums == (n * (n - 1), -n * (n - 1)) and central and direct
    return Report(
        "z_n^tau = z_n^-1", n, status_of(ok), f"exponent sums {sums}",
        {"exponent_sums": list(sums), "tau_z_central": central, "conclusion": conclusion,
         "checked_directly": direct},
    )


def pair_permutation_image(v: AbelianVector, perm: tuple[int, ...]) -> AbelianVector:
    """Move the entry of pair {i,j} to the pair {perm(i), perm(j)}."""
    out = AbelianVector.zero(v.n)
    for p, e in zip(pure_pairs(v.n), v.entries):
        if e:
            i, j = sorted((perm[p.i - 1], perm[p.j - 1]))
            out = out + e * AbelianVector.basis(v.n, i, j)
    return out


def verify_theta0_obstruction(n: int) -> Report:
    """No permutation composed with inversion fixes the class of A(1,3)."""
    if not 3 <= n <= 6:
        raise ValueError(f"theta0 obstruction is checked for 3 <= n <= 6, got {n}")
    e13 = AbelianVector.basis(n, 1, 3)
    count = 0
    fixing = []
    for perm in permutations(range(1, n + 1)):
        count += 1
        if pair_permutation_image(-e13, perm) == e13:
            fixing.append(perm)
    sanity = pair_permutation_image(e13, tuple(range(1, n + 1))) == e13
    z_inverted = center_split(psi_map(n)(full_twist_pure(n)), IDENTITY, n) == -1
    ok = not fixing and sanity and z_inverted
    return Report(
        "theta0 not extendable", n, status_of(ok), f"{count} permutations, {len(fixing)} fix e13",
        {"permutations": count, "fixing": len(fixing), "identity_fixes_without_inversion": sanity,
         "theta0_inverts_z": z_inverted},
    )


__all__ = [
    "AbelianVector", "AbelianMatrix", "abelianize", "induced_matrix", "unimodular_via_inverse",
    "signed_generator_mod_center_test", "signed_permutation_mod_center", "wn_witness_vector",
    "verify_wn_obstruction", "verify_center_inversion", "verify_theta0_obstruction",
    "pair_permutation_image",
]
