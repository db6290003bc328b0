"""
Braid words, the projection to S_n, and an equality oracle.

Equality in B_n is decided through the Artin action on the free group
F_n = <x1, ..., xn>, which is faithful:

    sigma_i : x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i,  x_k -> x_k otherwise.
"""

from __future__ import annotations

import re
import string
from dataclasses import dataclass
from functools import lru_cache
from itertools import groupby

import numpy as np

from .words import A, IDENTITY, Alphabet, Sigma, Word, WordError, commutator, free_reduce


@dataclass(frozen=True)
class BraidWord:
    n: int
    word: Word

    def __post_init__(self):
        if self.n < 2:
            raise WordError(f"strand count must be >= 2, got {self.n}")
        Alphabet.braid(self.n).check(self.word)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        _same_n(self.n, other.n)
        return BraidWord(self.n, self.word * other.word)

    def __invert__(self) -> "BraidWord":
        return BraidWord(self.n, ~self.word)

    def __pow__(self, k: int) -> "BraidWord":
        return BraidWord(self.n, self.word ** k)

    def __str__(self) -> str:
        return str(self.word)


def _same_n(a: int, b: int) -> None:
    if a != b:
        raise WordError(f"strand-count mismatch: {a} vs {b}")


def sigma(i: int, n: int, e: int = 1) -> BraidWord:
    return BraidWord(n, Word.gen(Sigma(i), e))


# -- permutations ------------------------------------------------------------

@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``images[k-1]`` is the image of k."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Permutation":
        img = list(range(1, n + 1))
        img[a - 1], img[b - 1] = b, a
        return cls(tuple(img))

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def then(self, other: "Permutation") -> "Permutation":
        """Apply self first, then other."""
        return Permutation(tuple(other(self(k)) for k in range(1, len(self.images) + 1)))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, len(self.images) + 1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(1, len(self.images) + 1):
            if start in seen or self(start) == start:
                seen.add(start)
                continue
            cyc, k = [], start
            while k not in seen:
                seen.add(k)
                cyc.append(k)
                k = self(k)
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"


def project_to_permutation(b: BraidWord) -> Permutation:
    perm = Permutation.identity(b.n)
    for sym, e in b.word.syllables:
        if e % 2:
            perm = perm.then(Permutation.transposition(b.n, sym.i, sym.i + 1))
    return perm


# -- pure generators ---------------------------------------------------------

def expand_pure_generator(i: int, j: int, n: int) -> BraidWord:
    """``A(i,j) = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1``."""
    if not 1 <= i < j <= n:
        raise WordError(f"A({i},{j}) out of range for n = {n}")
    return BraidWord(n, _expand_pair(i, j))


@lru_cache(maxsize=None)
def _expand_pair(i: int, j: int) -> Word:
    prefix = Word(tuple((Sigma(k), 1) for k in range(j - 1, i, -1)))
    return Word.product((prefix, Word.gen(Sigma(i), 2), ~prefix))


def expand_pure_word(w: Word, n: int) -> BraidWord:
    Alphabet.pure(n).check(w)
    images = {sym: _expand_pair(sym.i, sym.j) for sym in w.symbols()}
    return BraidWord(n, w.substitute(images))


def full_twist_word(n: int) -> BraidWord:
    """``z_n = (s_1 ... s_{n-1})^n``."""
    if n < 2:
        raise WordError(f"full twist needs n >= 2, got {n}")
    delta = Word(tuple((Sigma(k), 1) for k in range(1, n)))
    return BraidWord(n, delta ** n)


def tau(b: BraidWord) -> BraidWord:
    """The automorphism s_i -> s_i^-1."""
    return BraidWord(b.n, Word(tuple((sym, -e) for sym, e in b.word.syllables)))


# -- Artin action ------------------------------------------------------------

def free_letter(k: int) -> str:
    return f"x{k}"


@dataclass(frozen=True)
class FreeGroupEndo:
    n: int
    images: tuple[Word, ...]

    def __call__(self, w: Word) -> Word:
        return w.substitute({free_letter(k + 1): img for k, img in enumerate(self.images)})

    def is_identity(self) -> bool:
        return all(img == Word.gen(free_letter(k + 1)) for k, img in enumerate(self.images))


def artin_action(b: BraidWord) -> FreeGroupEndo:
    """Images of x1..xn under the braid.

    The map is a homomorphism: the image of ``uv`` is the image of ``u``
    composed with the image of ``v`` as substitutions, so ``x_k`` is pushed
    through the letters from right to left. Each step is one character
    translation followed by free cancellation, which keeps the intermediate
    words no longer than the final image.
    """
    if b.n > len(_LOWER):
        return _artin_action_words(b)
    return FreeGroupEndo(b.n, tuple(_decode(_image_string(b.word, k)) for k in range(1, b.n + 1)))


_LOWER = string.ascii_lowercase
_CANCEL = re.compile("|".join(f"{c}{c.upper()}|{c.upper()}{c}" for c in _LOWER))


@lru_cache(maxsize=None)
def _sigma_table(i: int, step: int) -> dict:
    a, b = _LOWER[i - 1], _LOWER[i]
    A_, B_ = a.upper(), b.upper()
    if step == 1:
        return str.maketrans({a: a + b + A_, A_: a + B_ + A_, b: a, B_: A_})
    return str.maketrans({a: b, A_: B_, b: B_ + a + b, B_: B_ + A_ + b})


def _cancel(s: str) -> str:
    while True:
        t = _CANCEL.sub("", s)
        if t == s:
            return s
        s = t


def _image_string(w: Word, k: int) -> str:
    s = _LOWER[k - 1]
    for sym, e in reversed(w.syllables):
        table = _sigma_table(sym.i, 1 if e > 0 else -1)
        for _ in range(abs(e)):
            s = _cancel(s.translate(table))
    return s


def _decode(s: str) -> Word:
    syl = []
    for ch, run in groupby(s):
        e = len(list(run))
        syl.append((free_letter(_LOWER.index(ch.lower()) + 1), e if ch.islower() else -e))
    return Word(tuple(syl))


def _artin_action_words(b: BraidWord) -> FreeGroupEndo:
    img = [Word.gen(free_letter(k)) for k in range(1, b.n + 1)]
    inv = [~w for w in img]
    for sym, step in b.word.letters():
        p, q = sym.i - 1, sym.i
        ip, iq, jp, jq = img[p], img[q], inv[p], inv[q]
        if step == 1:
            img[p], img[q] = ip * iq * jp, ip
            inv[p], inv[q] = ip * jq * jp, jp
        else:
            img[p], img[q] = iq, jq * ip * iq
            inv[p], inv[q] = jq, jq * jp * iq
    return FreeGroupEndo(b.n, tuple(img))


_BURAU_PRIME = 2_147_483_647
_BURAU_POINTS = (2, 3, 12345)


def burau_matrix(b: BraidWord, t: int, p: int = _BURAU_PRIME) -> np.ndarray:
    """Unreduced Burau matrix of ``b`` at ``t``, entries mod ``p`` (rows act on the right)."""
    m = np.eye(b.n, dtype=object)
    t_inv = pow(t, -1, p)
    for sym, step in b.word.letters():
        i = sym.i - 1
        block = ((1 - t, t), (1, 0)) if step == 1 else ((0, 1), (t_inv, 1 - t_inv))
        g = np.eye(b.n, dtype=object)
        g[i:i + 2, i:i + 2] = block
        m = (m @ g) % p
    return m


def braid_words_equal(a: BraidWord, b: BraidWord) -> bool:
    _same_n(a.n, b.n)
    w = a * ~b
    # the Burau representation is a homomorphism, so differing matrices prove inequality
    # cheaply; only the Artin action decides equality
    for t in _BURAU_POINTS:
        if not np.array_equal(burau_matrix(w, t), np.eye(w.n, dtype=object)):
            return False
    if w.n > len(_LOWER):
        return _artin_action_words(w).is_identity()
    return all(_image_string(w.word, k) == _LOWER[k - 1] for k in range(1, w.n + 1))


# -- sigma action on pure generators ------------------------------------------

def sigma_action_on_pure(k: int, e: int, target: tuple[int, int], n: int) -> Word:
    """``s_k^-e A(i,j) s_k^e`` as a word in the pure generators."""
    i, j = target
    if not 1 <= k <= n - 1:
        raise WordError(f"s{k} out of range for n = {n}")
    if not 1 <= i < j <= n:
        raise WordError(f"A({i},{j}) out of range for n = {n}")
    if e not in (1, -1):
        raise WordError(f"sign must be +-1, got {e}")
    g = lambda p, q, x=1: Word.gen(A(p, q), x)  # noqa: E731
    if k not in (i - 1, i, j - 1, j) or (k == i and j == i + 1):
        return g(i, j)
    if k == i - 1:
        if e == 1:
            return g(i - 1, j)
        return g(i - 1, j).conj(g(i, j))
    if k == i:
        if e == 1:
            return g(i + 1, j) * commutator(g(i, i + 1, -1), g(i, j, -1))
        return g(i + 1, j)
    if k == j - 1:
        if e == 1:
            return g(i, j - 1)
        return g(i, j - 1) * commutator(g(i, j, -1), g(j - 1, j, -1))
    # k == j; the row for e = -1 needs j + 1 <= n, which k <= n - 1 guarantees
    if e == 1:
        return Word.product((g(i, j), g(i, j + 1), g(i, j, -1)))
    return g(i, j + 1)


def sigma_table_rows(n: int):
    """Every (k, e, (i, j)) the table covers, with the row label used."""
    for k in range(1, n):
        for e in (1, -1):
            for a in _pairs(n):
                yield k, e, (a.i, a.j), _row_label(k, a.i, a.j)


def _row_label(k: int, i: int, j: int) -> str:
    if k not in (i - 1, i, j - 1, j):
        return "far"
    if k == i and j == i + 1:
        return "adjacent"
    return {i - 1: "k=i-1", i: "k=i", j - 1: "k=j-1", j: "k=j"}[k]


def _pairs(n: int):
    return [A(i, j) for j in range(2, n + 1) for i in range(1, j)]


def braid_relators(n: int) -> list[tuple[str, BraidWord, BraidWord]]:
    """Defining relations of B_n as (label, lhs, rhs)."""
    rels = []
    s = lambda i: Word.gen(Sigma(i))  # noqa: E731
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append((f"s{i} s{j} = s{j} s{i}", BraidWord(n, s(i) * s(j)), BraidWord(n, s(j) * s(i))))
    for i in range(1, n - 1):
        rels.append((
            f"s{i} s{i+1} s{i} = s{i+1} s{i} s{i+1}",
            BraidWord(n, Word.product((s(i), s(i + 1), s(i)))),
            BraidWord(n, Word.product((s(i + 1), s(i), s(i + 1)))),
        ))
    return rels


__all__ = [
    "BraidWord", "Permutation", "FreeGroupEndo", "sigma", "project_to_permutation",
    "expand_pure_generator", "expand_pure_word", "full_twist_word", "tau", "artin_action",
    "braid_words_equal", "burau_matrix", "sigma_action_on_pure", "sigma_table_rows", "braid_relators",
    "free_letter", "free_reduce", "IDENTITY",
]
