"""
Combed normal form of pure braids.

P_n splits as U_n x| P_{n-1} with U_k = <A(1,k), ..., A(k-1,k)> free, so every
pure braid has a unique expression u_n u_{n-1} ... u_2 with u_k a reduced word
in U_k. Products are combed by pushing each U_k factor leftward past the lower
components with the conjugation rules below.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .words import A, IDENTITY, Alphabet, Word, WordError, commutator, full_twist_pure

DEFAULT_BUDGET = 200_000


class ResourceBudgetExceeded(RuntimeError):
    pass


def default_budget() -> int:
    env = os.environ.get("BRAIDFORGE_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _g(p: int, q: int, e: int = 1) -> Word:
    return Word.gen(A(p, q), e)


@lru_cache(maxsize=None)
def rule_conjugate(target: tuple[int, int], conjugator: tuple[int, int], sign: int) -> Word:
    """``A(r,s)^-sign A(k,j) A(r,s)^sign`` as a word in U_j.

    Requires ``s <= j``; for ``s == j`` the literal conjugate is returned.
    """
    k, j = target
    r, s = conjugator
    if not (1 <= k < j and 1 <= r < s):
        raise WordError(f"invalid pairs {target}, {conjugator}")
    if sign not in (1, -1):
        raise WordError(f"sign must be +-1, got {sign}")
    if s > j:
        raise WordError(f"conjugator A{conjugator} does not normalise U_{j}")
    a = _g(k, j)
    if s == j:
        return a.conj(_g(r, s, sign))
    if s == k:
        w = _g(r, j) * _g(k, j)
        return Word.product((w ** sign, a, w ** -sign))
    if r == k:
        w = _g(k, j) * _g(s, j)
        return Word.product((w ** sign, a, w ** -sign))
    if r < k < s:
        c = commutator(_g(r, j, -sign), _g(s, j, -sign))
        return Word.product((c ** sign, a, c ** -sign))
    if k < r or s < k:
        return a
    raise AssertionError(f"no conjugation rule for {target} by {conjugator}")  # pragma: no cover


def _conjugate_by_letter(w: Word, letter: A, e: int, j: int) -> Word:
    """``letter^e w letter^-e`` for w in U_j, e = +-1."""
    images = _letter_images(letter, e, j)
    return w.substitute(images)


@lru_cache(maxsize=None)
def _letter_images(letter: A, e: int, j: int) -> dict:
    return {A(k, j): rule_conjugate((k, j), (letter.i, letter.j), -e) for k in range(1, j)}


@dataclass(frozen=True)
class CombedPureBraid:
    """Components ``(u_n, u_{n-1}, ..., u_2)``; the element is their product in that order."""

    n: int
    components: tuple[Word, ...]

    def __post_init__(self):
        if len(self.components) != max(self.n - 1, 0):
            raise WordError(f"expected {self.n - 1} components, got {len(self.components)}")
        for k, u in zip(range(self.n, 1, -1), self.components):
            Alphabet.free_u(k).check(u)

    @classmethod
    def identity(cls, n: int) -> "CombedPureBraid":
        return cls(n, (IDENTITY,) * max(n - 1, 0))

    def component(self, k: int) -> Word:
        return self.components[self.n - k]

    def to_word(self) -> Word:
        return Word.product(self.components)

    def is_identity(self) -> bool:
        return all(u.is_identity() for u in self.components)

    def syllable_count(self) -> int:
        return sum(len(u.syllables) for u in self.components)

    def __str__(self) -> str:
        return "\n".join(f"u{k} = {u}" for k, u in zip(range(self.n, 1, -1), self.components))


@dataclass(frozen=True)
class PureWord:
    n: int
    word: Word

    def __post_init__(self):
        Alphabet.pure(self.n).check(self.word)


def _same_n(a: int, b: int) -> None:
    if a != b:
        raise WordError(f"strand-count mismatch: {a} vs {b}")


def _check_budget(w: Word, budget: int) -> None:
    if len(w.syllables) > budget:
        raise ResourceBudgetExceeded(f"combing exceeded the syllable budget of {budget}")


def _push_left(b: Word, lower: tuple[Word, ...], j: int, budget: int) -> Word:
    """``c b c^-1`` for ``c = lower[0] lower[1] ...`` (components of index < j)."""
    for comp in reversed(lower):
        for sym, e in reversed(comp.syllables):
            step = 1 if e > 0 else -1
            for _ in range(abs(e)):
                b = _conjugate_by_letter(b, sym, step, j)
                _check_budget(b, budget)
    return b


def combed_multiply(a: CombedPureBraid, b: CombedPureBraid, budget: Optional[int] = None) -> CombedPureBraid:
    _same_n(a.n, b.n)
    budget = default_budget() if budget is None else budget
    out = []
    for idx, (ak, bk) in enumerate(zip(a.components, b.components)):
        j = a.n - idx
        if bk.is_identity():
            out.append(ak)
            continue
        pushed = _push_left(bk, a.components[idx + 1:], j, budget)
        out.append(ak * pushed)
        _check_budget(out[-1], budget)
    return CombedPureBraid(a.n, tuple(out))


def combed_invert(a: CombedPureBraid, budget: Optional[int] = None) -> CombedPureBraid:
    result = CombedPureBraid.identity(a.n)
    for idx in range(len(a.components) - 1, -1, -1):
        single = [IDENTITY] * len(a.components)
        single[idx] = ~a.components[idx]
        result = combed_multiply(result, CombedPureBraid(a.n, tuple(single)), budget)
    return result


def _as_word(w, n: Optional[int]) -> tuple[Word, int]:
    if isinstance(w, PureWord):
        return w.word, w.n
    if n is None:
        raise WordError("strand count required for a bare word")
    return Alphabet.pure(n).check(w), n


def comb(w, n: Optional[int] = None, budget: Optional[int] = None) -> CombedPureBraid:
    """Combed normal form of a pure braid word."""
    word, n = _as_word(w, n)
    budget = default_budget() if budget is None else budget
    comps = [IDENTITY] * max(n - 1, 0)
    for sym, e in word.syllables:
        idx = n - sym.j
        pushed = _push_left(Word.gen(sym, e), tuple(comps[idx + 1:]), sym.j, budget)
        comps[idx] = comps[idx] * pushed
        _check_budget(comps[idx], budget)
    return CombedPureBraid(n, tuple(comps))


def pure_equal(a, b, n: Optional[int] = None, budget: Optional[int] = None) -> bool:
    wa, na = _as_word(a, n)
    wb, nb = _as_word(b, n)
    _same_n(na, nb)
    return comb(wa * ~wb, na, budget).is_identity()


def abelian_difference_along_center(a: Word, b: Word, n: int) -> Optional[int]:
    """k with ab(a) - ab(b) = k * (1, ..., 1), or None."""
    diff = {}
    for w, sgn in ((a, 1), (b, -1)):
        for sym, e in w.syllables:
            diff[sym] = diff.get(sym, 0) + sgn * e
    values = {diff.get(A(i, j), 0) for j in range(2, n + 1) for i in range(1, j)}
    return values.pop() if len(values) == 1 else None


def center_split(a, b, n: Optional[int] = None, budget: Optional[int] = None) -> Optional[int]:
    """Return k with ``a = b z_n^k``, or None if no such k exists."""
    wa, na = _as_word(a, n)
    wb, nb = _as_word(b, n)
    _same_n(na, nb)
    k = abelian_difference_along_center(wa, wb, na)
    if k is None:
        return None
    if pure_equal(wa, wb * full_twist_pure(na) ** k, na, budget):
        return k
    return None


# -- P_3 coordinates ---------------------------------------------------------

X, Y = "x", "y"


@dataclass(frozen=True)
class P3Element:
    """``z^z_exponent * free_part(x, y)`` with x = A(1,3), y = A(2,3), z = A(1,2)A(1,3)A(2,3)."""

    z_exponent: int
    free_part: Word

    def __mul__(self, other: "P3Element") -> "P3Element":
        return P3Element(self.z_exponent + other.z_exponent, self.free_part * other.free_part)

    def to_pure(self) -> Word:
        return full_twist_pure(3) ** self.z_exponent * self.free_part.substitute(XY_TO_PURE)

    def __str__(self) -> str:
        return f"z^{self.z_exponent} {self.free_part}"


XY_TO_PURE = {X: Word.gen(A(1, 3)), Y: Word.gen(A(2, 3))}
_PURE_TO_XY = {A(1, 3): Word.gen(X), A(2, 3): Word.gen(Y)}


def p3_coordinates(w, budget: Optional[int] = None) -> P3Element:
    word, n = _as_word(w, 3) if not isinstance(w, PureWord) else (w.word, w.n)
    if n != 3:
        raise WordError(f"P3 coordinates need n = 3, got {n}")
    u3, u2 = comb(word, 3, budget).components
    m = u2.exponent_sum(A(1, 2))
    # A(1,2) = z y^-1 x^-1 and z is central
    free = u3.substitute(_PURE_TO_XY) * (Word.product((Word.gen(Y, -1), Word.gen(X, -1))) ** m)
    return P3Element(m, free)


# -- defining relations of P_n -------------------------------------------------

def pure_relators(n: int) -> list[tuple[str, Word, Word]]:
    """The four relation families of P_n as (label, lhs, rhs)."""
    g = _g
    rels = []
    for j in range(3, n + 1):
        for k in range(2, j):
            for i in range(1, k):
                rels.append((
                    f"A({i},{k}) A({i},{j}) A({k},{j}) = A({k},{j}) A({i},{k}) A({i},{j})",
                    Word.product((g(i, k), g(i, j), g(k, j))),
                    Word.product((g(k, j), g(i, k), g(i, j))),
                ))
    for j in range(3, n + 1):
        for l in range(2, j):
            for k in range(1, l):
                rels.append((
                    f"A({l},{j}) A({k},{l}) A({k},{j}) = A({k},{j}) A({l},{j}) A({k},{l})",
                    Word.product((g(l, j), g(k, l), g(k, j))),
                    Word.product((g(k, j), g(l, j), g(k, l))),
                ))
    for j in range(4, n + 1):
        for l in range(3, j):
            for k in range(2, l):
                for i in range(1, k):
                    c = Word.product((g(k, l), g(k, j), g(k, l, -1)))
                    rels.append((
                        f"A({k},{l}) A({k},{j}) A({k},{l})^-1 commutes with A({i},{l})",
                        c * g(i, l),
                        g(i, l) * c,
                    ))
    for j in range(2, n + 1):
        for k in range(1, j):
            for l in range(2, n + 1):
                for i in range(1, l):
                    if (k < i < l < j) or (l < k):
                        rels.append((
                            f"A({k},{j}) A({i},{l}) = A({i},{l}) A({k},{j})",
                            g(k, j) * g(i, l),
                            g(i, l) * g(k, j),
                        ))
    return rels
