"""
Subgroups of free groups through Stallings graphs, bounded fixed-point searches,
and the checks on U_4 = <A(1,4), A(2,4), A(3,4)> inside P_4.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Optional, Sequence

from .automorphisms import GeneratorMap, compose, endomorphisms_equal, lift_map, verify_homomorphism
from .combing import ResourceBudgetExceeded, rule_conjugate
from .reports import Report, status_of
from .words import A, IDENTITY, Alphabet, Word, WordError

DEFAULT_RADIUS = 8
DEFAULT_ENUMERATION_BUDGET = 5_000_000


# -- Stallings graphs ---------------------------------------------------------

@dataclass(frozen=True)
class StallingsGraph:
    """A folded graph; ``edges`` holds (source, label, target) with labels read forwards."""

    base: int
    vertices: frozenset
    edges: frozenset
    _adjacency: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        adj: dict = defaultdict(dict)
        for s, lab, t in self.edges:
            adj[s][(lab, 1)] = t
            adj[t][(lab, -1)] = s
        object.__setattr__(self, "_adjacency", dict(adj))

    def step(self, v: int, label: Hashable, sign: int) -> Optional[int]:
        return self._adjacency.get(v, {}).get((label, sign))

    def rank(self) -> int:
        return len(self.edges) - len(self.vertices) + 1

    def is_folded(self) -> bool:
        seen = set()
        for s, lab, t in self.edges:
            for key in ((s, lab, 1), (t, lab, -1)):
                if key in seen:
                    return False
                seen.add(key)
        return True


def fold_subgroup(generators: Sequence[Word]) -> StallingsGraph:
    """Fold the bouquet of generator loops at the base vertex 0."""
    edges = []
    count = 1
    for w in generators:
        letters = list(w.letters())
        v = 0
        for idx, (lab, sign) in enumerate(letters):
            nxt = 0 if idx == len(letters) - 1 else count
            if nxt:
                count += 1
            edges.append((v, lab, nxt) if sign == 1 else (nxt, lab, v))
            v = nxt
    parent = list(range(count))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    changed = True
    while changed:
        changed = False
        ends: dict = {}
        for s, lab, t in edges:
            for key, other in (((find(s), lab, 1), t), ((find(t), lab, -1), s)):
                prev = ends.setdefault(key, other)
                a, b = find(prev), find(other)
                if a != b:
                    # the smaller label survives, so the base vertex 0 is kept
                    parent[max(a, b)] = min(a, b)
                    changed = True
    folded = frozenset((find(s), lab, find(t)) for s, lab, t in edges)
    vertices = frozenset({find(v) for v in range(count)})
    return StallingsGraph(0, vertices, folded)


def subgroup_contains(g: StallingsGraph, w: Word) -> bool:
    v = g.base
    for lab, sign in w.letters():
        v = g.step(v, lab, sign)
        if v is None:
            return False
    return v == g.base


# -- inner automorphisms on U_n -----------------------------------------------

def conjugation_endo(c: Word, n: int) -> GeneratorMap:
    """``A(k,n) -> c^-1 A(k,n) c`` on U_n, computed letter by letter with the conjugation rules."""
    Alphabet.pure(n).check(c)
    if any(sym.j == n for sym, _ in c.syllables):
        raise WordError(f"conjugator {c} contains letters of U_{n}")
    dom = Alphabet.free_u(n)
    images = [Word.gen(s) for s in dom.symbols]
    for sym, step in c.letters():
        sub = {A(k, n): rule_conjugate((k, n), (sym.i, sym.j), step) for k in range(1, n)}
        images = [w.substitute(sub) for w in images]
    return GeneratorMap(dom, tuple(images), f"conj({c})")


# -- bounded fixed-point enumeration ------------------------------------------

def reduced_words(alphabet: Sequence[Hashable], radius: int) -> Iterator[Word]:
    """All reduced words of length at most ``radius`` over the letters and their inverses."""
    letters = [(s, e) for s in alphabet for e in (1, -1)]

    def rec(prefix: list, last):
        yield Word(_syllables(prefix))
        if len(prefix) == radius:
            return
        for s, e in letters:
            if last == (s, -e):
                continue
            prefix.append((s, e))
            yield from rec(prefix, (s, e))
            prefix.pop()

    yield from rec([], None)


def _syllables(letters: list) -> tuple:
    out: list = []
    for s, e in letters:
        if out and out[-1][0] == s:
            out[-1] = (s, out[-1][1] + e)
        else:
            out.append((s, e))
    return tuple(out)


class _Codec:
    """Letters as characters, inverses as their partners, for fast reduced concatenation."""

    def __init__(self, alphabet: Sequence[Hashable]):
        self.alphabet = list(alphabet)
        self.chars = {}
        self.inv = {}
        for k, s in enumerate(self.alphabet):
            a, b = chr(0x100 + 2 * k), chr(0x101 + 2 * k)
            self.chars[(s, 1)], self.chars[(s, -1)] = a, b
            self.inv[a], self.inv[b] = b, a

    def encode(self, w: Word) -> str:
        return "".join(self.chars[x] for x in w.letters())

    def join(self, u: str, v: str) -> str:
        i = 0
        k = len(u)
        while i < len(v) and k and u[k - 1] == self.inv[v[i]]:
            i += 1
            k -= 1
        return u[:k] + v[i:]


def enumerate_fixed_elements(f: GeneratorMap, radius: int,
                             budget: Optional[int] = None) -> list[Word]:
    """All reduced words of letter length <= radius fixed by ``f`` (a free group endomorphism)."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    if f.domain.context not in ("freeF", "freeU"):
        raise ValueError(f"fixed points are enumerated on free groups, not {f.domain}")
    budget = DEFAULT_ENUMERATION_BUDGET if budget is None else budget
    codec = _Codec(f.domain.symbols)
    letters = [(s, e) for s in f.domain.symbols for e in (1, -1)]
    img = {}
    for s, e in letters:
        w = f.image(s)
        img[codec.chars[(s, e)]] = codec.encode(w if e == 1 else ~w)
    chars = [codec.chars[x] for x in letters]
    found: list[str] = []
    visited = 0
    stack = [("", "")]
    while stack:
        word, image = stack.pop()
        visited += 1
        if visited > budget:
            raise ResourceBudgetExceeded(f"fixed-point enumeration exceeded {budget} words")
        if word == image:
            found.append(word)
        if len(word) == radius:
            continue
        last_inv = codec.inv[word[-1]] if word else None
        for ch in reversed(chars):
            if ch != last_inv:
                stack.append((word + ch, codec.join(image, img[ch])))
    decode = {c: x for x, c in codec.chars.items()}
    return [Word(_syllables([decode[c] for c in w])) for w in found]


def ball_size(rank: int, radius: int) -> int:
    if radius == 0 or rank == 0:
        return 1
    return 1 + sum(2 * rank * (2 * rank - 1) ** (k - 1) for k in range(1, radius + 1))


# -- the U_4 checks -----------------------------------------------------------

def _u4(*pairs: int) -> Word:
    """Product of A(k,4) for the given k (negative k for an inverse)."""
    return Word.product(tuple(Word.gen(A(abs(k), 4), 1 if k > 0 else -1) for k in pairs))


def _g(i: int, j: int, e: int = 1) -> Word:
    return Word.gen(A(i, j), e)


FIX_CLAIMS = {
    "A(1,3)": (_g(1, 3), [_u4(1, 3), _u4(1, 2, 3)], 2),
    "A(1,3) A(2,3)": (_g(1, 3) * _g(2, 3), [_u4(1, 2, 3)], 1),
}


def verify_fix_lemmas(radius: int = DEFAULT_RADIUS, budget: Optional[int] = None) -> list[Report]:
    reports = []
    for label, (c, gens, rank) in FIX_CLAIMS.items():
        f = conjugation_endo(c, 4)
        fixed_exactly = all(f(g) == g for g in gens)
        reports.append(Report(f"Fix({label}) contains the claimed generators", 4, status_of(fixed_exactly),
                              ", ".join(map(str, gens))))
        graph = fold_subgroup(gens)
        reports.append(Report(f"Fix({label}) claimed subgroup rank", 4, status_of(graph.rank() == rank),
                              f"rank {graph.rank()}", {"expected": rank}))
        found = enumerate_fixed_elements(f, radius, budget)
        outside = [w for w in found if not subgroup_contains(graph, w)]
        reports.append(Report(
            f"Fix({label}) within radius {radius} lies in the claimed subgroup", 4, status_of(not outside),
            str(outside[0]) if outside else f"{len(found)} fixed words",
            {"radius": radius, "fixed_words": len(found), "outside": len(outside)},
        ))
    return reports


def verify_u4_coordinate_actions() -> list[Report]:
    """The actions of A(1,3) and A(1,3) A(2,3) on U_4 in the coordinates
    x = A(1,4) A(2,4) A(3,4), y = A(3,4), z = A(1,4).

    The image of z under A(1,3) A(2,3) is checked in two forms: ``(xy) z (xy)^-1``
    as displayed, and ``(x y x^-1) z (x y x^-1)^-1``, which is what the
    intermediate expression ``x A(2,4)^-1 A(1,4) A(2,4) x^-1`` rewrites to.
    """
    x, y, zz = _u4(1, 2, 3), _u4(3), _u4(1)
    f13 = conjugation_endo(_g(1, 3), 4)
    f1323 = conjugation_endo(_g(1, 3) * _g(2, 3), 4)
    xy = x * y
    checks = {
        "(A14 A24 A34)^A13 = A14 A24 A34": f13(x) == x,
        "(A14 A34)^A13 = A14 A34": f13(_u4(1, 3)) == _u4(1, 3),
        "A14^A13 = (A14 A34) A14 (A14 A34)^-1": f13(zz) == Word.product((_u4(1, 3), zz, ~_u4(1, 3))),
        "x fixed by A13 A23": f1323(x) == x,
        "y -> x y x^-1": f1323(y) == Word.product((x, y, ~x)),
        "z -> x A24^-1 A14 A24 x^-1": f1323(zz) == Word.product((x, _u4(-2), zz, _u4(2), ~x)),
        "z -> (x y x^-1) z (x y x^-1)^-1": f1323(zz) == zz.conj(~(xy * ~x)),
    }
    return [Report(f"U_4 action: {k}", 4, status_of(ok)) for k, ok in checks.items()] + [
        Report("U_4 action: z -> (xy) z (xy)^-1 as displayed", 4,
               status_of(f1323(zz) == zz.conj(~xy)), str(f1323(zz))),
    ]


def fix_set_instance(n: int = 3, w: Optional[Word] = None, radius: int = 4) -> Report:
    """x_i fixed for i < n and x_n -> w^-1 x_n w: the fixed words are exactly the ball of F_(n-1)."""
    letters = tuple(f"x{k}" for k in range(1, n + 1))
    dom = Alphabet.free(letters)
    w = Word.gen("x1") if w is None else w
    images = {f"x{n}": Word.gen(f"x{n}").conj(w)}
    f = GeneratorMap.from_mapping(dom, images, "fix-set map")
    found = enumerate_fixed_elements(f, radius)
    in_sub = all(f"x{n}" not in g.symbols() for g in found)
    expected = ball_size(n - 1, radius)
    ok = in_sub and len(found) == expected
    return Report("Fix = F_(n-1) on a ball", n, status_of(ok), f"{len(found)} fixed words, ball has {expected}",
                  {"radius": radius, "fixed": len(found), "ball": expected})


def verify_nonextension_instance() -> list[Report]:
    target = _u4(1, 2, 2, 3)
    c = _u4(1, 2, 3)
    out = []
    for sign in (1, -1):
        conj = target.conj(c ** sign)
        out.append(Report(f"conjugate by c^{sign} differs from A14 A24^2 A34", 4, status_of(conj != target),
                          str(conj)))
    out.append(Report("control: c^-1 c c = c", 4, status_of(c.conj(c) == c), str(c.conj(c))))
    return out


def nonlifting_automorphism() -> GeneratorMap:
    """The automorphism of P_3 with A(1,2) -> A(1,2) A(1,3) A(2,3)^-1 A(1,3)^-1, A(1,3) -> A(1,3) A(2,3)."""
    return GeneratorMap.from_mapping(Alphabet.pure(3), {
        A(1, 2): Word.product((_g(1, 2), _g(1, 3), _g(2, 3, -1), _g(1, 3, -1))),
        A(1, 3): _g(1, 3) * _g(2, 3),
    }, "phi")


def nonlifting_inverse() -> GeneratorMap:
    """The inverse: x -> x y^-1 on F_2 = <A(1,3), A(2,3)>, fixing z."""
    return lift_map("nu", -1)


def verify_nonlifting_automorphism() -> Report:
    f, g = nonlifting_automorphism(), nonlifting_inverse()
    hom = verify_homomorphism(f).passed
    ident = GeneratorMap.identity(f.domain)
    both = endomorphisms_equal(compose(f, g), ident) and endomorphisms_equal(compose(g, f), ident)
    return Report("P_3 automorphism is bijective", 3, status_of(hom and both), "inverse: x -> x y^-1, z fixed",
                  {"homomorphism": hom, "two_sided_inverse": both})


__all__ = [
    "StallingsGraph", "fold_subgroup", "subgroup_contains", "conjugation_endo", "enumerate_fixed_elements",
    "reduced_words", "ball_size", "verify_fix_lemmas", "fix_set_instance", "verify_nonextension_instance",
    "nonlifting_automorphism", "nonlifting_inverse", "verify_nonlifting_automorphism", "FIX_CLAIMS",
    "verify_u4_coordinate_actions",
]
