"""
Endomorphisms given by generator images, and the catalog of named automorphisms.

Composition is left to right: ``compose(f, g)`` applies ``f`` first, so the
expression ``f ; g`` in the text syntax is the map ``w -> g(f(w))``. This
matches writing actions as exponents, ``w^(fg) = (w^f)^g``.

Pure braid images may contain the full twist ``z_n``; they are ordinary words
in the ``A(i,j)`` after expansion.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

from .braids import BraidWord, braid_words_equal, expand_pure_word, sigma_action_on_pure
from .combing import center_split, comb, pure_equal, pure_relators
from .braids import braid_relators
from .reports import FAIL, PASS, Report, status_of
from .words import (
    A, IDENTITY, Alphabet, Sigma, Word, WordError, full_twist_pure, pure_pairs,
)


class AutomorphismError(ValueError):
    pass


# -- generator maps -----------------------------------------------------------

@dataclass(frozen=True)
class GeneratorMap:
    """An endomorphism given by the images of the domain generators.

    ``images[k]`` is the image of ``domain.symbols[k]``. The codomain is the
    domain's group.
    """

    domain: Alphabet
    images: tuple[Word, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if len(self.images) != len(self.domain.symbols):
            raise AutomorphismError(
                f"{len(self.images)} images for {len(self.domain.symbols)} generators of {self.domain}"
            )
        for img in self.images:
            self.domain.check(img)

    @classmethod
    def from_mapping(cls, domain: Alphabet, mapping: Mapping, name: str = "") -> "GeneratorMap":
        """Build from a partial mapping; generators not mentioned are fixed."""
        extra = set(mapping) - set(domain.symbols)
        if extra:
            raise AutomorphismError(f"not generators of {domain}: {sorted(map(str, extra))}")
        return cls(domain, tuple(mapping.get(s, Word.gen(s)) for s in domain.symbols), name)

    @classmethod
    def identity(cls, domain: Alphabet) -> "GeneratorMap":
        return cls(domain, tuple(Word.gen(s) for s in domain.symbols), "1")

    @property
    def mapping(self) -> dict:
        return dict(zip(self.domain.symbols, self.images))

    def image(self, sym) -> Word:
        return self.images[self.domain.symbols.index(sym)]

    def __call__(self, w: Word) -> Word:
        return apply_endomorphism(self, w)

    def __str__(self) -> str:
        return "\n".join(f"{s} -> {img}" for s, img in zip(self.domain.symbols, self.images))


def apply_endomorphism(f: GeneratorMap, w: Word) -> Word:
    f.domain.check(w)
    return w.substitute(f.mapping)


def _same_domain(f: GeneratorMap, g: GeneratorMap) -> None:
    if f.domain != g.domain:
        raise AutomorphismError(f"domain mismatch: {f.domain} vs {g.domain}")


def normalize_image(w: Word, domain: Alphabet, budget: Optional[int] = None) -> Word:
    """A canonical representative: the combed word for pure braids, else ``w``."""
    if domain.context == "pure":
        return comb(w, domain.n, budget).to_word()
    return w


def compose(f: GeneratorMap, g: GeneratorMap, normalize: bool = True,
            budget: Optional[int] = None) -> GeneratorMap:
    """``f`` then ``g``: the image of a generator is ``g(f(generator))``.

    With ``normalize`` the pure braid images are replaced by their combed form,
    which keeps long products of automorphisms from growing.
    """
    _same_domain(f, g)
    gm = g.mapping
    images = []
    for img in f.images:
        out = img.substitute(gm)
        images.append(normalize_image(out, f.domain, budget) if normalize else out)
    name = f"{f.name} ; {g.name}" if f.name and g.name else ""
    return GeneratorMap(f.domain, tuple(images), name)


def _words_equal(a: Word, b: Word, domain: Alphabet, budget: Optional[int]) -> bool:
    if domain.context == "pure":
        return pure_equal(a, b, domain.n, budget)
    if domain.context == "braid":
        return braid_words_equal(BraidWord(domain.n, a), BraidWord(domain.n, b))
    return a == b


def endomorphisms_equal(f: GeneratorMap, g: GeneratorMap, mode: str = "exact",
                        budget: Optional[int] = None) -> bool:
    _same_domain(f, g)
    if mode == "exact":
        return all(_words_equal(a, b, f.domain, budget) for a, b in zip(f.images, g.images))
    if mode == "modCenter":
        if f.domain.context != "pure":
            raise AutomorphismError("modCenter comparison needs a pure braid domain")
        return all(center_split(a, b, f.domain.n, budget) is not None for a, b in zip(f.images, g.images))
    raise AutomorphismError(f"unknown comparison mode {mode!r}")


def central_exponents(f: GeneratorMap, g: GeneratorMap,
                      budget: Optional[int] = None) -> dict[A, Optional[int]]:
    """For each generator, the k with ``f(A) = g(A) z_n^k`` (None if there is none)."""
    _same_domain(f, g)
    if f.domain.context != "pure":
        raise AutomorphismError("central exponents need a pure braid domain")
    return {
        s: center_split(a, b, f.domain.n, budget)
        for s, a, b in zip(f.domain.symbols, f.images, g.images)
    }


def verify_homomorphism(f: GeneratorMap, budget: Optional[int] = None) -> Report:
    """Check that ``f`` sends every defining relation to a valid relation."""
    dom = f.domain
    if dom.context == "pure":
        rels = pure_relators(dom.n)
        check = lambda a, b: pure_equal(f(a), f(b), dom.n, budget)  # noqa: E731
    elif dom.context == "braid":
        rels = [(label, lhs.word, rhs.word) for label, lhs, rhs in braid_relators(dom.n)]
        check = lambda a, b: braid_words_equal(BraidWord(dom.n, f(a)), BraidWord(dom.n, f(b)))  # noqa: E731
    elif dom.context in ("freeF", "freeU"):
        rels = []
        check = None
    else:
        raise AutomorphismError(f"homomorphism check not supported on {dom}")
    failures = [label for label, lhs, rhs in rels if not check(lhs, rhs)]
    return Report(
        claim=f"homomorphism {f.name or 'map'}",
        n=dom.n,
        status=status_of(not failures),
        witness=failures[0] if failures else None,
        details={"relations": len(rels), "failures": failures},
    )


# -- catalog ------------------------------------------------------------------

def _g(i: int, j: int, e: int = 1) -> Word:
    return Word.gen(A(i, j), e)


def _z(n: int, k: int = 1) -> Word:
    return full_twist_pure(n) ** k


def _prod(words: Iterable[Word]) -> Word:
    return Word.product(tuple(words))


def _pure(n: int, mapping: Mapping, name: str) -> GeneratorMap:
    return GeneratorMap.from_mapping(Alphabet.pure(n), mapping, name)


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise AutomorphismError(message)


def tau_braid(n: int) -> GeneratorMap:
    """``tau(s_i) = s_i^-1`` on B_n."""
    dom = Alphabet.braid(n)
    return GeneratorMap(dom, tuple(Word.gen(s, -1) for s in dom.symbols), "tau")


def t_map(n: int) -> GeneratorMap:
    """Restriction of tau to P_n: A(i,j) -> c^-1 A(i,j)^-1 c with c = A(i,j) A(i+1,j) ... A(j-1,j)."""
    images = {}
    for a in pure_pairs(n):
        c = _prod(_g(k, a.j) for k in range(a.i, a.j))
        images[a] = _g(a.i, a.j, -1).conj(c)
    return _pure(n, images, "t")


def s_map(k: int, n: int, sign: int = 1) -> GeneratorMap:
    """Conjugation by ``s_k``: A -> s_k^-1 A s_k (or its inverse for sign -1), from the action table."""
    _need(1 <= k <= n - 1, f"s{k} needs 1 <= k <= {n - 1}")
    images = {a: sigma_action_on_pure(k, sign, (a.i, a.j), n) for a in pure_pairs(n)}
    return _pure(n, images, f"s{k}" if sign == 1 else f"s{k}^-1")


def central_map(n: int, exponents: Mapping[A, int], name: str = "") -> GeneratorMap:
    """``A(i,j) -> A(i,j) z_n^t(i,j)``."""
    return _pure(n, {a: _g(a.i, a.j) * _z(n, t) for a, t in exponents.items() if t}, name)


def central_inverse(n: int, exponents: Mapping[A, int], name: str = "") -> GeneratorMap:
    """Inverse of a central map; defined when the exponents sum to 0 or -2."""
    total = sum(exponents.values())
    if total == 0:
        return central_map(n, {a: -t for a, t in exponents.items()}, name)
    if total == -2:
        return central_map(n, exponents, name)
    raise AutomorphismError(f"central map with exponent sum {total} is not invertible")


def psi_exponents(n: int) -> dict[A, int]:
    return {A(1, 2): -2}


def phi_exponents(i: int, j: int, n: int) -> dict[A, int]:
    _need(1 <= i < j <= n and (i, j) != (1, 2), f"phi({i},{j}) needs 1 <= i < j <= {n}, (i,j) != (1,2)")
    return {A(1, 2): 1, A(i, j): -1}


def psi_map(n: int) -> GeneratorMap:
    return central_map(n, psi_exponents(n), "psi")


def phi_map(i: int, j: int, n: int, sign: int = 1) -> GeneratorMap:
    ex = phi_exponents(i, j, n)
    if sign == -1:
        return central_inverse(n, ex, f"phi({i},{j})^-1")
    return central_map(n, ex, f"phi({i},{j})")


def omega_map(k: int, n: int) -> GeneratorMap:
    """The mapping class generators acting on P_n, transcribed from their tables."""
    _need(1 <= k <= n, f"omega({k}) needs 1 <= k <= {n}")
    _need(n >= 3, "omega needs n >= 3")
    if k == n:
        return _omega_n(n)
    images = {}
    for a in pure_pairs(n):
        i, j = a
        if k == 2:
            if (i, j) == (1, 2):
                img = _g(1, 3).conj(_g(2, 3)) * _z(n)
            elif (i, j) == (1, 3):
                img = _g(1, 2) * _z(n, -1)
            elif i == 2 and j >= 4:
                img = _g(3, j).conj(_g(2, 3))
            elif i == 3:
                img = _g(2, j)
            else:
                img = _g(i, j)
        elif k == i - 1:
            img = _g(i - 1, j)
        elif k == i and i < j - 1:
            img = _g(i + 1, j).conj(_g(i, i + 1))
        elif k == j - 1 and j - 1 > i:
            img = _g(i, j - 1)
        elif k == j:
            img = _g(i, j + 1).conj(_g(j, j + 1))
        else:
            img = _g(i, j)
        images[a] = img
    return _pure(n, images, f"omega{k}")


def _w_factor(i: int, n: int) -> Word:
    """``A(1,i) ... A(i-1,i) A(i,i+1) ... A(i,n-1)``; for i = 1, 2 this is the displayed product."""
    return _prod([_g(p, i) for p in range(1, i)] + [_g(i, q) for q in range(i + 1, n)])


def w_map(n: int) -> GeneratorMap:
    """``A(i,n) -> (A(i,n) X_i)^-1``, other generators fixed."""
    _need(n >= 3, "w needs n >= 3")
    return _pure(n, {A(i, n): ~(_g(i, n) * _w_factor(i, n)) for i in range(1, n)}, f"w{n}")


def w_inverse(n: int) -> GeneratorMap:
    """``A(i,n) -> (X_i A(i,n))^-1``."""
    _need(n >= 3, "w needs n >= 3")
    return _pure(n, {A(i, n): ~(_w_factor(i, n) * _g(i, n)) for i in range(1, n)}, f"w{n}^-1")


def _omega_n_correction(n: int) -> GeneratorMap:
    """The central map with ``omega_n = w_n ; c``: A(1,n), A(2,n) -> . z^-1 (an involution)."""
    return central_map(n, {A(1, n): -1, A(2, n): -1}, "c")


def _omega_n(n: int) -> GeneratorMap:
    images = {}
    for i in range(1, n):
        img = ~(_g(i, n) * _w_factor(i, n))
        images[A(i, n)] = img * _z(n) if i <= 2 else img
    return _pure(n, images, f"omega{n}")


def eps_map(n: int) -> GeneratorMap:
    images = {}
    for a in pure_pairs(n):
        if a == (1, 2):
            images[a] = _g(1, 2, -1) * _z(n, 2)
        else:
            c = _prod(_g(k, a.j) for k in range(a.i + 1, a.j))
            images[a] = _g(a.i, a.j, -1).conj(c)
    return _pure(n, images, "eps")


# P_3 in the coordinates x = A(1,3), y = A(2,3), z = A(1,2) A(1,3) A(2,3).

_X, _Y, _Zl = "x", "y", "z"


def _xyz_to_pure(w: Word) -> Word:
    return w.substitute({_X: _g(1, 3), _Y: _g(2, 3), _Zl: _z(3)})


def p3_map(x_img: Word, y_img: Word, z_img: Word, name: str = "") -> GeneratorMap:
    """The endomorphism of P_3 given on x, y, z (words in the letters x, y, z)."""
    x, y, zz = (_xyz_to_pure(w) for w in (x_img, y_img, z_img))
    return _pure(3, {A(1, 2): _prod((zz, ~y, ~x)), A(1, 3): x, A(2, 3): y}, name)


def lift_free_automorphism(p: Word, q: Word, name: str = "") -> GeneratorMap:
    """Lift of the automorphism x -> p, y -> q of F_2 = <x, y> to P_3, fixing z."""
    Alphabet.free((_X, _Y)).check(p)
    Alphabet.free((_X, _Y)).check(q)
    return p3_map(p, q, Word.gen(_Zl), name)


def _xy(text: str) -> Word:
    out = IDENTITY
    for tok in text.split():
        sym, _, e = tok.partition("^")
        out = out * Word.gen(sym, int(e) if e else 1)
    return out


FREE_F2 = Alphabet.free((_X, _Y))

# images of x and y for the generators of Aut(F_2) and their inverses
_F2_AUTOS = {
    "rho": (("y", "x"), ("y", "x")),
    "sigma": (("x^-1", "y"), ("x^-1", "y")),
    "nu": (("x y", "y"), ("x y^-1", "y")),
}


def free_automorphism(name: str, sign: int = 1) -> GeneratorMap:
    _need(name in _F2_AUTOS, f"unknown automorphism of F_2: {name}")
    p, q = _F2_AUTOS[name][0 if sign == 1 else 1]
    return GeneratorMap(FREE_F2, (_xy(p), _xy(q)), name if sign == 1 else f"{name}^-1")


def lift_map(name: str, sign: int = 1) -> GeneratorMap:
    f = free_automorphism(name, sign)
    return lift_free_automorphism(f.images[0], f.images[1], f.name)


def rho_lift_as_printed() -> GeneratorMap:
    """The lift of rho with A(1,2) -> A(2,3) A(1,3) A(2,3)^-1, exactly as displayed."""
    return _pure(3, {A(1, 2): _prod((_g(2, 3), _g(1, 3), _g(2, 3, -1))), A(1, 3): _g(2, 3), A(2, 3): _g(1, 3)},
                 "rho (as printed)")


def displayed_lifts() -> dict[str, GeneratorMap]:
    """The three lifts written with explicit images of A(1,2); rho uses A(2,3) A(1,2) A(2,3)^-1."""
    return {
        "rho": _pure(3, {A(1, 2): _g(1, 2).conj(_g(2, 3, -1)), A(1, 3): _g(2, 3), A(2, 3): _g(1, 3)}, "rho"),
        "sigma": _pure(3, {A(1, 2): _g(1, 2) * _g(1, 3, 2), A(1, 3): _g(1, 3, -1)}, "sigma"),
        "nu": _pure(3, {A(1, 2): _g(2, 3, -1) * _g(1, 2), A(1, 3): _g(1, 3) * _g(2, 3)}, "nu"),
    }


def theta_map() -> GeneratorMap:
    return p3_map(Word.gen(_X), Word.gen(_Y), Word.gen(_Zl, -1), "theta")


def xi_map(sign: int = 1) -> GeneratorMap:
    return p3_map(Word.gen(_X) * Word.gen(_Zl, sign), Word.gen(_Y), Word.gen(_Zl), "xi" if sign == 1 else "xi^-1")


def eta_map(sign: int = 1) -> GeneratorMap:
    return p3_map(Word.gen(_X), Word.gen(_Y) * Word.gen(_Zl, sign), Word.gen(_Zl), "eta" if sign == 1 else "eta^-1")


CATALOG_NAMES = ("tau", "t", "s", "psi", "phi", "omega", "eps", "w", "theta0", "theta", "xi", "eta",
                 "rho", "sigma", "nu")


def _arity(name: str, params: Sequence[int], allowed: Sequence[int]) -> None:
    if len(params) not in allowed:
        raise AutomorphismError(f"{name} takes {' or '.join(map(str, allowed))} parameter(s), got {len(params)}")


def named_automorphism(name: str, params: Sequence[int] = (), n: int = 4,
                       group: str = "P", sign: int = 1) -> GeneratorMap:
    """The catalog entry ``name(params)`` on P_n (or B_n / F_2), or its inverse when ``sign == -1``."""
    params = tuple(params)
    if sign not in (1, -1):
        raise AutomorphismError(f"sign must be +-1, got {sign}")
    if group == "F2":
        _need(name in _F2_AUTOS, f"{name} is not an automorphism of F_2")
        _arity(name, params, (0,))
        return free_automorphism(name, sign)
    if group == "B":
        _need(name == "tau", f"{name} is not defined on B_n")
        _arity(name, params, (0,))
        return tau_braid(n)
    if group != "P":
        raise AutomorphismError(f"unknown group {group!r}")
    if name not in CATALOG_NAMES:
        raise AutomorphismError(f"unknown automorphism {name!r}")
    _need(n >= 2, "pure braid automorphisms need n >= 2")
    if name == "tau":
        _arity(name, params, (0,))
        return t_map(n)
    if name == "t":
        _arity(name, params, (0,))
        return t_map(n)
    if name == "s":
        _arity(name, params, (1,))
        return s_map(params[0], n, sign)
    if name in ("psi", "theta0"):
        _arity(name, params, (0,))
        return psi_map(n) if name == "psi" else GeneratorMap(Alphabet.pure(n), psi_map(n).images, "theta0")
    if name == "phi":
        _arity(name, params, (2,))
        return phi_map(params[0], params[1], n, sign)
    if name == "omega":
        _arity(name, params, (1,))
        k = params[0]
        if sign == 1:
            return omega_map(k, n)
        return _omega_inverse(k, n)
    if name == "eps":
        _arity(name, params, (0,))
        return eps_map(n)
    if name == "w":
        _arity(name, params, (0, 1))
        _need(not params or params[0] == n, f"w{params[0] if params else ''} is only defined with n = {n}")
        return w_map(n) if sign == 1 else w_inverse(n)
    # the remaining names live on P_3
    _need(n == 3, f"{name} is an automorphism of P_3, not P_{n}")
    _arity(name, params, (0,))
    if name == "theta":
        return theta_map()
    if name == "xi":
        return xi_map(sign)
    if name == "eta":
        return eta_map(sign)
    return lift_map(name, sign)


def _omega_inverse(k: int, n: int) -> GeneratorMap:
    _need(1 <= k <= n, f"omega({k}) needs 1 <= k <= {n}")
    if k == n:
        return compose(w_inverse(n), _omega_n_correction(n), normalize=False)
    if k == 2:
        return compose(s_map(2, n, -1), phi_map(1, 3, n, -1), normalize=False)
    return s_map(k, n, -1)


# -- automorphism expressions -------------------------------------------------

@dataclass(frozen=True)
class Factor:
    name: str
    params: tuple[int, ...] = ()
    exponent: int = 1


@dataclass(frozen=True)
class AutoExpr:
    """A product of factors applied left to right; a factor is a name or a bracketed expression."""

    factors: tuple[Union[Factor, "Group"], ...]

    def __str__(self) -> str:
        return " ; ".join(map(_fmt_factor, self.factors)) or "1"


@dataclass(frozen=True)
class Group:
    expr: AutoExpr
    exponent: int = 1


def _fmt_factor(f) -> str:
    exp = "" if f.exponent == 1 else f"^{f.exponent}"
    if isinstance(f, Group):
        return f"({f.expr}){exp}"
    args = f"({','.join(map(str, f.params))})" if f.params else ""
    return f"{f.name}{args}{exp}"


class ExprSyntaxError(AutomorphismError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos


_EXPR_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z_]*)(?P<digits>\d*)|(?P<punct>[();,^])|(?P<int>[+-]?\d+))")

# compact parameter forms: s2, omega3, w4, phi13
_DIGIT_ARGS = {"s": 1, "omega": 1, "w": 1, "phi": 2}


def parse_auto_expr(text: str) -> AutoExpr:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _EXPR_TOKEN.match(text, pos)
        if not m:
            raise ExprSyntaxError("unexpected character", text, pos)
        start = m.start() + len(m.group(0)) - len(m.group(0).lstrip())
        toks.append((m.lastgroup if m.group("name") is None else "name", m, start))
        pos = m.end()
    parser = _ExprParser(text, toks)
    expr = parser.expr()
    if parser.i != len(toks):
        raise ExprSyntaxError("unexpected token", text, toks[parser.i][2])
    return expr


class _ExprParser:
    def __init__(self, text, toks):
        self.text, self.toks, self.i = text, toks, 0

    def _peek(self, value=None):
        if self.i >= len(self.toks):
            return None
        kind, m, _ = self.toks[self.i]
        if value is None:
            return kind
        return kind == "punct" and m.group("punct") == value

    def _pos(self):
        return self.toks[self.i][2] if self.i < len(self.toks) else len(self.text)

    def _expect(self, value):
        if not self._peek(value):
            raise ExprSyntaxError(f"expected {value!r}", self.text, self._pos())
        self.i += 1

    def _int(self) -> int:
        if self._peek() == "int":
            v = int(self.toks[self.i][1].group("int"))
            self.i += 1
            return v
        raise ExprSyntaxError("expected an integer", self.text, self._pos())

    def _exponent(self) -> int:
        if self._peek("^"):
            self.i += 1
            return self._int()
        return 1

    def expr(self) -> AutoExpr:
        factors = [self.factor()]
        while self._peek(";"):
            self.i += 1
            factors.append(self.factor())
        return AutoExpr(tuple(f for f in factors if f is not None))

    def factor(self):
        if self._peek("("):
            self.i += 1
            inner = self.expr()
            self._expect(")")
            return Group(inner, self._exponent())
        if self._peek() == "int" and self.toks[self.i][1].group("int") == "1":
            self.i += 1
            self._exponent()
            return None
        if self._peek() != "name":
            raise ExprSyntaxError("expected an automorphism name", self.text, self._pos())
        m = self.toks[self.i][1]
        name, digits = m.group("name"), m.group("digits")
        self.i += 1
        params: tuple[int, ...] = ()
        if name == "id" and not digits:
            self._exponent()
            return None
        if digits:
            want = _DIGIT_ARGS.get(name)
            if want is None or (want == 2 and len(digits) != 2):
                raise ExprSyntaxError(f"cannot read parameters from {name}{digits}", self.text, self.toks[self.i - 1][2])
            params = (int(digits),) if want == 1 else (int(digits[0]), int(digits[1]))
        elif self._peek("("):
            self.i += 1
            vals = [self._int()]
            while self._peek(","):
                self.i += 1
                vals.append(self._int())
            self._expect(")")
            params = tuple(vals)
        if name not in CATALOG_NAMES:
            raise ExprSyntaxError(f"unknown automorphism {name!r}", self.text, self.toks[self.i - 1][2])
        return Factor(name, params, self._exponent())


def _domain_for(n: int, group: str) -> Alphabet:
    return {"P": Alphabet.pure, "B": Alphabet.braid}.get(group, lambda _: FREE_F2)(n)


def evaluate(expr: Union[AutoExpr, str], n: int, group: str = "P",
             budget: Optional[int] = None) -> GeneratorMap:
    """The composite map of an expression (left to right)."""
    if isinstance(expr, str):
        expr = parse_auto_expr(expr)
    result = GeneratorMap.identity(_domain_for(n, group))
    for step in _flatten(expr, 1):
        result = compose(result, step(n, group), budget=budget)
    return GeneratorMap(result.domain, result.images, str(expr))


def _flatten(expr: AutoExpr, sign: int) -> list[Callable[[int, str], GeneratorMap]]:
    """The expression (or its inverse when sign is -1) as a list of elementary maps."""
    out: list = []
    for f in (expr.factors if sign == 1 else reversed(expr.factors)):
        k = f.exponent * sign
        if isinstance(f, Group):
            body = _flatten(f.expr, 1 if k > 0 else -1)
            out.extend(body * abs(k))
        else:
            s = 1 if k > 0 else -1
            out.extend([_factor_map(f.name, f.params, s)] * abs(k))
    return out


def _factor_map(name: str, params: tuple, sign: int):
    return lambda n, group: named_automorphism(name, params, n, group, sign)


def verify_relation(lhs: Union[AutoExpr, str], rhs: Union[AutoExpr, str], n: int,
                    mode: str = "exact", group: str = "P", budget: Optional[int] = None,
                    claim: str = "") -> Report:
    left = evaluate(lhs, n, group, budget)
    right = evaluate(rhs, n, group, budget)
    ok = endomorphisms_equal(left, right, mode, budget)
    details: dict = {"lhs": str(lhs), "rhs": str(rhs), "mode": mode}
    witness = None
    if group == "P":
        ex = central_exponents(left, right, budget)
        details["central_exponents"] = {str(a): k for a, k in ex.items()}
        if not ok:
            bad = [a for a, k in ex.items() if k is None or (mode == "exact" and k != 0)]
            if bad:
                a = bad[0]
                k = ex[a]
                witness = f"{a}: differs by z^{k}" if k is not None else f"{a}: not equal modulo the center"
    elif not ok:
        for s, a, b in zip(left.domain.symbols, left.images, right.images):
            if a != b:
                witness = f"{s}: {a} vs {b}"
                break
    return Report(claim or f"{lhs} = {rhs}", n, status_of(ok), witness, details)


# -- relation lists -----------------------------------------------------------

def aut_p4_relations() -> list[tuple[str, str, str, str]]:
    """Relations of the presentation of Aut(P_4) as (label, lhs, rhs, note).

    Two relations are printed with a letter ``sa_1``; they are read as ``s1``
    and the note records it.
    """
    typo = "sa_1 read as s1"
    pairs = [(1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]
    ph = lambda p: f"phi({p[0]},{p[1]})"  # noqa: E731
    rels = [
        ("s1 s3", "s1 ; s3", "s3 ; s1", ""),
        ("s1 w4", "s1 ; w4", "w4 ; s1", typo),
        ("s2 w4", "s2 ; w4", "w4 ; s2 ; (phi(1,3)^-1 ; phi(2,4)^-1 ; phi(3,4))^2", ""),
        ("s1 s2 s1", "s1 ; s2 ; s1", "s2 ; s1 ; s2", ""),
        ("s3 w4 s3", "s3 ; w4 ; s3", "w4 ; s3 ; w4 ; (phi(1,4) ; phi(2,4) ; phi(3,4)^-1)^2", ""),
        ("s1 s2 s3 w4^2 s3 s2 s1", "s1 ; s2 ; s3 ; w4^2 ; s3 ; s2 ; s1", "(phi(1,3)^-1 ; phi(2,3)^2)^2", typo),
        ("(s1 s2 s3 w4)^5", "(s1 ; s2 ; s3 ; w4)^5",
         "(phi(1,3)^-1 ; phi(2,3))^3 ; (phi(1,4)^-1 ; phi(2,4)^-1 ; phi(3,4))^4", ""),
        ("(psi t)^2", "(psi ; t)^2", "1", ""),
        ("psi^-1 t^-1 psi t", "psi^-1 ; t^-1 ; psi ; t", "1", ""),
        ("psi^2", "psi^2", "1", ""),
        ("t^2", "t^2", "1", ""),
    ]
    for k in (1, 2, 3):
        rels.append((f"psi s{k}", f"psi ; s{k}", f"s{k} ; psi", ""))
    rels.append(("psi w4", "psi ; w4", "w4 ; psi", ""))
    for p in pairs:
        rels.append((f"(psi {ph(p)})^2", f"(psi ; {ph(p)})^2", "1", ""))
    for p in pairs:
        rels.append((f"t {ph(p)} t", f"t ; {ph(p)} ; t", f"{ph(p)}^-1 ; psi^-2", "literal form"))
        rels.append((f"t {ph(p)} t (simplified)", f"t ; {ph(p)} ; t", f"{ph(p)}^-1", "psi^-2 dropped since psi^2 = 1"))
    for a in range(len(pairs)):
        for b in range(a + 1, len(pairs)):
            p, q = pairs[a], pairs[b]
            rels.append((f"{ph(p)} {ph(q)}", f"{ph(p)} ; {ph(q)}", f"{ph(q)} ; {ph(p)}", ""))
    rels += [
        ("(t s1)^2", "(t ; s1)^2", "psi^-2", ""),
        ("(t s2)^2", "(t ; s2)^2", "phi(1,3)^-2", ""),
        ("(t s3)^2", "(t ; s3)^2", "psi^-2", ""),
        ("(t w4)^2", "(t ; w4)^2", "psi^2", ""),
    ]
    conj = {
        "s1": ["phi(2,3)", "phi(1,3)", "phi(2,4)", "phi(1,4)", "phi(3,4)"],
        "s2": ["phi(1,3)^-1", "phi(1,3)^-1 ; phi(2,3)", "phi(1,3)^-1 ; phi(1,4)",
               "phi(1,3)^-1 ; phi(3,4)", "phi(1,3)^-1 ; phi(2,4)"],
        "s3": ["phi(1,4)", "phi(2,4)", "phi(1,3)", "phi(2,3)", "phi(3,4)"],
        "w4": ["phi(1,3) ; phi(2,4) ; phi(3,4)^-1", "phi(2,3) ; phi(1,4) ; phi(3,4)^-1",
               "phi(2,4)", "phi(1,4)", "phi(1,4) ; phi(2,4) ; phi(3,4)^-1"],
    }
    for g, targets in conj.items():
        for p, rhs in zip(pairs, targets):
            rels.append((f"{g}^-1 {ph(p)} {g}", f"{g}^-1 ; {ph(p)} ; {g}", rhs, ""))
    return rels


def mod_relators(n: int) -> list[tuple[str, str]]:
    """Relators of the mapping class group presentation on omega(1..n), eps, as (label, expr)."""
    om = lambda k: f"omega({k})"  # noqa: E731
    rels = []
    for i in range(1, n + 1):
        for j in range(i + 2, n + 1):
            rels.append((f"omega{i} omega{j} = omega{j} omega{i}",
                         f"{om(i)} ; {om(j)} ; {om(i)}^-1 ; {om(j)}^-1"))
    for i in range(1, n):
        rels.append((f"omega{i} omega{i+1} omega{i} = omega{i+1} omega{i} omega{i+1}",
                     f"{om(i)} ; {om(i+1)} ; {om(i)} ; {om(i+1)}^-1 ; {om(i)}^-1 ; {om(i+1)}^-1"))
    up = " ; ".join(om(k) for k in range(1, n))
    down = " ; ".join(om(k) for k in range(n - 1, 0, -1))
    rels.append((f"omega1 ... omega{n}^2 ... omega1", f"{up} ; {om(n)}^2 ; {down}"))
    rels.append((f"(omega1 ... omega{n})^{n+1}", f"({' ; '.join(om(k) for k in range(1, n + 1))})^{n + 1}"))
    for i in range(1, n + 1):
        rels.append((f"(eps omega{i})^2", f"(eps ; {om(i)})^2"))
    rels.append(("eps^2", "eps^2"))
    return rels


def verify_mod_relators(n: int, budget: Optional[int] = None) -> list[Report]:
    """Each relator must be the identity modulo the center; the z-exponents are reported."""
    out = []
    for label, expr in mod_relators(n):
        rep = verify_relation(expr, "1", n, "modCenter", budget=budget, claim=label)
        out.append(rep)
    return out


# -- relations for Aut(P_3) ----------------------------------------------------

def log_x(w: Word) -> int:
    return w.exponent_sum(_X)


def log_y(w: Word) -> int:
    return w.exponent_sum(_Y)


def free_part_images(f: GeneratorMap) -> tuple[Word, Word]:
    """``(p, q)`` for a lift of x -> p, y -> q; the images of A(1,3), A(2,3) must have no z part."""
    from .combing import p3_coordinates

    out = []
    for a in (A(1, 3), A(2, 3)):
        c = p3_coordinates(f.image(a))
        if c.z_exponent:
            raise AutomorphismError(f"{f.name}: image of {a} has a z^{c.z_exponent} factor")
        out.append(c.free_part)
    return out[0], out[1]


def _power(f: GeneratorMap, k: int, inverse: GeneratorMap) -> GeneratorMap:
    result = GeneratorMap.identity(f.domain)
    for _ in range(abs(k)):
        result = compose(result, f if k > 0 else inverse)
    return result


def _chain(*maps: GeneratorMap) -> GeneratorMap:
    result = GeneratorMap.identity(maps[0].domain)
    for m in maps:
        result = compose(result, m)
    return result


def p3_relation_reports(phi: GeneratorMap, phi_inverse: GeneratorMap, label: str) -> list[Report]:
    """Relations (5)-(7) for a lift ``phi`` of an automorphism of F_2 (with its inverse)."""
    p, q = free_part_images(phi)
    th, xi, xi_i, eta, eta_i = theta_map(), xi_map(), xi_map(-1), eta_map(), eta_map(-1)
    out = []
    lhs5, rhs5 = _chain(th, phi), _chain(phi, th)
    out.append(Report(f"theta {label} = {label} theta", 3, status_of(endomorphisms_equal(lhs5, rhs5))))
    a, b = 1 - log_x(p), -log_x(q)
    lhs6 = _chain(xi, phi, xi_i)
    rhs6 = _chain(_power(xi, a, xi_i), _power(eta, b, eta_i), phi)
    out.append(Report(f"xi {label} xi^-1 = xi^{a} eta^{b} {label}", 3, status_of(endomorphisms_equal(lhs6, rhs6)),
                      details={"log_x(p)": log_x(p), "log_x(q)": log_x(q)}))
    c, d = -log_y(p), 1 - log_y(q)
    lhs7 = _chain(eta, phi, eta_i)
    rhs7 = _chain(_power(xi, c, xi_i), _power(eta, d, eta_i), phi)
    out.append(Report(f"eta {label} eta^-1 = xi^{c} eta^{d} {label}", 3, status_of(endomorphisms_equal(lhs7, rhs7)),
                      details={"log_y(p)": log_y(p), "log_y(q)": log_y(q)}))
    return out


def p3_basic_relations() -> list[tuple[str, str, str]]:
    return [
        ("theta^2 = 1", "theta^2", "1"),
        ("xi eta = eta xi", "xi ; eta", "eta ; xi"),
        ("theta xi theta = xi^-1", "theta ; xi ; theta", "xi^-1"),
        ("theta eta theta = eta^-1", "theta ; eta ; theta", "eta^-1"),
    ]


def aut_f2_relators() -> list[tuple[str, str]]:
    return [
        ("rho^2", "rho^2"),
        ("sigma^2", "sigma^2"),
        ("(sigma rho)^4", "(sigma ; rho)^4"),
        ("(rho sigma rho nu)^2", "(rho ; sigma ; rho ; nu)^2"),
        ("(nu rho sigma)^3", "(nu ; rho ; sigma)^3"),
        ("[nu, sigma nu sigma]", "nu^-1 ; (sigma ; nu ; sigma)^-1 ; nu ; sigma ; nu ; sigma"),
    ]


def sigma_conjugation_check(k: int, n: int) -> bool:
    """``s_k`` from the action table agrees with conjugation by s_k computed in B_n."""
    f = s_map(k, n)
    s = Word.gen(Sigma(k))
    for a in pure_pairs(n):
        lhs = BraidWord(n, Word.product((~s, expand_pure_word(Word.gen(a), n).word, s)))
        if not braid_words_equal(lhs, expand_pure_word(f.image(a), n)):
            return False
    return True


__all__ = [
    "GeneratorMap", "AutoExpr", "Factor", "Group", "AutomorphismError", "ExprSyntaxError",
    "apply_endomorphism", "compose", "endomorphisms_equal", "central_exponents", "verify_homomorphism",
    "named_automorphism", "parse_auto_expr", "evaluate", "verify_relation", "aut_p4_relations",
    "mod_relators", "verify_mod_relators", "t_map", "s_map", "psi_map", "phi_map", "omega_map", "eps_map",
    "w_map", "w_inverse", "tau_braid", "central_map", "central_inverse", "theta_map", "xi_map", "eta_map",
    "lift_free_automorphism", "lift_map", "free_automorphism", "rho_lift_as_printed", "displayed_lifts",
    "p3_map", "p3_relation_reports", "p3_basic_relations", "aut_f2_relators", "log_x", "log_y",
    "free_part_images", "sigma_conjugation_check", "FREE_F2",
]
