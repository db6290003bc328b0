"""
Freely reduced words over finite alphabets.

A word is stored run-length encoded as a tuple of syllables ``(symbol, exponent)``
with nonzero exponents and no two adjacent syllables on the same symbol. Symbols
are hashable values of three kinds:

- ``Sigma(i)``, an Artin generator of a braid group,
- ``A(i, j)``, a pure braid generator (``i < j``),
- a plain string, an abstract letter such as ``"x"``.

Conjugation follows ``y^x = x^-1 y x`` and commutators ``[x, y] = x^-1 y^-1 x y``.
The empty word prints as ``1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Mapping, NamedTuple, Sequence, Union


class Sigma(NamedTuple):
    i: int

    def __str__(self) -> str:
        return f"s{self.i}"


class A(NamedTuple):
    i: int
    j: int

    def __str__(self) -> str:
        return f"A({self.i},{self.j})"


Symbol = Union[Sigma, A, str]
Syllable = tuple[Hashable, int]


class WordError(ValueError):
    pass


class WordSyntaxError(WordError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


def _push(stack: list, sym, exp: int) -> None:
    if not exp:
        return
    if stack and stack[-1][0] == sym:
        total = stack[-1][1] + exp
        if total:
            stack[-1] = (sym, total)
        else:
            stack.pop()
    else:
        stack.append((sym, exp))


class Word:
    """An element of a free group, kept freely reduced."""

    __slots__ = ("syllables", "_hash")

    def __init__(self, syllables: Sequence[Syllable] = ()):
        # Callers must pass reduced syllables; use free_reduce otherwise.
        self.syllables: tuple[Syllable, ...] = tuple(syllables)
        self._hash = None

    @classmethod
    def gen(cls, sym, exp: int = 1) -> "Word":
        return cls(((sym, exp),)) if exp else IDENTITY

    @classmethod
    def product(cls, factors: Iterable["Word"]) -> "Word":
        stack: list = []
        for f in factors:
            for sym, e in f.syllables:
                _push(stack, sym, e)
        return cls(stack)

    def is_identity(self) -> bool:
        return not self.syllables

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def __iter__(self) -> Iterator[Syllable]:
        return iter(self.syllables)

    def letters(self) -> Iterator[Syllable]:
        """Iterate letter by letter as ``(symbol, +-1)``."""
        for sym, e in self.syllables:
            step = 1 if e > 0 else -1
            for _ in range(abs(e)):
                yield sym, step

    def symbols(self) -> set:
        return {sym for sym, _ in self.syllables}

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.syllables == other.syllables

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.syllables)
        return self._hash

    def __mul__(self, other: "Word") -> "Word":
        if not other.syllables:
            return self
        if not self.syllables:
            return other
        left = list(self.syllables)
        right = other.syllables
        i = 0
        while i < len(right) and left:
            sym, e = right[i]
            top_sym, top_e = left[-1]
            if top_sym != sym:
                break
            total = top_e + e
            i += 1
            if total:
                left[-1] = (sym, total)
                break
            left.pop()
        return Word(tuple(left) + right[i:])

    def __invert__(self) -> "Word":
        return Word(tuple((sym, -e) for sym, e in reversed(self.syllables)))

    def inverse(self) -> "Word":
        return ~self

    def __pow__(self, k: int) -> "Word":
        if k == 0:
            return IDENTITY
        if k < 0:
            return (~self) ** (-k)
        if len(self.syllables) == 1:
            sym, e = self.syllables[0]
            return Word(((sym, e * k),))
        result = IDENTITY
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self, x: "Word") -> "Word":
        """Return ``x^-1 self x``."""
        return Word.product((~x, self, x))

    def exponent_sum(self, sym) -> int:
        return sum(e for s, e in self.syllables if s == sym)

    def substitute(self, images: Mapping) -> "Word":
        """Replace each symbol by its image word (symbols without an image stay)."""
        stack: list = []
        for sym, e in self.syllables:
            img = images.get(sym)
            if img is None:
                _push(stack, sym, e)
                continue
            seq = img.syllables if e > 0 else (~img).syllables
            for _ in range(abs(e)):
                for s, f in seq:
                    _push(stack, s, f)
        return Word(stack)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"

    def __str__(self) -> str:
        return format_word(self)


IDENTITY = Word()


def free_reduce(raw: Iterable[Syllable]) -> Word:
    """Freely reduce an arbitrary syllable list (zero exponents are dropped)."""
    stack: list = []
    for sym, e in raw:
        _push(stack, sym, int(e))
    return Word(stack)


def multiply(u: Word, v: Word) -> Word:
    return u * v


def invert(u: Word) -> Word:
    return ~u


def conjugate_word(y: Word, x: Word) -> Word:
    """``y^x = x^-1 y x``."""
    return y.conj(x)


def commutator(x: Word, y: Word) -> Word:
    """``[x, y] = x^-1 y^-1 x y``."""
    return Word.product((~x, ~y, x, y))


def exponent_sum(w: Word, sym) -> int:
    return w.exponent_sum(sym)


def pure_pairs(n: int) -> list[A]:
    """Pure generators ordered by strand: A(1,2), A(1,3), A(2,3), A(1,4), ..."""
    return [A(i, j) for j in range(2, n + 1) for i in range(1, j)]


def full_twist_pure(n: int) -> Word:
    """``z_n = A(1,2) (A(1,3) A(2,3)) ... (A(1,n) ... A(n-1,n))``."""
    return Word(tuple((a, 1) for a in pure_pairs(n)))


# -- alphabets ---------------------------------------------------------------

@dataclass(frozen=True)
class Alphabet:
    """An ordered generating set tagged with its context.

    ``context`` is one of ``braid`` (sigma_1..sigma_{n-1}), ``pure`` (all A(i,j)
    with j <= n), ``freeU`` (A(1,n)..A(n-1,n)) or ``freeF`` (named letters).
    """

    context: str
    n: int
    letters: tuple[str, ...] = ()

    @classmethod
    def braid(cls, n: int) -> "Alphabet":
        if n < 1:
            raise WordError(f"braid group needs n >= 1, got {n}")
        return cls("braid", n)

    @classmethod
    def pure(cls, n: int) -> "Alphabet":
        if n < 1:
            raise WordError(f"pure braid group needs n >= 1, got {n}")
        return cls("pure", n)

    @classmethod
    def free_u(cls, k: int) -> "Alphabet":
        if k < 2:
            raise WordError(f"U_k needs k >= 2, got {k}")
        return cls("freeU", k)

    @classmethod
    def free(cls, letters: Sequence[str]) -> "Alphabet":
        letters = tuple(letters)
        if len(set(letters)) != len(letters):
            raise WordError(f"repeated letters in {letters}")
        for name in letters:
            if not _NAME.fullmatch(name):
                raise WordError(f"invalid letter name {name!r}")
        return cls("freeF", len(letters), letters)

    @property
    def symbols(self) -> tuple:
        if self.context == "braid":
            return tuple(Sigma(i) for i in range(1, self.n))
        if self.context == "pure":
            return tuple(pure_pairs(self.n))
        if self.context == "freeU":
            return tuple(A(i, self.n) for i in range(1, self.n))
        return self.letters

    def __contains__(self, sym) -> bool:
        if self.context == "braid":
            return isinstance(sym, Sigma) and 1 <= sym.i < self.n
        if self.context == "pure":
            return isinstance(sym, A) and 1 <= sym.i < sym.j <= self.n
        if self.context == "freeU":
            return isinstance(sym, A) and sym.j == self.n and 1 <= sym.i < self.n
        return isinstance(sym, str) and sym in self.letters

    def check(self, w: Word) -> Word:
        for sym, _ in w.syllables:
            if sym not in self:
                raise WordError(f"generator {_fmt_symbol(sym)} not in {self}")
        return w

    def __str__(self) -> str:
        if self.context == "freeF":
            return f"freeF({', '.join(self.letters)})"
        return f"{self.context}({self.n})"


# -- text form ---------------------------------------------------------------

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TOKEN = re.compile(
    r"""\s*(?:
        (?P<one>1)(?![0-9])
      | A\(\s*(?P<ai>\d+)\s*,\s*(?P<aj>\d+)\s*\)
      | s(?P<si>\d+)(?![A-Za-z_])
      | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
    )(?:\s*\^\s*(?P<exp>[+-]?\d+))?""",
    re.VERBOSE,
)


def _fmt_symbol(sym) -> str:
    return str(sym)


def format_word(w: Word) -> str:
    if not w.syllables:
        return "1"
    parts = []
    for sym, e in w.syllables:
        s = _fmt_symbol(sym)
        parts.append(s if e == 1 else f"{s}^{e}")
    return " ".join(parts)


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Parse whitespace-separated tokens ``gen`` or ``gen^k`` into a reduced word.

    In a pure context the token ``z`` stands for the full twist ``z_n``.
    """
    stack: list = []
    pos = 0
    text_len = len(text)
    seen = False
    while True:
        while pos < text_len and text[pos].isspace():
            pos += 1
        if pos >= text_len:
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise WordSyntaxError("unexpected character", text, pos)
        start = pos
        while text[start].isspace():
            start += 1
        exp = 1
        if m.group("exp") is not None:
            exp = int(m.group("exp"))
            if exp == 0:
                raise WordSyntaxError("exponent 0 is not allowed", text, m.start("exp"))
        if m.group("one") is not None:
            word = IDENTITY
        elif m.group("ai") is not None:
            sym = A(int(m.group("ai")), int(m.group("aj")))
            word = Word.gen(_check_symbol(sym, alphabet, text, start), 1)
        elif m.group("si") is not None and alphabet.context == "braid":
            sym = Sigma(int(m.group("si")))
            word = Word.gen(_check_symbol(sym, alphabet, text, start), 1)
        else:
            name = m.group("name") or f"s{m.group('si')}"
            if alphabet.context == "pure" and name == "z" and "z" not in alphabet.letters:
                word = full_twist_pure(alphabet.n)
            else:
                word = Word.gen(_check_symbol(name, alphabet, text, start), 1)
        for sym, e in (word ** exp).syllables:
            _push(stack, sym, e)
        seen = True
        pos = m.end()
    if not seen:
        raise WordSyntaxError("empty word (write 1 for the identity)", text, 0)
    return Word(stack)


def _check_symbol(sym, alphabet: Alphabet, text: str, pos: int):
    if sym in alphabet:
        return sym
    if isinstance(sym, A) and alphabet.context in ("pure", "freeU"):
        raise WordSyntaxError(f"index out of range for {alphabet}: {sym}", text, pos)
    if isinstance(sym, Sigma) and alphabet.context == "braid":
        raise WordSyntaxError(f"index out of range for {alphabet}: {sym}", text, pos)
    raise WordSyntaxError(f"unknown generator {sym} for {alphabet}", text, pos)
