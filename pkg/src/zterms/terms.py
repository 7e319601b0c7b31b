"""Term representations of the integers and their surface grammar.

Every constructor of the point fragments of ``Z_b`` and ``Z_h`` is unary over
a single nullary ``0``, so a term is a straight spine of constructor names.
:class:`ZbTerm` and :class:`ZhTerm` store that spine as a tuple, outermost
constructor first; ``succ(pred1(0))`` is ``ZbTerm(("succ", "pred1"))``.
This keeps equality, hashing and folding iterative, so terms thousands of
constructors deep are fine.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import ClassVar, Iterator, Sequence

NAT_MAX = 2**64 - 1


class NatOverflowError(OverflowError):
    """A natural number left the range ``[0, NAT_MAX]``."""


class TermSyntaxError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


def check_nat(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"natural number expected, got {n!r}")
    if n < 0:
        raise NatOverflowError(f"{n} is negative")
    if n > NAT_MAX:
        raise NatOverflowError(f"{n} exceeds NAT_MAX")
    return n


# ---------------------------------------------------------------------------
# Z_w: signed naturals


@dataclass(frozen=True, slots=True)
class ZwTerm:
    """``zero``, ``strpos(n)`` (denoting n+1) or ``strneg(n)`` (denoting -(n+1))."""

    tag: str
    arg: int | None = None

    def __post_init__(self):
        if self.tag == "zero":
            if self.arg is not None:
                raise ValueError("zero takes no argument")
        elif self.tag in ("strpos", "strneg"):
            if self.arg is None:
                raise ValueError(f"{self.tag} needs an argument")
            check_nat(self.arg)
        else:
            raise ValueError(f"unknown Z_w constructor {self.tag!r}")

    @classmethod
    def _unchecked(cls, tag: str, arg: int | None):
        z = object.__new__(cls)
        object.__setattr__(z, "tag", tag)
        object.__setattr__(z, "arg", arg)
        return z

    def __repr__(self):
        return "zero" if self.tag == "zero" else f"{self.tag}({self.arg})"

    def __str__(self):
        return str(zw_to_int(self))


ZW_ZERO = ZwTerm("zero")


def strpos(n: int) -> ZwTerm:
    return ZwTerm("strpos", n)


def strneg(n: int) -> ZwTerm:
    return ZwTerm("strneg", n)


def zw_to_int(z: ZwTerm) -> int:
    match z.tag:
        case "zero":
            return 0
        case "strpos":
            return z.arg + 1
        case _:
            return -(z.arg + 1)


def int_to_zw(k: int) -> ZwTerm:
    if k == 0:
        return ZW_ZERO
    if k > 0:
        return strpos(check_nat(k - 1))
    return strneg(check_nat(-k - 1))


# ---------------------------------------------------------------------------
# Z_q: pairs of naturals up to x+ + y- = y+ + x-


@dataclass(frozen=True, slots=True)
class ZqPair:
    pos: int
    neg: int

    def __post_init__(self):
        check_nat(self.pos)
        check_nat(self.neg)

    @property
    def value(self) -> int:
        return self.pos - self.neg

    def is_canonical(self) -> bool:
        return self.pos == 0 or self.neg == 0


def zq_equivalent(p: ZqPair, q: ZqPair) -> bool:
    return p.pos + q.neg == q.pos + p.neg


def canonicalize_zq(p: ZqPair) -> ZqPair:
    m = min(p.pos, p.neg)
    return ZqPair(p.pos - m, p.neg - m)


# ---------------------------------------------------------------------------
# Z_b and Z_h point constructors


@dataclass(frozen=True, slots=True)
class _SpineTerm:
    ops: tuple[str, ...] = ()

    CONSTRUCTORS: ClassVar[tuple[str, ...]] = ()

    def __post_init__(self):
        if not isinstance(self.ops, tuple):
            object.__setattr__(self, "ops", tuple(self.ops))
        bad = [op for op in self.ops if op not in self.CONSTRUCTORS]
        if bad:
            raise ValueError(f"{bad[0]!r} is not a {type(self).__name__} constructor")

    @classmethod
    def _unchecked(cls, ops: tuple[str, ...]):
        t = object.__new__(cls)
        object.__setattr__(t, "ops", ops)
        return t

    @property
    def depth(self) -> int:
        return len(self.ops)

    @property
    def size(self) -> int:
        return len(self.ops) + 1

    @property
    def is_zero(self) -> bool:
        return not self.ops

    @property
    def head(self) -> str:
        return self.ops[0] if self.ops else "zero"

    @property
    def arg(self):
        if not self.ops:
            raise ValueError("0 has no argument")
        return self._unchecked(self.ops[1:])

    def wrap(self, op: str):
        if op not in self.CONSTRUCTORS:
            raise ValueError(f"{op!r} is not a {type(self).__name__} constructor")
        return self._unchecked((op,) + self.ops)

    def subterm(self, position: Sequence[int]):
        if any(i != 0 for i in position) or len(position) > len(self.ops):
            raise IndexError(f"no subterm at {tuple(position)}")
        return type(self)(self.ops[len(position):])

    def __repr__(self):
        return print_term(self)

    def __str__(self):
        return print_term(self)


@dataclass(frozen=True, slots=True, repr=False)
class ZbTerm(_SpineTerm):
    CONSTRUCTORS: ClassVar[tuple[str, ...]] = ("succ", "pred1", "pred2")


@dataclass(frozen=True, slots=True, repr=False)
class ZhTerm(_SpineTerm):
    CONSTRUCTORS: ClassVar[tuple[str, ...]] = ("succ", "pred")


ZB_ZERO = ZbTerm()
ZH_ZERO = ZhTerm()


def succ(t):
    return t.wrap("succ")


def pred1(t: ZbTerm) -> ZbTerm:
    return t.wrap("pred1")


def pred2(t: ZbTerm) -> ZbTerm:
    return t.wrap("pred2")


def pred(t: ZhTerm) -> ZhTerm:
    return t.wrap("pred")


def enumerate_terms(max_depth: int, cls=ZbTerm) -> Iterator:
    """All terms of depth <= max_depth, by depth and then lexicographically
    (zero < succ < pred1 < pred2 for ZbTerm)."""
    from itertools import product

    for d in range(max_depth + 1):
        for ops in product(cls.CONSTRUCTORS, repeat=d):
            yield cls._unchecked(ops)


def print_term(t: _SpineTerm) -> str:
    return "".join(op + "(" for op in t.ops) + "0" + ")" * len(t.ops)


_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|(0)|(\()|(\))|(\S))")


def _tokens(text: str):
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            yield ("end", None, len(text))
            return
        start = m.start(m.lastindex)
        if m.group(1):
            yield ("name", m.group(1), start)
        elif m.group(2):
            yield ("zero", "0", start)
        elif m.group(3):
            yield ("(", "(", start)
        elif m.group(4):
            yield (")", ")", start)
        else:
            raise TermSyntaxError(f"unexpected character {m.group(5)!r}", text, start)
        pos = m.end()


def _parse_spine(text: str, cls):
    toks = _tokens(text)
    ops = []
    kind, value, at = next(toks)
    while kind == "name":
        if value not in cls.CONSTRUCTORS:
            raise TermSyntaxError(f"unknown constructor {value!r}", text, at)
        ops.append(value)
        kind, value, at = next(toks)
        if kind != "(":
            raise TermSyntaxError("expected '('", text, at)
        kind, value, at = next(toks)
    if kind != "zero":
        raise TermSyntaxError("expected '0' or a constructor", text, at)
    for _ in ops:
        kind, value, at = next(toks)
        if kind != ")":
            raise TermSyntaxError("expected ')'", text, at)
    kind, value, at = next(toks)
    if kind != "end":
        raise TermSyntaxError("trailing input", text, at)
    return cls(tuple(ops))


def parse_zb(text: str) -> ZbTerm:
    return _parse_spine(text, ZbTerm)


def parse_zh(text: str) -> ZhTerm:
    return _parse_spine(text, ZhTerm)


def print_zb(t: ZbTerm) -> str:
    return print_term(t)


def print_zh(t: ZhTerm) -> str:
    return print_term(t)


_INT = re.compile(r"\s*([+-]?)\s*(\d+)\s*")


def parse_int(text: str) -> int:
    m = _INT.fullmatch(text)
    if m is None:
        raise TermSyntaxError("expected a signed decimal integer", text, 0)
    k = int(m.group(2))
    return -k if m.group(1) == "-" else k


def parse_zw(text: str) -> ZwTerm:
    return int_to_zw(parse_int(text))


def print_zw(z: ZwTerm) -> str:
    return str(zw_to_int(z))


_PAIR = re.compile(r"\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*")


def parse_zq(text: str) -> ZqPair:
    m = _PAIR.fullmatch(text)
    if m is None:
        raise TermSyntaxError("expected '(pos, neg)'", text, 0)
    return ZqPair(int(m.group(1)), int(m.group(2)))


def print_zq(p: ZqPair) -> str:
    return f"({p.pos},{p.neg})"


# ---------------------------------------------------------------------------
# Free group words


@dataclass(frozen=True, slots=True)
class Alphabet:
    """A finite alphabet; the tuple order is the total order on symbols."""

    symbols: tuple[str, ...]

    def __post_init__(self):
        if not isinstance(self.symbols, tuple):
            object.__setattr__(self, "symbols", tuple(self.symbols))
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("duplicate symbol in alphabet")
        for s in self.symbols:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", s):
                raise ValueError(f"invalid symbol {s!r}")

    @classmethod
    def parse(cls, text: str) -> "Alphabet":
        return cls(tuple(re.split(r"[\s,]+", text.strip())) if text.strip() else ())

    def __len__(self):
        return len(self.symbols)

    def __contains__(self, symbol):
        return symbol in self.symbols

    def index(self, symbol: str) -> int:
        return self.symbols.index(symbol)


@dataclass(frozen=True, slots=True)
class Letter:
    symbol: str
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def inverse(self) -> "Letter":
        return Letter(self.symbol, -self.sign)

    def __repr__(self):
        return self.symbol + ("+" if self.sign == 1 else "-")


@dataclass(frozen=True, slots=True)
class FreeWord:
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def is_reduced(self) -> bool:
        return all(
            not (x.symbol == y.symbol and x.sign == -y.sign)
            for x, y in zip(self.letters, self.letters[1:])
        )

    def symbols(self) -> set[str]:
        return {x.symbol for x in self.letters}

    def __str__(self):
        return print_word(self)


def word(*items: str) -> FreeWord:
    """Build a word from tokens like ``"a+"``, ``"b-"`` or ``"a"``."""
    letters = []
    for s in items:
        if s.endswith(("+", "-")):
            letters.append(Letter(s[:-1], 1 if s[-1] == "+" else -1))
        else:
            letters.append(Letter(s, 1))
    return FreeWord(tuple(letters))


_WORD_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*)(-?)|\s*(\S)")


def parse_word(text: str, alphabet: Alphabet | None = None) -> FreeWord:
    letters = []
    pos = 0
    text_end = len(text.rstrip())
    while pos < text_end:
        m = _WORD_TOKEN.match(text, pos)
        if m.group(3) is not None:
            raise TermSyntaxError(f"unexpected character {m.group(3)!r}", text, m.start(3))
        symbol = m.group(1)
        if alphabet is not None and symbol not in alphabet:
            raise TermSyntaxError(f"symbol {symbol!r} not in alphabet", text, m.start(1))
        letters.append(Letter(symbol, -1 if m.group(2) else 1))
        pos = m.end()
    return FreeWord(tuple(letters))


def print_word(w: FreeWord) -> str:
    return " ".join(x.symbol + ("-" if x.sign == -1 else "") for x in w.letters)


# ---------------------------------------------------------------------------
# Loops on the circle


@dataclass(frozen=True, slots=True)
class LoopWord:
    """A word in the generator ``q`` (step +1) and its inverse ``Q`` (step -1)."""

    steps: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.steps, tuple):
            object.__setattr__(self, "steps", tuple(self.steps))
        if any(s not in (1, -1) for s in self.steps):
            raise ValueError("loop steps must be +1 or -1")

    def __len__(self):
        return len(self.steps)

    def is_reduced(self) -> bool:
        return all(a == b for a, b in zip(self.steps, self.steps[1:]))

    def __str__(self):
        return print_loop(self)


def parse_loop(text: str) -> LoopWord:
    steps = []
    for i, ch in enumerate(text):
        if ch == "q":
            steps.append(1)
        elif ch == "Q":
            steps.append(-1)
        elif not ch.isspace():
            raise TermSyntaxError(f"unexpected character {ch!r}", text, i)
    return LoopWord(tuple(steps))


def print_loop(w: LoopWord) -> str:
    return "".join("q" if s == 1 else "Q" for s in w.steps)
