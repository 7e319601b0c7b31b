"""The free group on a finite ordered alphabet, and F(1) as the integers."""

from __future__ import annotations

from .terms import FreeWord, Letter, ZwTerm, int_to_zw, zw_to_int


def reduce(w: FreeWord) -> FreeWord:
    """Cancel adjacent ``a a-`` / ``a- a`` pairs in one left-to-right stack pass."""
    stack: list[Letter] = []
    for x in w.letters:
        if stack and stack[-1].symbol == x.symbol and stack[-1].sign == -x.sign:
            stack.pop()
        else:
            stack.append(x)
    return FreeWord(tuple(stack))


def concat(u: FreeWord, v: FreeWord) -> FreeWord:
    return reduce(FreeWord(u.letters + v.letters))


def invert(w: FreeWord) -> FreeWord:
    return FreeWord(tuple(x.inverse() for x in reversed(w.letters)))


def identity() -> FreeWord:
    return FreeWord(())


def f1_to_zw(w: FreeWord) -> ZwTerm:
    if len(w.symbols()) > 1:
        raise ValueError(f"word over more than one symbol: {sorted(w.symbols())}")
    if not w.is_reduced():
        raise ValueError("word is not reduced")
    return int_to_zw(sum(x.sign for x in w.letters))


def zw_to_f1(z: ZwTerm, symbol: str = "a") -> FreeWord:
    k = zw_to_int(z)
    return FreeWord((Letter(symbol, 1 if k > 0 else -1),) * abs(k))
