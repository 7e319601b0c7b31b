"""Ring operations on Z_w by sign cases, and addition on Z_b through the recursor."""

from __future__ import annotations

from .normalizer import pred_w, succ_w
from .recursor import BiInvDescriptor, rec_zb
from .terms import (
    NAT_MAX,
    NatOverflowError,
    ZW_ZERO,
    ZbTerm,
    ZwTerm,
    pred1,
    pred2,
    strneg,
    strpos,
    succ,
)


def _nat(n: int) -> int:
    if n > NAT_MAX:
        raise NatOverflowError(f"result magnitude {n + 1} is not representable")
    return n


def neg(a: ZwTerm) -> ZwTerm:
    match a.tag:
        case "zero":
            return ZW_ZERO
        case "strpos":
            return strneg(a.arg)
        case _:
            return strpos(a.arg)


def add(a: ZwTerm, b: ZwTerm) -> ZwTerm:
    # strpos(m) is m+1, strneg(m) is -(m+1)
    match a.tag, b.tag:
        case "zero", _:
            return b
        case _, "zero":
            return a
        case "strpos", "strpos":
            return strpos(_nat(a.arg + b.arg + 1))
        case "strneg", "strneg":
            return strneg(_nat(a.arg + b.arg + 1))
        case "strpos", "strneg":
            return _difference(a.arg, b.arg)
        case _:
            return _difference(b.arg, a.arg)


def _difference(m: int, n: int) -> ZwTerm:
    """(m+1) - (n+1)."""
    if m == n:
        return ZW_ZERO
    if m > n:
        return strpos(m - n - 1)
    return strneg(n - m - 1)


def add_iterated(a: ZwTerm, b: ZwTerm) -> ZwTerm:
    """``a + b`` by applying succ_w (b > 0) or pred_w (b < 0) |b| times to ``a``."""
    if b.tag == "zero":
        return a
    step = succ_w if b.tag == "strpos" else pred_w
    for _ in range(b.arg + 1):
        a = step(a)
    return a


def mul(a: ZwTerm, b: ZwTerm) -> ZwTerm:
    match a.tag, b.tag:
        case "zero", _:
            return ZW_ZERO
        case _, "zero":
            return ZW_ZERO
        case _:
            magnitude = _nat((a.arg + 1) * (b.arg + 1) - 1)
            return strpos(magnitude) if a.tag == b.tag else strneg(magnitude)


def sub(a: ZwTerm, b: ZwTerm) -> ZwTerm:
    return add(a, neg(b))


def add_zb(a: ZbTerm, b: ZbTerm) -> ZbTerm:
    """``a + b`` as the recursor into Z_b with point ``a`` applied to ``b``."""
    return rec_zb(BiInvDescriptor(a, succ, pred1, pred2, name="Z_b"))(b)
