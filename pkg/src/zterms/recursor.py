"""Maps out of Z_b: the simple recursor, the uniqueness check and bounded induction.

A map ``ZbTerm -> T`` is determined by a point of ``T`` and a bi-invertible
endomap of ``T``. The two checks here test, over an exhaustive enumeration up
to a depth bound, that a map agreeing with the point and commuting with
``succ`` is that recursor, and that an nf-invariant predicate closed under
``0``, ``succ`` and ``pred1`` holds everywhere.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Any, Callable, Generic, Iterable, TypeVar

from .normalizer import nf as _nf
from .normalizer import pred_w, succ_w
from .terms import ZB_ZERO, ZW_ZERO, ZbTerm, enumerate_terms, pred1, pred2, succ

T = TypeVar("T")


@dataclass(frozen=True)
class BiInvDescriptor(Generic[T]):
    """A carrier with a point, an endomap and its candidate left/right inverses.

    ``eq`` is the carrier's decidable equality; it defaults to ``==``.
    """

    point: T
    forward: Callable[[T], T]
    left_inverse: Callable[[T], T]
    right_inverse: Callable[[T], T]
    eq: Callable[[T, T], bool] = operator.eq
    name: str = "T"

    def inverse_law_violations(self, elements: Iterable[T]) -> list[tuple[str, T]]:
        """Elements of ``elements`` on which ``g . f = id`` or ``f . h = id`` fails."""
        bad = []
        for x in elements:
            if not self.eq(self.left_inverse(self.forward(x)), x):
                bad.append(("left", x))
            if not self.eq(self.forward(self.right_inverse(x)), x):
                bad.append(("right", x))
        return bad

    def step(self, op: str) -> Callable[[T], T]:
        match op:
            case "succ":
                return self.forward
            case "pred1":
                return self.left_inverse
            case "pred2":
                return self.right_inverse
        raise ValueError(f"unknown constructor {op!r}")


def zw_descriptor() -> BiInvDescriptor:
    """``(Z_w, zero, succ_w, pred_w, pred_w)``."""
    return BiInvDescriptor(ZW_ZERO, succ_w, pred_w, pred_w, name="Z_w")


def zb_modulo_nf_descriptor() -> BiInvDescriptor:
    """The constructors of Z_b themselves, with terms compared through nf."""
    return BiInvDescriptor(
        ZB_ZERO, succ, pred1, pred2, eq=lambda a, b: _nf(a) == _nf(b), name="Z_b/nf"
    )


def rec_zb(d: BiInvDescriptor[T]) -> Callable[[ZbTerm], T]:
    steps = {op: d.step(op) for op in ZbTerm.CONSTRUCTORS}

    def r(t: ZbTerm) -> T:
        value = d.point
        for op in reversed(t.ops):
            value = steps[op](value)
        return value

    return r


@dataclass(frozen=True)
class UniquenessReport:
    hypotheses_ok: bool
    checked: int
    counterexample: tuple[ZbTerm, Any, Any] | None = None
    hypothesis_failure: tuple[str, ZbTerm, Any, Any] | None = None

    @property
    def ok(self) -> bool:
        return self.hypotheses_ok and self.counterexample is None

    def __str__(self):
        lines = [
            f"hypotheses_ok: {str(self.hypotheses_ok).lower()}",
            f"checked: {self.checked}",
        ]
        if self.hypothesis_failure is not None:
            clause, t, lhs, rhs = self.hypothesis_failure
            lines.append(f"hypothesis_failure: {clause} at {t}: {lhs!r} != {rhs!r}")
        if self.counterexample is None:
            lines.append("counterexample: none")
        else:
            t, fv, rv = self.counterexample
            lines.append(f"counterexample: {t} f={fv!r} rec={rv!r}")
        return "\n".join(lines)


def uniqueness_check(
    f: Callable[[ZbTerm], T], d: BiInvDescriptor[T], depth: int
) -> UniquenessReport:
    """Check ``f(0) = point`` and ``f(succ t) = forward(f t)`` for every term up
    to ``depth``; if both hold, compare ``f`` with ``rec_zb(d)`` on the same terms.

    The first failure in enumeration order is reported. A counterexample is
    reported, not raised, even when ``d``'s inverse laws are broken.
    """
    terms = list(enumerate_terms(depth))
    f0 = f(ZB_ZERO)
    if not d.eq(f0, d.point):
        return UniquenessReport(False, 1, hypothesis_failure=("point", ZB_ZERO, f0, d.point))
    for n, t in enumerate(terms, 1):
        lhs = f(succ(t))
        rhs = d.forward(f(t))
        if not d.eq(lhs, rhs):
            return UniquenessReport(False, n, hypothesis_failure=("succ", t, lhs, rhs))
    r = rec_zb(d)
    for n, t in enumerate(terms, 1):
        fv, rv = f(t), r(t)
        if not d.eq(fv, rv):
            return UniquenessReport(True, n, counterexample=(t, fv, rv))
    return UniquenessReport(True, len(terms))


@dataclass(frozen=True)
class InductionReport:
    ok: bool
    checked: int
    failure: str | None = None
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


def bounded_induction(
    P: Callable[[ZbTerm], bool],
    depth: int,
    nf: Callable[[ZbTerm], Any] = _nf,
) -> InductionReport:
    """Induction over ``0``, ``succ`` and ``pred1`` checked pointwise up to ``depth``.

    Preconditions: ``P`` is nf-invariant on the enumeration (failure
    ``"nf-invariance"`` with the two disagreeing terms as witness). Closure
    conditions are checked for every enumerated ``t`` with room for one more
    constructor. The ``pred2`` case is not assumed: it is discharged by checking
    ``nf(pred1 t) = nf(pred2 t)``, after which nf-invariance carries ``P`` over.
    Finally ``P`` is confirmed on every enumerated term.
    """
    terms = list(enumerate_terms(depth))

    representative = {}
    for t in terms:
        key = nf(t)
        first = representative.setdefault(key, t)
        if P(first) != P(t):
            return InductionReport(False, len(terms), "nf-invariance", (first, t))

    if not P(ZB_ZERO):
        return InductionReport(False, len(terms), "zero", (ZB_ZERO,))
    for t in terms:
        if t.depth >= depth or not P(t):
            continue
        if not P(succ(t)):
            return InductionReport(False, len(terms), "succ", (t,))
        if not P(pred1(t)):
            return InductionReport(False, len(terms), "pred1", (t,))
        if nf(pred1(t)) != nf(pred2(t)):
            return InductionReport(False, len(terms), "pred2", (t,))

    for t in terms:
        if not P(t):
            return InductionReport(False, len(terms), "conclusion", (t,))
    return InductionReport(True, len(terms))
