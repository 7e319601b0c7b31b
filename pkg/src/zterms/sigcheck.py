"""Forgetful maps between morphism sets of small finite algebras.

Two signature extensions are covered. Unary algebras ``(T, s)`` extended by
bi-invertibility of ``s``: on a finite carrier that means ``s`` is a
permutation, and its left and right inverses are both ``s^-1``. Magmas
``(T, o)`` extended by a two-sided unit. Both extensions are propositional,
so a morphism of the extended signature is an operation-preserving map with
at most one extra piece of structure. The forgetful map is therefore always
injective, and it is a bijection exactly when every operation-preserving map
also preserves the extra structure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

MAX_CARRIER = 6


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteCarrier:
    size: int

    def __post_init__(self):
        if not 0 <= self.size <= MAX_CARRIER:
            raise PreconditionError(f"carrier size must be in [0, {MAX_CARRIER}]")

    @property
    def elements(self) -> range:
        return range(self.size)


@dataclass(frozen=True)
class EndoAlgebra:
    carrier: FiniteCarrier
    op: tuple[int, ...]

    def __post_init__(self):
        if isinstance(self.carrier, int):
            object.__setattr__(self, "carrier", FiniteCarrier(self.carrier))
        object.__setattr__(self, "op", tuple(self.op))
        n = self.carrier.size
        if len(self.op) != n or any(not 0 <= y < n for y in self.op):
            raise PreconditionError(f"op must be a total map on {n} elements")

    @property
    def size(self) -> int:
        return self.carrier.size

    def is_bijective(self) -> bool:
        return sorted(self.op) == list(range(self.size))

    def inverse(self) -> tuple[int, ...]:
        if not self.is_bijective():
            raise PreconditionError(f"op {self.op} is not a bijection")
        inv = [0] * self.size
        for x, y in enumerate(self.op):
            inv[y] = x
        return tuple(inv)


@dataclass(frozen=True)
class MagmaAlgebra:
    """A binary operation given as a row-major table: ``op(x, y) = table[x*n + y]``."""

    carrier: FiniteCarrier
    table: tuple[int, ...]
    unit: int | None = None

    def __post_init__(self):
        if isinstance(self.carrier, int):
            object.__setattr__(self, "carrier", FiniteCarrier(self.carrier))
        object.__setattr__(self, "table", tuple(self.table))
        n = self.carrier.size
        if len(self.table) != n * n or any(not 0 <= y < n for y in self.table):
            raise PreconditionError(f"table must have {n * n} entries in [0, {n})")
        if self.unit is not None:
            if not 0 <= self.unit < n:
                raise PreconditionError(f"unit {self.unit} is not an element")
            for x in range(n):
                if self.op(x, self.unit) != x or self.op(self.unit, x) != x:
                    raise PreconditionError(f"{self.unit} is not a two-sided unit")

    @property
    def size(self) -> int:
        return self.carrier.size

    def op(self, x: int, y: int) -> int:
        return self.table[x * self.carrier.size + y]

    @classmethod
    def from_function(cls, n: int, fn, unit=None) -> "MagmaAlgebra":
        return cls(FiniteCarrier(n), tuple(fn(x, y) for x in range(n) for y in range(n)), unit)


@dataclass(frozen=True)
class ForgetfulReport:
    s_morphisms: int
    s_prime_morphisms: int
    non_liftable: tuple[tuple[int, ...], ...] = field(default=())
    injective: bool = True

    @property
    def bijective(self) -> bool:
        return not self.non_liftable and self.injective

    def __str__(self):
        witnesses = ", ".join(map(_show_map, self.non_liftable)) or "none"
        return "\n".join(
            [
                f"s_morphisms: {self.s_morphisms}",
                f"s_prime_morphisms: {self.s_prime_morphisms}",
                f"non_liftable: {witnesses}",
                f"bijective: {str(self.bijective).lower()}",
            ]
        )


def _show_map(f: tuple[int, ...]) -> str:
    return "[" + " ".join(map(str, f)) + "]"


def all_maps(n: int, m: int):
    return itertools.product(range(m), repeat=n)


def enumerate_morphisms_endo(T: EndoAlgebra, T2: EndoAlgebra) -> list[tuple[int, ...]]:
    """All ``f`` with ``op2 . f = f . op``, in lexicographic order of their tables."""
    return [
        f for f in all_maps(T.size, T2.size)
        if all(T2.op[f[x]] == f[T.op[x]] for x in T.carrier.elements)
    ]


def enumerate_morphisms_magma(T: MagmaAlgebra, T2: MagmaAlgebra) -> list[tuple[int, ...]]:
    return [
        f for f in all_maps(T.size, T2.size)
        if all(
            f[T.op(x, y)] == T2.op(f[x], f[y])
            for x in T.carrier.elements
            for y in T.carrier.elements
        )
    ]


def _report(morphisms, lifts) -> ForgetfulReport:
    lifted = [(f, extra) for f in morphisms for extra in lifts(f)]
    underlying = [f for f, _ in lifted]
    liftable = set(underlying)
    return ForgetfulReport(
        s_morphisms=len(morphisms),
        s_prime_morphisms=len(lifted),
        non_liftable=tuple(f for f in morphisms if f not in liftable),
        injective=len(underlying) == len(liftable),
    )


def check_biinv_extension(T: EndoAlgebra, T2: EndoAlgebra) -> ForgetfulReport:
    """Does every map commuting with the endomaps also commute with their inverses?"""
    g, g2 = T.inverse(), T2.inverse()
    # left and right inverses of a permutation coincide with its inverse
    h, h2 = g, g2

    def lifts(f):
        ok = all(g2[f[x]] == f[g[x]] and h2[f[x]] == f[h[x]] for x in T.carrier.elements)
        return [(g, h, g2, h2)] if ok else []

    return _report(enumerate_morphisms_endo(T, T2), lifts)


def check_unit_extension(T: MagmaAlgebra, T2: MagmaAlgebra) -> ForgetfulReport:
    if T.unit is None or T2.unit is None:
        raise PreconditionError("both magmas need a unit")

    def lifts(f):
        return [(T.unit, T2.unit)] if f[T.unit] == T2.unit else []

    return _report(enumerate_morphisms_magma(T, T2), lifts)


def parse_algebra(text: str, binary: bool) -> EndoAlgebra | MagmaAlgebra:
    """Parse ``"<size>; <op table row-major>[; <unit>]"``, e.g. ``"2; 0 1 1 1; 0"``.

    Newlines may stand in for the semicolons.
    """
    parts = [p.strip() for p in text.replace("\n", ";").split(";")]
    parts = [p for p in parts if p]
    try:
        if len(parts) not in (2, 3):
            raise ValueError
        size = int(parts[0])
        table = tuple(int(x) for x in parts[1].replace(",", " ").split())
        unit = int(parts[2]) if len(parts) == 3 else None
    except ValueError:
        raise PreconditionError(f"malformed algebra {text!r}") from None
    if binary:
        return MagmaAlgebra(FiniteCarrier(size), table, unit)
    if unit is not None:
        raise PreconditionError("unary algebras take no unit")
    return EndoAlgebra(FiniteCarrier(size), table)


def format_algebra(A: EndoAlgebra | MagmaAlgebra) -> str:
    if isinstance(A, EndoAlgebra):
        return f"{A.size}; {' '.join(map(str, A.op))}"
    s = f"{A.size}; {' '.join(map(str, A.table))}"
    return s if A.unit is None else f"{s}; {A.unit}"


def bijective_endo_algebras(max_size: int):
    for n in range(1, max_size + 1):
        for perm in itertools.permutations(range(n)):
            yield EndoAlgebra(FiniteCarrier(n), perm)
