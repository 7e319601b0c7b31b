"""Successor/predecessor on Z_w, the normalisation fold and the sec/ret rewrites.

``nf`` is a direct structural fold. The sec/ret rules are left-to-right
rewrites that strictly shrink a term, but they are not enough on their own to
reach canonical representatives: ``succ(pred1(0))`` has no redex.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from .terms import (
    NAT_MAX,
    NatOverflowError,
    ZB_ZERO,
    ZW_ZERO,
    ZbTerm,
    ZhTerm,
    ZwTerm,
    parse_zb,
    parse_zh,
    parse_int,
    print_term,
    int_to_zw,
    strneg,
    strpos,
    zw_to_int,
)


# Small values are interned; folds over long spines then allocate nothing.
_CACHE = 4096
_POS = [strpos(n) for n in range(_CACHE)]
_NEG = [strneg(n) for n in range(_CACHE)]
_mk = ZwTerm._unchecked


def _pos(n: int) -> ZwTerm:
    return _POS[n] if n < _CACHE else _mk("strpos", n)


def _neg(n: int) -> ZwTerm:
    return _NEG[n] if n < _CACHE else _mk("strneg", n)


def succ_w(z: ZwTerm) -> ZwTerm:
    tag = z.tag
    if tag == "zero":
        return _POS[0]
    if tag == "strpos":
        if z.arg == NAT_MAX:
            raise NatOverflowError("succ_w(strpos(NAT_MAX))")
        return _pos(z.arg + 1)
    return ZW_ZERO if z.arg == 0 else _neg(z.arg - 1)


def pred_w(z: ZwTerm) -> ZwTerm:
    tag = z.tag
    if tag == "zero":
        return _NEG[0]
    if tag == "strneg":
        if z.arg == NAT_MAX:
            raise NatOverflowError("pred_w(strneg(NAT_MAX))")
        return _neg(z.arg + 1)
    return ZW_ZERO if z.arg == 0 else _pos(z.arg - 1)


_ZW_STEP = {"succ": succ_w, "pred1": pred_w, "pred2": pred_w, "pred": pred_w}


def nf(t: ZbTerm) -> ZwTerm:
    step = _ZW_STEP
    z = ZW_ZERO
    for op in reversed(t.ops):
        z = step[op](z)
    return z


def nf_zh(t: ZhTerm) -> ZwTerm:
    """The same fold for Z_h, with ``pred`` read as pred_w."""
    return nf(t)


def embed(z: ZwTerm) -> ZbTerm:
    if z.tag == "zero":
        return ZB_ZERO
    op = "succ" if z.tag == "strpos" else "pred1"
    return ZbTerm((op,) * (z.arg + 1))


def embed_zh(z: ZwTerm) -> ZhTerm:
    if z.tag == "zero":
        return ZhTerm()
    op = "succ" if z.tag == "strpos" else "pred"
    return ZhTerm((op,) * (z.arg + 1))


# Each rule rewrites the two-constructor pattern (outer, inner) applied to x
# into the replacement spine applied to x.
RULES: dict[type, dict[str, tuple[tuple[str, str], tuple[str, ...]]]] = {
    ZbTerm: {
        "sec": (("pred1", "succ"), ()),
        "ret": (("succ", "pred2"), ()),
    },
    ZhTerm: {
        "sec": (("pred", "succ"), ()),
        "ret": (("succ", "pred"), ()),
    },
}

INNERMOST = "innermost-leftmost"


@dataclass(frozen=True)
class RewriteStep:
    position: tuple[int, ...]
    rule: str
    before: ZbTerm
    after: ZbTerm

    def to_dict(self) -> dict:
        return {
            "position": list(self.position),
            "rule": self.rule,
            "before": print_term(self.before),
            "after": print_term(self.after),
        }


@dataclass(frozen=True)
class NormalizationTrace:
    start: ZbTerm
    steps: tuple[RewriteStep, ...]
    result: ZwTerm
    normal_term: ZbTerm = field(default=None, compare=False)

    def __len__(self):
        return len(self.steps)

    def to_dict(self) -> dict:
        return {
            "start": print_term(self.start),
            "steps": [s.to_dict() for s in self.steps],
            "result": zw_to_int(self.result),
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    def to_lines(self) -> str:
        out = [f"start: {print_term(self.start)}"]
        for s in self.steps:
            path = ".".join(map(str, s.position)) or "-"
            out.append(f"step: {path} {s.rule} {print_term(s.before)} => {print_term(s.after)}")
        out.append(f"result: {zw_to_int(self.result)}")
        return "\n".join(out)

    @classmethod
    def from_dict(cls, data: dict, term_cls=ZbTerm) -> "NormalizationTrace":
        parse = parse_zb if term_cls is ZbTerm else parse_zh
        steps = tuple(
            RewriteStep(tuple(s["position"]), s["rule"], parse(s["before"]), parse(s["after"]))
            for s in data["steps"]
        )
        start = parse(data["start"])
        normal = steps[-1].after if steps else start
        return cls(start, steps, int_to_zw(int(data["result"])), normal)

    @classmethod
    def from_json(cls, text: str, term_cls=ZbTerm) -> "NormalizationTrace":
        return cls.from_dict(json.loads(text), term_cls)

    @classmethod
    def from_lines(cls, text: str, term_cls=ZbTerm) -> "NormalizationTrace":
        data = {"steps": []}
        for line in text.splitlines():
            if not line.strip():
                continue
            key, _, rest = line.partition(":")
            rest = rest.strip()
            if key == "start":
                data["start"] = rest
            elif key == "result":
                data["result"] = parse_int(rest)
            elif key == "step":
                path, rule, terms = rest.split(" ", 2)
                before, after = terms.split(" => ")
                position = [] if path == "-" else [int(i) for i in path.split(".")]
                data["steps"].append(
                    {"position": position, "rule": rule, "before": before, "after": after}
                )
            else:
                raise ValueError(f"unknown trace record {key!r}")
        return cls.from_dict(data, term_cls)


def redexes(t) -> list[tuple[int, str]]:
    """(index, rule) for every sec/ret redex; index counts constructors from the root."""
    rules = RULES[type(t)]
    found = []
    ops = t.ops
    for i in range(len(ops) - 1):
        pair = (ops[i], ops[i + 1])
        for name, (pattern, _) in rules.items():
            if pair == pattern:
                found.append((i, name))
    return found


def apply_rule(t, index: int, rule: str):
    pattern, replacement = RULES[type(t)][rule]
    if t.ops[index:index + 2] != pattern:
        raise ValueError(f"{rule} does not apply at {index} in {t}")
    return type(t)(t.ops[:index] + replacement + t.ops[index + 2:])


def _as_rng(strategy):
    if strategy == INNERMOST or strategy is None:
        return None
    if isinstance(strategy, random.Random):
        return strategy
    if isinstance(strategy, int):
        return random.Random(strategy)
    raise ValueError(f"unknown strategy {strategy!r}")


def _choose(found, rng):
    if rng is None:
        # innermost: the deepest redex; a spine has no left/right ambiguity
        return found[-1]
    return rng.choice(found)


def rewrite_step(t, strategy=INNERMOST) -> RewriteStep | None:
    """One sec/ret step chosen by ``strategy``, or None when ``t`` is rewrite-normal.

    ``strategy`` is ``INNERMOST`` or an integer seed / ``random.Random`` for a
    uniformly random redex.
    """
    found = redexes(t)
    if not found:
        return None
    index, rule = _choose(found, _as_rng(strategy))
    return RewriteStep((0,) * index, rule, t, apply_rule(t, index, rule))


def normalize_trace(t, strategy=INNERMOST) -> NormalizationTrace:
    rng = _as_rng(strategy)
    steps = []
    current = t
    while True:
        found = redexes(current)
        if not found:
            break
        if len(steps) > t.size:
            raise RuntimeError(f"rewriting {t} does not terminate; rules do not shrink terms")
        index, rule = _choose(found, rng)
        after = apply_rule(current, index, rule)
        steps.append(RewriteStep((0,) * index, rule, current, after))
        current = after
    fold = nf if isinstance(current, ZbTerm) else nf_zh
    return NormalizationTrace(t, tuple(steps), fold(current), current)
