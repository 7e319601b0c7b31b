"""The invariant suites behind ``zterms selftest``.

Each suite is a function returning a one-line summary and raising
:class:`SuiteFailure` on the first violated property. :func:`run_suites`
times them and never lets an exception escape, so a broken rule set shows up
as failed suites rather than a crash.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable

from . import normalizer as N
from .arithmetic import add, add_iterated, add_zb, mul, neg
from .freegroup import concat, f1_to_zw, identity, invert, reduce, zw_to_f1
from .loopspace import compose_loops, el_transport, loop_of, reduce_loop, winding
from .recursor import uniqueness_check, zb_modulo_nf_descriptor, zw_descriptor
from .sigcheck import (
    MagmaAlgebra,
    bijective_endo_algebras,
    check_biinv_extension,
    check_unit_extension,
)
from .terms import (
    ZW_ZERO,
    FreeWord,
    Letter,
    LoopWord,
    ZbTerm,
    enumerate_terms,
    int_to_zw,
    parse_zb,
    pred1,
    pred2,
    print_loop,
    print_term,
    succ,
    zw_to_int,
)


class SuiteFailure(AssertionError):
    pass


def check(cond: bool, message: str):
    if not cond:
        raise SuiteFailure(message)


@dataclass(frozen=True)
class SuiteResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d} {self.name} ({self.seconds:.2f}s): {self.detail}"


def suite_roundtrip_a(seed: int = 0) -> str:
    for k in range(-1000, 1001):
        z = int_to_zw(k)
        check(N.nf(N.embed(z)) == z, f"nf(embed({k})) = {N.nf(N.embed(z))!r}")
    return "nf(embed(z)) = z on [-1000, 1000]"


def suite_roundtrip_b(seed: int = 0) -> str:
    n = 0
    for t in enumerate_terms(10):
        v = N.nf(t)
        check(N.nf(N.embed(v)) == v, f"nf(embed(nf({t}))) != nf({t})")
        check(zw_to_int(v) == _count(t), f"nf({t}) disagrees with constructor count")
        n += 1
    return f"{n} terms of depth <= 10"


def _count(t: ZbTerm) -> int:
    return t.ops.count("succ") - t.ops.count("pred1") - t.ops.count("pred2")


def suite_uniqueness(seed: int = 0) -> str:
    r1 = uniqueness_check(N.nf, zw_descriptor(), 8)
    check(r1.ok, f"f = nf:\n{r1}")
    r2 = uniqueness_check(lambda t: N.embed(N.nf(t)), zb_modulo_nf_descriptor(), 8)
    check(r2.ok, f"f = embed . nf:\n{r2}")
    r3 = uniqueness_check(lambda t: ZW_ZERO, zw_descriptor(), 8)
    check(not r3.hypotheses_ok, "constant map passed the hypotheses")
    check(r3.hypothesis_failure[1] == ZbTerm(), "constant map should fail at t = 0")
    return f"nf and embed.nf agree with rec on {r1.checked} terms; constant map rejected"


def suite_pred_identification(seed: int = 0) -> str:
    n = 0
    for t in enumerate_terms(10):
        check(N.nf(pred1(t)) == N.nf(pred2(t)), f"nf(pred1 t) != nf(pred2 t) at {t}")
        check(N.nf(succ(t)) == N.succ_w(N.nf(t)), f"nf(succ t) != succ_w(nf t) at {t}")
        check(N.nf(pred1(t)) == N.pred_w(N.nf(t)), f"nf(pred1 t) != pred_w(nf t) at {t}")
        n += 1
    return f"{n} terms of depth <= 10"


def random_zb(rng: random.Random, max_size: int = 40) -> ZbTerm:
    depth = rng.randrange(max_size)
    return ZbTerm(tuple(rng.choice(ZbTerm.CONSTRUCTORS) for _ in range(depth)))


_REDEX_FIXTURES = [
    ("pred1(succ(0))", [(0, "sec")], "0"),
    ("succ(pred2(succ(0)))", [(0, "ret")], "succ(0)"),
    ("succ(pred1(0))", [], None),
    ("pred2(succ(0))", [], None),
    ("pred1(succ(pred2(0)))", [(0, "sec"), (1, "ret")], "pred1(0)"),
]


def suite_confluence(seed: int = 0) -> str:
    for text, expected, innermost in _REDEX_FIXTURES:
        t = parse_zb(text)
        check(N.redexes(t) == expected, f"redexes({text}) = {N.redexes(t)}, expected {expected}")
        step = N.rewrite_step(t)
        got = None if step is None else print_term(step.after)
        check(got == innermost, f"innermost step on {text} gave {got}, expected {innermost}")
    rng = random.Random(seed)
    total_steps = 0
    for _ in range(1000):
        t = random_zb(rng)
        expected = N.nf(t)
        results = set()
        for _ in range(10):
            trace = N.normalize_trace(t, random.Random(rng.getrandbits(64)))
            check(len(trace) <= t.size // 2, f"trace of {t} has {len(trace)} steps")
            current = t
            for step in trace.steps:
                check(step.before == current, f"trace of {t} does not chain")
                check(
                    N.apply_rule(step.before, len(step.position), step.rule) == step.after,
                    f"step {step} is not an application of {step.rule}",
                )
                check(N.nf(step.after) == N.nf(step.before), f"{step.rule} changed nf at {step.before}")
                current = step.after
            check(N.redexes(current) == [], f"trace of {t} stopped at a redex")
            check(N.nf(current) == trace.result, "trace result is not nf of the normal term")
            results.add(trace.result)
            total_steps += len(trace)
        check(results == {expected}, f"strategies disagree on {t}: {results}")
    return f"1000 terms x 10 strategies, {total_steps} rewrite steps"


def suite_ring_laws(seed: int = 0) -> str:
    rng = random.Random(seed)
    values = range(-100, 101)
    zs = {k: int_to_zw(k) for k in values}
    one = int_to_zw(1)
    for k, a in zs.items():
        check(add(a, ZW_ZERO) == a and add(ZW_ZERO, a) == a, f"additive unit at {k}")
        check(mul(a, one) == a and mul(one, a) == a, f"multiplicative unit at {k}")
        check(add(a, neg(a)) == ZW_ZERO, f"additive inverse at {k}")
        check(zw_to_int(neg(a)) == -k, f"neg at {k}")
        check(neg(neg(a)) == a, f"neg involution at {k}")
    for (i, a), (j, b) in itertools.product(zs.items(), repeat=2):
        s, p = add(a, b), mul(a, b)
        check(s == add(b, a), f"add commutativity at {i}, {j}")
        check(p == mul(b, a), f"mul commutativity at {i}, {j}")
        check(zw_to_int(s) == i + j, f"add disagrees with integers at {i}, {j}")
        check(zw_to_int(p) == i * j, f"mul disagrees with integers at {i}, {j}")
        check(add_iterated(a, b) == s, f"iterated add disagrees at {i}, {j}")
    for _ in range(10**5):
        i, j, k = (rng.randint(-100, 100) for _ in range(3))
        a, b, c = zs[i], zs[j], zs[k]
        check(add(add(a, b), c) == add(a, add(b, c)), f"add associativity at {i}, {j}, {k}")
        check(mul(mul(a, b), c) == mul(a, mul(b, c)), f"mul associativity at {i}, {j}, {k}")
        check(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)), f"distributivity at {i}, {j}, {k}")
    terms = list(enumerate_terms(6))
    nfs = [N.nf(t) for t in terms]
    for a, na in zip(terms, nfs):
        check(add_zb(a, ZbTerm()) == a, f"add_zb({a}, 0) != {a}")
        for b, nb in zip(terms, nfs):
            check(N.nf(add_zb(a, b)) == add(na, nb), f"nf(add_zb({a}, {b})) != add")
    return f"pairs on [-100,100]^2, 10^5 triples, add_zb on {len(terms)}^2 pairs"


def _words(symbols, max_len):
    letters = [Letter(s, e) for s in symbols for e in (1, -1)]
    for n in range(max_len + 1):
        for ls in itertools.product(letters, repeat=n):
            yield FreeWord(ls)


def brute_force_normal_forms(w: FreeWord) -> set[FreeWord]:
    """End points of every maximal sequence of single cancellations."""
    seen: dict[tuple, set] = {}

    def go(ls: tuple) -> set:
        if ls in seen:
            return seen[ls]
        out = set()
        for i in range(len(ls) - 1):
            x, y = ls[i], ls[i + 1]
            if x.symbol == y.symbol and x.sign != y.sign:
                out |= go(ls[:i] + ls[i + 2:])
        if not out:
            out = {FreeWord(ls)}
        seen[ls] = out
        return out

    return go(w.letters)


def suite_free_group(seed: int = 0) -> str:
    rng = random.Random(seed)
    n_words = 0
    for w in _words("ab", 6):
        forms = brute_force_normal_forms(w)
        check(forms == {reduce(w)}, f"reduce({w}) = {reduce(w)}, brute force {forms}")
        r = reduce(w)
        check(r.is_reduced() and reduce(r) == r, f"reduce({w}) not a fixed point")
        check((len(w) - len(r)) % 2 == 0, f"odd length change in {w}")
        n_words += 1
    n_triples = 0
    for symbols in ("a", "ab", "abc"):
        reduced = [w for w in _words(symbols, 5) if w.is_reduced()]
        for u in reduced:
            check(concat(identity(), u) == u and concat(u, identity()) == u, f"unit law at {u}")
            check(concat(u, invert(u)) == identity(), f"right inverse at {u}")
            check(concat(invert(u), u) == identity(), f"left inverse at {u}")
            for x, y in zip(u.letters, u.letters[1:]):
                check(x.symbol != y.symbol or x.sign == y.sign, f"{u} does not alternate")
        by_len: dict[int, list] = {}
        for u in reduced:
            by_len.setdefault(len(u), []).append(u)
        triples = [
            (u, v, w)
            for lu, lv, lw in itertools.product(by_len, repeat=3)
            if lu + lv + lw <= 5
            for u in by_len[lu] for v in by_len[lv] for w in by_len[lw]
        ]
        triples += [tuple(rng.choice(reduced) for _ in range(3)) for _ in range(20000)]
        for u, v, w in triples:
            check(concat(concat(u, v), w) == concat(u, concat(v, w)), f"associativity at {u}, {v}, {w}")
        n_triples += len(triples)
    ones = list(_words("a", 12))
    reduced_ones = [w for w in ones if w.is_reduced()]
    for w in ones:
        check(zw_to_int(f1_to_zw(reduce(w))) == sum(x.sign for x in w), f"F(1) count at {w}")
    for u in reduced_ones:
        check(zw_to_f1(f1_to_zw(u)) == u, f"zw_to_f1 not inverse at {u}")
        for v in reduced_ones:
            check(
                f1_to_zw(concat(u, v)) == add(f1_to_zw(u), f1_to_zw(v)),
                f"F(1) homomorphism at {u}, {v}",
            )
    return f"{n_words} words vs brute force, {n_triples} associativity triples, {len(ones)} F(1) words"


def _loops(max_len):
    for n in range(max_len + 1):
        for steps in itertools.product((1, -1), repeat=n):
            yield LoopWord(steps)


def _count_loop(w: LoopWord) -> int:
    s = print_loop(w)
    return s.count("q") - s.count("Q")


def suite_loop_space(seed: int = 0) -> str:
    short = list(_loops(8))
    wind = {u: winding(u) for u in short}
    for u in short:
        check(zw_to_int(wind[u]) == _count_loop(u), f"winding({u}) miscounted")
        for v in short:
            check(winding(compose_loops(u, v)) == add(wind[u], wind[v]), f"winding not additive at {u}, {v}")
    long = list(_loops(12))
    for w in long:
        check(el_transport(w)(ZW_ZERO) == winding(w), f"el_transport({w})(0) != winding")
        r = reduce_loop(w)
        check(winding(r) == winding(w), f"reduce_loop({w}) changed winding")
        check(reduce_loop(r) == r and r.is_reduced(), f"reduce_loop({w}) not idempotent")
        fg = reduce(FreeWord(tuple(Letter("q", s) for s in w.steps)))
        check(tuple(x.sign for x in fg.letters) == r.steps, f"reduce_loop({w}) disagrees with free group")
    identity_map = el_transport(LoopWord((1, -1)))
    for k in range(-100, 101):
        check(identity_map(int_to_zw(k)) == int_to_zw(k), f"transport along qQ moved {k}")
    reduced = [w for w in long if w.is_reduced()]
    images = [zw_to_int(winding(w)) for w in reduced]
    check(sorted(images) == list(range(-12, 13)), "winding is not a bijection on reduced loops")
    for k in range(-1000, 1001):
        check(zw_to_int(winding(loop_of(int_to_zw(k)))) == k, f"loop_of({k}) has wrong winding")
    return f"{len(short)}^2 compositions, {len(long)} loops of length <= 12"


def suite_sigcheck_positive(seed: int = 0) -> str:
    algebras = list(bijective_endo_algebras(4))
    n_morphisms = 0
    for T, T2 in itertools.product(algebras, repeat=2):
        report = check_biinv_extension(T, T2)
        check(report.bijective, f"forgetful map not bijective for {T.op} -> {T2.op}:\n{report}")
        check(report.s_prime_morphisms <= report.s_morphisms, "more S' than S morphisms")
        n_morphisms += report.s_morphisms
    return f"{len(algebras)}^2 pairs, {n_morphisms} endomap-preserving maps, all lift"


def suite_sigcheck_negative(seed: int = 0) -> str:
    T = MagmaAlgebra.from_function(2, max, unit=0)
    report = check_unit_extension(T, T)
    check(len(report.non_liftable) >= 1, "no non-liftable morphism found")
    check(not report.bijective, "unit extension reported bijective")
    check((1, 1) in report.non_liftable, "constant 1 should not lift")
    return f"non-liftable: {', '.join(map(str, report.non_liftable))}"


SUITES: list[tuple[int, str, Callable[[int], str]]] = [
    (1, "roundtrip nf . embed", suite_roundtrip_a),
    (2, "roundtrip embed . nf", suite_roundtrip_b),
    (3, "uniqueness oracle", suite_uniqueness),
    (4, "pred1/pred2 identification", suite_pred_identification),
    (5, "confluence harness", suite_confluence),
    (6, "ring laws", suite_ring_laws),
    (7, "free group", suite_free_group),
    (8, "loop space", suite_loop_space),
    (9, "sigcheck bi-invertible", suite_sigcheck_positive),
    (10, "sigcheck unit counterexample", suite_sigcheck_negative),
]


def run_suite(number: int, seed: int = 0) -> SuiteResult:
    _, name, fn = SUITES[number - 1]
    start = time.perf_counter()
    try:
        detail = fn(seed)
        passed = True
    except Exception as exc:  # a mutated rule set may fail in any way
        detail = f"{type(exc).__name__}: {exc}"
        passed = False
    return SuiteResult(number, name, passed, detail, time.perf_counter() - start)


def run_suites(numbers=None, seed: int = 0) -> list[SuiteResult]:
    numbers = numbers or [n for n, _, _ in SUITES]
    return [run_suite(n, seed) for n in numbers]
