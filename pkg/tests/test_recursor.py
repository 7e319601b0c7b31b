import itertools

from hypothesis import given
from hypothesis import strategies as st

from zterms.normalizer import embed, nf, pred_w, succ_w
from zterms.recursor import (
    BiInvDescriptor,
    bounded_induction,
    rec_zb,
    uniqueness_check,
    zb_modulo_nf_descriptor,
    zw_descriptor,
)
from zterms.terms import ZB_ZERO, ZW_ZERO, ZbTerm, parse_zb, pred1, pred2, strpos, succ, zw_to_int

zb_terms = st.lists(st.sampled_from(ZbTerm.CONSTRUCTORS), max_size=30).map(
    lambda ops: ZbTerm(tuple(ops))
)


def mod3():
    return BiInvDescriptor(0, lambda x: (x + 1) % 3, lambda x: (x - 1) % 3, lambda x: (x - 1) % 3)


def test_rec_zb_examples():
    r = rec_zb(zw_descriptor())
    assert r(ZB_ZERO) == ZW_ZERO
    assert r(succ(pred1(ZB_ZERO))) == ZW_ZERO
    assert rec_zb(mod3())(parse_zb("succ(succ(succ(0)))")) == 0


@given(zb_terms)
def test_rec_zb_computation_rules(t):
    d = BiInvDescriptor(
        (), lambda x: x + ("s",), lambda x: x + ("g",), lambda x: x + ("h",)
    )
    r = rec_zb(d)
    assert r(ZB_ZERO) == ()
    assert r(succ(t)) == d.forward(r(t))
    assert r(pred1(t)) == d.left_inverse(r(t))
    assert r(pred2(t)) == d.right_inverse(r(t))


def test_rec_zb_is_nf_on_zw():
    r = rec_zb(zw_descriptor())
    for t in itertools.islice(_terms(6), 2000):
        assert r(t) == nf(t)


def _terms(depth):
    from zterms.terms import enumerate_terms
    return enumerate_terms(depth)


def test_uniqueness_examples():
    report = uniqueness_check(nf, zw_descriptor(), 8)
    assert report.hypotheses_ok and report.counterexample is None
    assert report.checked == sum(3**d for d in range(9))

    report = uniqueness_check(lambda t: embed(nf(t)), zb_modulo_nf_descriptor(), 8)
    assert report.ok

    report = uniqueness_check(lambda t: ZW_ZERO, zw_descriptor(), 8)
    assert not report.hypotheses_ok
    clause, t, lhs, rhs = report.hypothesis_failure
    assert (clause, t, lhs, rhs) == ("succ", ZB_ZERO, ZW_ZERO, strpos(0))
    assert report.counterexample is None


def test_uniqueness_point_failure():
    report = uniqueness_check(lambda t: succ_w(nf(t)), zw_descriptor(), 4)
    assert not report.hypotheses_ok
    assert report.hypothesis_failure[0] == "point"


def test_wrong_left_inverse_is_reported_not_raised():
    broken = BiInvDescriptor(ZW_ZERO, succ_w, succ_w, pred_w)
    assert broken.inverse_law_violations([ZW_ZERO])
    report = uniqueness_check(nf, broken, 3)
    assert report.hypotheses_ok
    t, fv, rv = report.counterexample
    assert t == pred1(ZB_ZERO)
    assert fv != rv
    assert "counterexample: pred1(0)" in str(report)


def test_report_text():
    text = str(uniqueness_check(nf, zw_descriptor(), 2))
    assert text.splitlines() == ["hypotheses_ok: true", "checked: 13", "counterexample: none"]


def finite_descriptors(max_size):
    """Every (point, permutation, left, right) on carriers 1..max_size whose
    inverse laws hold on the whole carrier; inverses found by brute force."""
    for n in range(1, max_size + 1):
        elems = range(n)
        maps = list(itertools.product(elems, repeat=n))
        for fwd in itertools.permutations(elems):
            lefts = [g for g in maps if all(g[fwd[x]] == x for x in elems)]
            rights = [h for h in maps if all(fwd[h[x]] == x for x in elems)]
            for point, g, h in itertools.product(elems, lefts, rights):
                yield n, BiInvDescriptor(
                    point, fwd.__getitem__, g.__getitem__, h.__getitem__, name=f"{fwd}"
                )


def test_finite_inverses_are_unique():
    found = list(finite_descriptors(4))
    assert len(found) == sum(n * len(list(itertools.permutations(range(n)))) for n in range(1, 5))


def test_uniqueness_shadow_on_finite_carriers():
    descriptors = list(finite_descriptors(4))
    for n, d in descriptors:
        others = [e for m, e in descriptors if m == n and e.point == d.point and e.name == d.name]
        for e in others:
            report = uniqueness_check(rec_zb(e), d, 5)
            assert report.ok, (d.name, str(report))

        # a map built without the recursor: iterate forward/back by the signed count
        inverse = {d.forward(x): x for x in range(n)}

        def by_count(t, d=d, inverse=inverse):
            x = d.point
            k = sum(1 if op == "succ" else -1 for op in t.ops)
            for _ in range(abs(k)):
                x = d.forward(x) if k > 0 else inverse[x]
            return x

        assert uniqueness_check(by_count, d, 5).ok


def test_bounded_induction_examples():
    assert bounded_induction(lambda t: nf(t) == nf(embed(nf(t))), 8)
    assert bounded_induction(lambda t: True, 8)
    report = bounded_induction(lambda t: "pred2" not in t.ops, 3)
    assert not report
    assert report.failure == "nf-invariance"
    assert report.witness == (pred1(ZB_ZERO), pred2(ZB_ZERO))


def test_bounded_induction_closure_failures():
    report = bounded_induction(lambda t: zw_to_int(nf(t)) >= 0, 4)
    assert (report.failure, report.witness) == ("pred1", (ZB_ZERO,))
    report = bounded_induction(lambda t: zw_to_int(nf(t)) <= 0, 4)
    assert (report.failure, report.witness) == ("succ", (ZB_ZERO,))
    report = bounded_induction(lambda t: zw_to_int(nf(t)) != 0, 4)
    assert report.failure == "zero"
