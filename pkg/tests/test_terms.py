import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zterms.terms import (
    NAT_MAX,
    ZB_ZERO,
    ZH_ZERO,
    ZW_ZERO,
    Alphabet,
    FreeWord,
    LoopWord,
    NatOverflowError,
    TermSyntaxError,
    ZbTerm,
    ZhTerm,
    ZqPair,
    ZwTerm,
    canonicalize_zq,
    enumerate_terms,
    int_to_zw,
    parse_int,
    parse_loop,
    parse_word,
    parse_zb,
    parse_zh,
    parse_zq,
    parse_zw,
    pred1,
    pred2,
    print_loop,
    print_word,
    print_zb,
    print_zh,
    print_zq,
    strneg,
    strpos,
    succ,
    word,
    zq_equivalent,
    zw_to_int,
)

zb_terms = st.lists(st.sampled_from(ZbTerm.CONSTRUCTORS), max_size=30).map(
    lambda ops: ZbTerm(tuple(ops))
)
zh_terms = st.lists(st.sampled_from(ZhTerm.CONSTRUCTORS), max_size=30).map(
    lambda ops: ZhTerm(tuple(ops))
)


def test_parse_zb_examples():
    assert parse_zb("succ(pred1(0))") == succ(pred1(ZB_ZERO))
    assert parse_zb("0") == ZB_ZERO
    with pytest.raises(TermSyntaxError) as exc:
        parse_zb("succ succ")
    assert exc.value.position == 5


@pytest.mark.parametrize(
    "text, position",
    [("", 0), ("succ(0", 6), ("succ(0))", 7), ("pred(0)", 0), ("succ(1)", 5), ("0 0", 2)],
)
def test_parse_zb_errors_carry_position(text, position):
    with pytest.raises(TermSyntaxError) as exc:
        parse_zb(text)
    assert exc.value.position == position


def test_print_zb_examples():
    assert print_zb(succ(ZB_ZERO)) == "succ(0)"
    assert print_zb(pred2(succ(ZB_ZERO))) == "pred2(succ(0))"
    assert print_zb(ZB_ZERO) == "0"


def test_whitespace_is_insignificant():
    assert parse_zb("  succ ( pred2( 0 ) )  ") == parse_zb("succ(pred2(0))")
    assert parse_zh("pred (succ(0))") == ZhTerm(("pred", "succ"))


def test_zb_and_zh_are_distinct_types():
    assert ZB_ZERO != ZH_ZERO
    with pytest.raises(ValueError):
        ZbTerm(("pred",))
    with pytest.raises(ValueError):
        pred1(ZH_ZERO)


def test_deep_terms_do_not_recurse():
    t = ZbTerm(("succ",) * 50000)
    assert parse_zb(print_zb(t)) == t
    assert t.depth == 50000 and t.size == 50001


@given(zb_terms)
def test_zb_roundtrip(t):
    assert parse_zb(print_zb(t)) == t


@given(zh_terms)
def test_zh_roundtrip(t):
    assert parse_zh(print_zh(t)) == t


def test_enumeration_order():
    terms = list(enumerate_terms(2))
    assert len(terms) == 1 + 3 + 9
    assert [print_zb(t) for t in terms[:4]] == ["0", "succ(0)", "pred1(0)", "pred2(0)"]
    assert terms[4] == succ(succ(ZB_ZERO))
    assert terms[5] == succ(pred1(ZB_ZERO))
    assert sum(1 for _ in enumerate_terms(10)) == sum(3**d for d in range(11))


def test_subterm_and_arg(zb):
    t = zb("succ", "pred1", "pred2")
    assert t.head == "succ"
    assert t.arg == zb("pred1", "pred2")
    assert t.subterm((0, 0)) == zb("pred2")
    assert ZB_ZERO.head == "zero"
    with pytest.raises(IndexError):
        t.subterm((1,))


def test_zw_to_int_examples():
    assert zw_to_int(ZW_ZERO) == 0
    assert zw_to_int(strpos(0)) == 1
    assert zw_to_int(strneg(2)) == -3


def test_int_to_zw_examples():
    assert int_to_zw(0) == ZW_ZERO
    assert int_to_zw(1) == strpos(0)
    assert int_to_zw(-1) == strneg(0)


def test_zw_bijection_on_range():
    seen = set()
    for k in range(-2000, 2001):
        z = int_to_zw(k)
        assert zw_to_int(z) == k
        seen.add(z)
    assert len(seen) == 4001


def test_nat_bound():
    assert zw_to_int(int_to_zw(NAT_MAX + 1)) == NAT_MAX + 1
    assert zw_to_int(int_to_zw(-(NAT_MAX + 1))) == -(NAT_MAX + 1)
    with pytest.raises(NatOverflowError):
        int_to_zw(NAT_MAX + 2)
    with pytest.raises(NatOverflowError):
        int_to_zw(-(NAT_MAX + 2))
    with pytest.raises(NatOverflowError):
        strpos(-1)
    with pytest.raises(ValueError):
        ZwTerm("zero", 3)


def test_zw_surface():
    assert parse_zw(" -17 ") == strneg(16)
    assert parse_zw("+4") == strpos(3)
    assert parse_int("- 5") == -5
    assert str(strneg(2)) == "-3"
    assert repr(strneg(2)) == "strneg(2)"
    with pytest.raises(TermSyntaxError):
        parse_zw("3.0")


def test_canonicalize_zq_examples():
    # oracle: the pair relation x+ + y- = y+ + x- by direct arithmetic
    assert 3 + 0 == 2 + 1
    assert canonicalize_zq(ZqPair(3, 1)) == ZqPair(2, 0)
    assert canonicalize_zq(ZqPair(0, 0)) == ZqPair(0, 0)
    assert 1 + 3 == 0 + 4
    assert canonicalize_zq(ZqPair(1, 4)) == ZqPair(0, 3)


def test_canonicalize_zq_characterises_the_relation():
    pairs = [ZqPair(a, b) for a in range(51) for b in range(51)]
    canon = {p: canonicalize_zq(p) for p in pairs}
    for p in pairs:
        c = canon[p]
        assert c.is_canonical()
        assert canonicalize_zq(c) == c
        assert zq_equivalent(p, c)
    # equal canonical forms iff related; check a dense slice of all pairs of pairs
    for p, q in itertools.product(pairs[::7], pairs):
        assert (canon[p] == canon[q]) == (p.pos + q.neg == q.pos + p.neg)


@given(st.integers(0, 10**6), st.integers(0, 10**6))
def test_zq_surface_roundtrip(a, b):
    p = ZqPair(a, b)
    assert parse_zq(print_zq(p)) == p
    assert canonicalize_zq(p).pos - canonicalize_zq(p).neg == a - b


def test_word_parsing():
    w = parse_word("a b- a")
    assert w == word("a+", "b-", "a+")
    assert parse_word("") == FreeWord()
    assert parse_word("  ") == FreeWord()
    assert print_word(w) == "a b- a"
    assert parse_word("x1- yy") == word("x1-", "yy+")
    with pytest.raises(TermSyntaxError):
        parse_word("a + b")
    with pytest.raises(TermSyntaxError):
        parse_word("a c", Alphabet(("a", "b")))


def test_alphabet():
    a = Alphabet.parse("a b, c")
    assert a.symbols == ("a", "b", "c")
    assert len(a) == 3 and "b" in a and a.index("c") == 2
    with pytest.raises(ValueError):
        Alphabet(("a", "a"))


def test_word_reduced_predicate():
    assert word("a+", "b-", "a+").is_reduced()
    assert not word("a+", "a-").is_reduced()
    assert not word("b-", "b+").is_reduced()
    assert word("a+", "a+").is_reduced()


words = st.lists(
    st.tuples(st.sampled_from("abc"), st.sampled_from("+-")).map("".join), max_size=12
).map(lambda ts: word(*ts))


@given(words)
def test_word_roundtrip_preserves_reducedness(w):
    back = parse_word(print_word(w))
    assert back == w
    assert back.is_reduced() == w.is_reduced()


def test_loop_parsing():
    assert parse_loop("qqQq") == LoopWord((1, 1, -1, 1))
    assert parse_loop("") == LoopWord()
    assert parse_loop("q Q") == LoopWord((1, -1))
    with pytest.raises(TermSyntaxError):
        parse_loop("qx")
    assert LoopWord((1, 1)).is_reduced()
    assert not LoopWord((1, -1)).is_reduced()


@given(st.lists(st.sampled_from([1, -1]), max_size=20))
def test_loop_roundtrip(steps):
    w = LoopWord(tuple(steps))
    assert parse_loop(print_loop(w)) == w
    assert parse_loop(print_loop(w)).is_reduced() == w.is_reduced()
