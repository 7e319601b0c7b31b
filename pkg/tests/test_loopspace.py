import itertools

from hypothesis import given
from hypothesis import strategies as st

from zterms.arithmetic import add
from zterms.freegroup import reduce
from zterms.loopspace import (
    compose_loops,
    el_transport,
    inverse_loop,
    loop_of,
    reduce_loop,
    winding,
)
from zterms.normalizer import succ_w
from zterms.recursor import BiInvDescriptor, uniqueness_check, zw_descriptor
from zterms.normalizer import nf, pred_w
from zterms.terms import (
    ZW_ZERO,
    FreeWord,
    Letter,
    LoopWord,
    int_to_zw,
    parse_loop,
    print_loop,
    strneg,
    strpos,
)

loops = st.lists(st.sampled_from([1, -1]), max_size=30).map(lambda s: LoopWord(tuple(s)))


def test_winding_examples():
    assert winding(parse_loop("")) == ZW_ZERO
    assert winding(parse_loop("qqQ")) == strpos(0)
    assert winding(parse_loop("QQ")) == strneg(1)


def test_compose_examples():
    v = parse_loop("qQq")
    assert compose_loops(LoopWord(), v) == v
    c = compose_loops(parse_loop("q"), parse_loop("Q"))
    assert print_loop(c) == "qQ" and winding(c) == ZW_ZERO
    u, v = parse_loop("qq"), parse_loop("Qqq")
    assert winding(compose_loops(u, v)) == add(winding(u), winding(v)) == strpos(2)


def test_reduce_loop_examples():
    assert reduce_loop(parse_loop("qQ")) == LoopWord()
    assert reduce_loop(parse_loop("qQq")) == parse_loop("q")
    assert reduce_loop(parse_loop("qqq")) == parse_loop("qqq")


def test_el_transport_examples():
    for k in range(-20, 21):
        assert el_transport(LoopWord())(int_to_zw(k)) == int_to_zw(k)
    assert el_transport(parse_loop("q"))(ZW_ZERO) == strpos(0)
    back_and_forth = el_transport(parse_loop("qQ"))
    for k in range(-100, 101):
        assert back_and_forth(int_to_zw(k)) == int_to_zw(k)


def test_winding_homomorphism_length_6():
    short = [LoopWord(s) for n in range(7) for s in itertools.product((1, -1), repeat=n)]
    for u, v in itertools.product(short, repeat=2):
        assert winding(compose_loops(u, v)) == add(winding(u), winding(v))


@given(loops)
def test_reduce_loop_properties(w):
    r = reduce_loop(w)
    assert r.is_reduced()
    assert winding(r) == winding(w)
    assert reduce_loop(r) == r
    fg = reduce(FreeWord(tuple(Letter("q", s) for s in w.steps)))
    assert tuple(x.sign for x in fg.letters) == r.steps


@given(loops)
def test_transport_at_base_point_is_winding(w):
    assert el_transport(w)(ZW_ZERO) == winding(w)
    assert el_transport(compose_loops(w, inverse_loop(w)))(strpos(7)) == strpos(7)


def test_reduced_loops_biject_with_integers():
    for k in range(-500, 501):
        z = int_to_zw(k)
        assert loop_of(z).is_reduced()
        assert winding(loop_of(z)) == z
    assert loop_of(ZW_ZERO) == LoopWord()


def test_initiality_shadow_via_uniqueness_check():
    # succ_w is transport along the generator; maps out of the term algebra that
    # commute with it and hit 0 are forced to be nf
    q_transport = el_transport(parse_loop("q"))
    d = BiInvDescriptor(ZW_ZERO, q_transport, el_transport(parse_loop("Q")), pred_w)
    assert uniqueness_check(nf, d, 6).ok
    assert uniqueness_check(nf, zw_descriptor(), 6).ok
    assert all(q_transport(int_to_zw(k)) == succ_w(int_to_zw(k)) for k in range(-50, 51))
