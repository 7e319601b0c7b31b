"""Integers as terms: signed naturals, bi-invertible successor terms, free
group words and circle loops, with normalisation, recursion and finite
algebra checks."""

from .arithmetic import add, add_iterated, add_zb, mul, neg, sub
from .freegroup import concat, f1_to_zw, invert, reduce, zw_to_f1
from .loopspace import compose_loops, el_transport, loop_of, reduce_loop, winding
from .normalizer import (
    INNERMOST,
    NormalizationTrace,
    RewriteStep,
    embed,
    embed_zh,
    nf,
    nf_zh,
    normalize_trace,
    pred_w,
    rewrite_step,
    succ_w,
)
from .recursor import (
    BiInvDescriptor,
    InductionReport,
    UniquenessReport,
    bounded_induction,
    rec_zb,
    uniqueness_check,
    zb_modulo_nf_descriptor,
    zw_descriptor,
)
from .sigcheck import (
    EndoAlgebra,
    FiniteCarrier,
    ForgetfulReport,
    MagmaAlgebra,
    PreconditionError,
    check_biinv_extension,
    check_unit_extension,
    enumerate_morphisms_endo,
)
from .terms import (
    NAT_MAX,
    ZB_ZERO,
    ZH_ZERO,
    ZW_ZERO,
    Alphabet,
    FreeWord,
    Letter,
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
    parse_loop,
    parse_word,
    parse_zb,
    parse_zh,
    parse_zq,
    parse_zw,
    pred,
    pred1,
    pred2,
    print_loop,
    print_word,
    print_zb,
    print_zh,
    print_zq,
    print_zw,
    strneg,
    strpos,
    succ,
    word,
    zw_to_int,
)

__version__ = "0.1.0"
