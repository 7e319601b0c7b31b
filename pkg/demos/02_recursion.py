# # Recursion out of bi-invertible terms
#
# A descriptor is a point, a forward map and two inverses. rec_zb folds a term
# through it.

from zterms import (
    ZW_ZERO, embed, enumerate_terms, int_to_zw, nf, parse_zb, rec_zb, uniqueness_check,
    zb_modulo_nf_descriptor, zw_descriptor,
)
from zterms.recursor import bounded_induction

d = zw_descriptor()
f = rec_zb(d)
t = parse_zb("succ(succ(pred2(succ(0))))")
print(f(t), nf(t))

# Inverse laws hold on a window of signed naturals.

print(d.inverse_law_violations(int_to_zw(k) for k in range(-5, 6)))

# Any map that sends 0 to the point and commutes with succ is rec.
# nf is one such map.

report = uniqueness_check(nf, d, 6)
print(report)

# A constant map does not commute with succ, and the check says where.

print(uniqueness_check(lambda t: ZW_ZERO, d, 6))

# Over terms compared through nf, embed . nf is another one.

print(uniqueness_check(lambda t: embed(nf(t)), zb_modulo_nf_descriptor(), 6).ok)

# Bounded induction, with a predicate that respects nf and one that does not.

print(bounded_induction(lambda t: nf(t) == nf(t), 5).ok)
bad = bounded_induction(lambda t: "pred2" not in t.ops, 5)
print(bad.ok, bad.failure, bad.witness)

print(sum(1 for _ in enumerate_terms(6)), "terms checked up to depth 6")
