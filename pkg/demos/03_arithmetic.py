# # Ring operations on signed naturals

import random

from zterms import add, add_iterated, add_zb, int_to_zw, mul, neg, nf, parse_zb, zw_to_int

a, b = int_to_zw(7), int_to_zw(-12)
print(add(a, b), mul(a, b), neg(b))

# add is a case split on signs. add_iterated is the naive form that steps
# one unit at a time. They agree.

print(add_iterated(a, b) == add(a, b))

# Spot-check distributivity against Python integers.

rng = random.Random(0)
for _ in range(5):
    x, y, z = (rng.randint(-50, 50) for _ in range(3))
    lhs = mul(int_to_zw(x), add(int_to_zw(y), int_to_zw(z)))
    print(x, y, z, zw_to_int(lhs), x * (y + z))

# Addition on raw terms is recursion in the second argument. The result is
# a term again and nf turns it into the sum.

s = add_zb(parse_zb("succ(succ(0))"), parse_zb("pred1(pred2(pred1(0)))"))
print(s, nf(s))
