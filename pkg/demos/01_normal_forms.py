# # Normal forms of integer terms
#
# Three ways of writing an integer. The signed-natural form has one spelling
# per integer, the other two have many.

from zterms import (
    INNERMOST, embed, int_to_zw, nf, normalize_trace, parse_zb, parse_zh,
    print_zb, zw_to_int,
)

# Signed naturals first. strneg(n) is -(n+1), so there is no negative zero.

for k in (-3, -1, 0, 1, 3):
    print(k, repr(int_to_zw(k)))

# A term with two kinds of predecessor. nf folds it down to a signed natural.

t = parse_zb("succ(pred2(pred1(succ(pred1(0)))))")
print(print_zb(t), "->", nf(t), "depth", t.depth)

# embed goes back, always through pred1.

print(print_zb(embed(nf(t))))

# The same value by rewriting instead of folding. The innermost strategy
# picks the deepest redex each time.

trace = normalize_trace(t, INNERMOST)
print(trace.to_lines())

# Random strategies take different routes and can stop at different terms,
# but the value at the end is the same.

for seed in range(4):
    tr = normalize_trace(t, seed)
    print(seed, [s.rule for s in tr.steps], print_zb(tr.normal_term), tr.result)

# The one-predecessor terms behave the same way.

h = parse_zh("pred(succ(succ(pred(pred(0)))))")
print(zw_to_int(nf(h)))
