# # Free group words and loops on the circle

from zterms import (
    compose_loops, concat, el_transport, f1_to_zw, int_to_zw, invert, loop_of,
    parse_loop, parse_word, print_loop, print_word, reduce, reduce_loop,
    winding, zw_to_f1,
)

w = parse_word("a b b- a- c a")
print(print_word(reduce(w)))
print(print_word(reduce(concat(w, invert(w)))) == "")

# With one generator every reduced word is a power, which is an integer.

u = parse_word("a a a- a a")
print(f1_to_zw(reduce(u)), print_word(zw_to_f1(int_to_zw(-3))))

# Loops: q steps once around, Q steps back.

p, r = parse_loop("qqQq"), parse_loop("QQQ")
print(winding(p), winding(r), winding(compose_loops(p, r)))
print(print_loop(reduce_loop(p)), print_loop(loop_of(int_to_zw(-2))))

# Transport along a loop shifts the fibre by its winding number.

shift = el_transport(p)
print([shift(int_to_zw(k)) for k in range(-2, 3)])
