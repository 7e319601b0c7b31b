"""Loops on the circle as words in ``q``/``Q`` and their winding numbers.

The universe presentation of the integers has a single point ``0`` over the
base point and a loop ``q`` whose action on that fibre is ``succ_w``; reading
a loop word left to right as transport gives ``el_transport``.
"""

from __future__ import annotations

from typing import Callable

from .normalizer import pred_w, succ_w
from .terms import LoopWord, ZwTerm, int_to_zw, zw_to_int


def winding(w: LoopWord) -> ZwTerm:
    return int_to_zw(sum(w.steps))


def compose_loops(u: LoopWord, v: LoopWord) -> LoopWord:
    return LoopWord(u.steps + v.steps)


def reduce_loop(w: LoopWord) -> LoopWord:
    k = sum(w.steps)
    return LoopWord((1 if k > 0 else -1,) * abs(k))


def loop_of(z: ZwTerm) -> LoopWord:
    """The reduced loop with winding number ``z``."""
    k = zw_to_int(z)
    return LoopWord((1 if k > 0 else -1,) * abs(k))


def inverse_loop(w: LoopWord) -> LoopWord:
    return LoopWord(tuple(-s for s in reversed(w.steps)))


def el_transport(w: LoopWord) -> Callable[[ZwTerm], ZwTerm]:
    steps = [succ_w if s == 1 else pred_w for s in w.steps]

    def transport(z: ZwTerm) -> ZwTerm:
        for step in steps:
            z = step(z)
        return z

    return transport
