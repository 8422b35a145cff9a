"""Shift calculus on degree functions of a fixed graded quiver.

A shift vector n acts by deg'(a) = deg(a) + n[source] - n[target]; this is
what shifting the summands of a projective generator does to arrow degrees.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .quiver import GradedQuiver


class RegradingError(ValueError):
    pass


def _parse(aid: str) -> tuple[int, int]:
    s, t = aid.split("->")
    return int(s), int(t)


def apply_shifts(d: Mapping[str, int], n: Mapping[int, int]) -> dict[str, int]:
    out = {}
    for aid, deg in d.items():
        s, t = _parse(aid)
        out[aid] = deg + n.get(s, 0) - n.get(t, 0)
    return out


def positive_shifts(qv: GradedQuiver, a0) -> dict[int, int]:
    """n_i = 1 + level of i in its A_0 component."""
    return {v: 1 + lvl for v, lvl in sorted(a0.levels.items())}


def rescale(d: Mapping[str, int], k: int) -> dict[str, int]:
    if k < 1:
        raise RegradingError(f"rescale factor must be positive, got {k}")
    out = {}
    for aid, deg in d.items():
        if deg % k:
            raise RegradingError(f"degree {deg} of arrow {aid} is not divisible by {k}")
        out[aid] = deg // k
    return out


def cycle_sums(qv: GradedQuiver, d: Mapping[str, int]) -> dict[int, int]:
    return {c.id: sum(d[a] for a in c.arrows) for c in qv.cycles if c.arrows}


def normalize(n: Mapping[int, int]) -> dict[int, int]:
    """Shift so that vertex 1 gets 0 (the action ignores global constants)."""
    base = n.get(1, 0)
    return {v: n[v] - base for v in sorted(n)}


@dataclass(frozen=True)
class MoritaSolution:
    scale: Fraction
    shifts: Mapping[int, int]


def morita_solve(qv: GradedQuiver, d1: Mapping[str, int], d2: Mapping[str, int],
                 allow_rescale: bool = False) -> MoritaSolution | None:
    """Find (r, n) with d2 = apply_shifts(r * d1, n), or None.

    r is forced by the exceptional-cycle sums, n is propagated along a
    spanning tree of the (connected) underlying graph and then checked on
    every arrow. n is normalized by n[1] = 0.
    """
    if set(d1) != set(d2) or set(d1) != set(qv.arrow_ids()):
        raise RegradingError("degree functions are not on the same quiver")
    s1, s2 = cycle_sums(qv, d1), cycle_sums(qv, d2)
    cid = qv.exceptional_cycle.id if qv.exceptional_cycle.arrows else next(iter(s1), None)
    if cid is None or s1[cid] == 0:
        r = Fraction(1)
    else:
        r = Fraction(s2[cid], s1[cid])
    if r != 1 and not allow_rescale:
        return None
    if r <= 0:
        return None
    scaled = {}
    for aid, deg in d1.items():
        x = r * deg
        if x.denominator != 1:
            return None
        scaled[aid] = int(x)

    n = {1: 0}
    todo = deque([1])
    while todo:
        v = todo.popleft()
        for a in qv.arrows:
            diff = d2[a.id] - scaled[a.id]
            if a.source == v and a.target not in n:
                n[a.target] = n[v] - diff
                todo.append(a.target)
            elif a.target == v and a.source not in n:
                n[a.source] = n[v] + diff
                todo.append(a.source)
    for v in range(1, qv.e + 1):
        n.setdefault(v, 0)
    if apply_shifts(scaled, n) != dict(d2):
        return None
    return MoritaSolution(r, normalize(n))
