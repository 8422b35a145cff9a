"""Green's walk numbering of the edges of a Brauer tree."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .tree import BrauerTree, TreeError, distances


@dataclass(frozen=True)
class GreenNumbering:
    """Bijection between edge ids and 1..e given by one Green's walk.

    ``delta[i]`` is the distance of edge ``i`` from the exceptional vertex and
    ``predecessor[i]`` the index of the previous edge on the path towards it
    (``None`` when ``delta[i] == 1``).
    """

    tree: BrauerTree
    order: tuple[str, ...]
    index: Mapping[str, int]
    delta: Mapping[int, int]
    predecessor: Mapping[int, int | None]

    @property
    def e(self) -> int:
        return len(self.order)

    @property
    def start(self) -> str:
        return self.order[0]

    def edge(self, i: int) -> str:
        return self.order[i - 1]

    def roots(self) -> list[int]:
        return sorted(i for i, d in self.delta.items() if d == 1)


def default_start(t: BrauerTree) -> str:
    return min(t.exceptional_edges())


def green_number(t: BrauerTree, start: str | None = None) -> GreenNumbering:
    """Number the edges by walking counter-clockwise around ``t``.

    Starting at the exceptional vertex with ``start``, each time the walk
    reaches a vertex through some edge it continues with the remaining
    incident edges in counter-clockwise order after that edge; edges are
    numbered on first traversal.
    """
    if start is None:
        start = default_start(t)
    if start not in t.edges:
        raise TreeError(f"unknown start edge {start!r}")
    if start not in t.rotation[t.exceptional]:
        raise TreeError(f"start edge {start!r} is not adjacent to the exceptional vertex")

    order: list[str] = []
    # explicit stack of (vertex, remaining edges) keeps deep trees off the recursion limit
    stack = [(t.exceptional, iter(t.ccw_from(t.exceptional, start)))]
    while stack:
        vertex, pending = stack[-1]
        edge = next(pending, None)
        if edge is None:
            stack.pop()
            continue
        order.append(edge)
        far = t.other_end(edge, vertex)
        stack.append((far, iter(t.ccw_after(far, edge))))

    index = {k: i for i, k in enumerate(order, start=1)}
    dist = distances(t)
    delta = {index[k]: dist.delta[k] for k in order}
    predecessor = {
        index[k]: (index[dist.predecessor[k]] if dist.predecessor[k] is not None else None)
        for k in order
    }
    return GreenNumbering(t, tuple(order), index, delta, predecessor)


@dataclass(frozen=True)
class Component:
    """Subtree hanging off one edge at the exceptional vertex."""

    root: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


def components(n: GreenNumbering) -> list[Component]:
    """One component per edge at the exceptional vertex, in increasing root order."""
    owner: dict[int, int] = {}
    for i in range(1, n.e + 1):
        j = i
        while n.predecessor[j] is not None:
            j = n.predecessor[j]
        owner[i] = j
    comps = []
    for r in n.roots():
        comps.append(Component(r, tuple(sorted(i for i, o in owner.items() if o == r))))
    return comps


def component_of(n: GreenNumbering) -> dict[int, int]:
    """Map each index to the root of its component."""
    out = {}
    for c in components(n):
        for i in c.members:
            out[i] = c.root
    return out
