"""Quiver with relations of the basic Brauer tree algebra and its
Green's-walk grading.

Paths compose left to right: ``ab`` means traverse ``a`` and then ``b``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Mapping

from .green_walk import GreenNumbering, components


@dataclass(frozen=True)
class Arrow:
    source: int
    target: int
    cycle: int

    @property
    def id(self) -> str:
        return arrow_id(self.source, self.target)


def arrow_id(source: int, target: int) -> str:
    return f"{source}->{target}"


@dataclass(frozen=True)
class Cycle:
    """Cycle of the quiver belonging to one tree vertex.

    ``vertices`` lists the edge indices around that tree vertex in
    counter-clockwise order; the arrows run from each entry to the one
    before it. The exceptional cycle carries no arrow at all when a single
    edge meets the exceptional vertex, m = 1 and e > 1.
    """

    id: int
    vertices: tuple[int, ...]
    exceptional: bool
    tree_vertex: str
    arrows: tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.arrows)

    def word(self, start: int, length: int) -> tuple[str, ...]:
        """Arrow ids of the path of ``length`` arrows along this cycle from ``start``."""
        if not self.arrows:
            raise ValueError(f"cycle {self.id} has no arrows")
        verts = self.vertices
        k = verts.index(start)
        out = []
        r = len(verts)
        for _ in range(length):
            if r == 1:
                out.append(arrow_id(verts[0], verts[0]))
                continue
            nxt = (k - 1) % r
            out.append(arrow_id(verts[k], verts[nxt]))
            k = nxt
        return tuple(out)


@dataclass(frozen=True)
class GradedQuiver:
    e: int
    m: int
    arrows: tuple[Arrow, ...]
    cycles: tuple[Cycle, ...]
    degrees: Mapping[str, int | None] = field(default_factory=dict)
    labels: Mapping[int, str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "_by_id", {a.id: a for a in self.arrows})

    # lookup -------------------------------------------------------------
    def arrow(self, aid: str) -> Arrow:
        return self._by_id[aid]

    def has_arrow(self, source: int, target: int) -> bool:
        return arrow_id(source, target) in self._by_id

    def arrow_ids(self) -> list[str]:
        return [a.id for a in self.arrows]

    def degree(self, aid: str) -> int:
        d = self.degrees.get(aid)
        if d is None:
            raise ValueError(f"arrow {aid} has no degree assigned")
        return d

    def arrows_from(self, i: int) -> list[Arrow]:
        return [a for a in self.arrows if a.source == i]

    def arrows_to(self, i: int) -> list[Arrow]:
        return [a for a in self.arrows if a.target == i]

    def cycle(self, cid: int) -> Cycle:
        return self.cycles[cid]

    @property
    def exceptional_cycle(self) -> Cycle:
        return next(c for c in self.cycles if c.exceptional)

    def cycles_at(self, i: int, with_arrows: bool = True) -> list[Cycle]:
        return [c for c in self.cycles if i in c.vertices and (c.arrows or not with_arrows)]

    def multiplicity_of(self, c: Cycle) -> int:
        return self.m if c.exceptional else 1

    def same_cycle(self, i: int, j: int) -> bool:
        return any(i in c.vertices and j in c.vertices for c in self.cycles)

    def on_exceptional(self, i: int) -> bool:
        return i in self.exceptional_cycle.vertices

    def word_degree(self, word) -> int:
        return sum(self.degree(a) for a in word)

    def with_degrees(self, degrees: Mapping[str, int]) -> "GradedQuiver":
        unknown = set(degrees) - set(self._by_id)
        if unknown:
            raise KeyError(f"unknown arrow id(s): {', '.join(sorted(unknown))}")
        return replace(self, degrees=dict(degrees))

    def same_shape(self, other: "GradedQuiver") -> bool:
        return (
            self.e == other.e
            and self.m == other.m
            and sorted(self.arrow_ids()) == sorted(other.arrow_ids())
            and {a.id: a.cycle for a in self.arrows} == {a.id: a.cycle for a in other.arrows}
        )

    # rendering ------------------------------------------------------------
    def to_dict(self) -> dict:
        return {
            "e": self.e,
            "m": self.m,
            "vertices": [
                {"index": i, "edge": self.labels.get(i, str(i))} for i in range(1, self.e + 1)
            ],
            "arrows": [
                {
                    "id": a.id,
                    "source": a.source,
                    "target": a.target,
                    "degree": self.degrees.get(a.id),
                    "cycle": a.cycle,
                    "exceptional": self.cycles[a.cycle].exceptional,
                }
                for a in self.arrows
            ],
            "cycles": [
                {
                    "id": c.id,
                    "tree_vertex": c.tree_vertex,
                    "vertices": list(c.vertices),
                    "exceptional": c.exceptional,
                }
                for c in self.cycles
            ],
        }

    def to_dot(self) -> str:
        lines = ["digraph Q {", "  rankdir=LR;"]
        for i in range(1, self.e + 1):
            edge = self.labels.get(i, f"S{i}")
            name = f"S{i}" if edge == f"S{i}" else f"S{i} ({edge})"
            lines.append(f'  "{i}" [label="{name}"];')
        for a in self.arrows:
            attrs = [f'label="{self.degrees.get(a.id, "?")}"']
            if self.cycles[a.cycle].exceptional:
                attrs.append("penwidth=2")
            lines.append(f'  "{a.source}" -> "{a.target}" [{", ".join(attrs)}];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_latex(self) -> str:
        rows = [r"\begin{tabular}{lll}", r"arrow & degree & cycle \\ \hline"]
        for a in self.arrows:
            tag = "exc" if self.cycles[a.cycle].exceptional else str(a.cycle)
            rows.append(
                rf"$S_{{{a.source}}}\to S_{{{a.target}}}$ & {self.degrees.get(a.id, '?')} & {tag} \\"
            )
        rows.append(r"\end{tabular}")
        return "\n".join(rows) + "\n"


@dataclass(frozen=True)
class RelationSet:
    """Relations of kQ/I.

    ``zero``: pairs of composable arrows from different cycles, ``ab = 0``.
    ``equalities``: ``(vertex, word1, word2)`` with both words starting and
    ending at ``vertex``; the exceptional word is already raised to the m-th
    power. ``truncations``: ``(vertex, word)`` declaring ``word = 0``, one
    per vertex lying on a single cycle (socle word followed by one more
    arrow); these are implied by the others whenever some vertex of the
    cycle lies on two cycles, and carry the star relations otherwise.
    """

    zero: tuple[tuple[str, str], ...]
    equalities: tuple[tuple[int, tuple[str, ...], tuple[str, ...]], ...]
    truncations: tuple[tuple[int, tuple[str, ...]], ...]

    def to_dict(self) -> dict:
        return {
            "zero": [list(p) for p in self.zero],
            "equalities": [
                {"vertex": v, "left": list(w1), "right": list(w2)} for v, w1, w2 in self.equalities
            ],
            "truncations": [{"vertex": v, "word": list(w)} for v, w in self.truncations],
        }


def _make_cycle(cid: int, verts: tuple[int, ...], exceptional: bool, tree_vertex: str,
                m: int, e: int) -> Cycle:
    r = len(verts)
    if r >= 2:
        arrows = tuple(arrow_id(verts[(k + 1) % r], verts[k]) for k in range(r))
    elif exceptional and (m > 1 or e == 1):
        # with a single edge and m = 1 the loop is what makes k[x]/(x^2)
        arrows = (arrow_id(verts[0], verts[0]),)
    else:
        arrows = ()
    return Cycle(cid, verts, exceptional, tree_vertex, arrows)


def quiver_from_cycles(e: int, m: int, exceptional_vertices: tuple[int, ...],
                       other_cycles: list[tuple[int, ...]], labels=None,
                       tree_vertices=None) -> GradedQuiver:
    """Assemble the quiver from cyclic vertex orders.

    Non-exceptional cycles are numbered 1, 2, ... by their smallest vertex.
    """
    order = sorted(range(len(other_cycles)), key=lambda k: min(other_cycles[k]))
    tree_vertices = tree_vertices or ["?"] * len(other_cycles)
    cycles = [_make_cycle(0, tuple(exceptional_vertices), True, "exceptional", m, e)]
    for cid, k in enumerate(order, start=1):
        cycles.append(_make_cycle(cid, tuple(other_cycles[k]), False, tree_vertices[k], m, e))
    arrows = []
    for c in cycles:
        for aid in c.arrows:
            s, t = (int(x) for x in aid.split("->"))
            arrows.append(Arrow(s, t, c.id))
    return GradedQuiver(e, m, tuple(arrows), tuple(cycles),
                        {a.id: None for a in arrows}, dict(labels or {}))


def build_quiver(n: GreenNumbering) -> tuple[GradedQuiver, RelationSet]:
    """Quiver and relations of A_Gamma in Green indices; degrees left unassigned."""
    t = n.tree
    exc = tuple(n.index[k] for k in t.ccw_from(t.exceptional, n.start))
    others, names = [], []
    for v in sorted(t.rotation):
        if v == t.exceptional or len(t.rotation[v]) < 2:
            continue
        others.append(tuple(n.index[k] for k in t.rotation[v]))
        names.append(v)
    labels = {i: k for k, i in n.index.items()}
    qv = quiver_from_cycles(n.e, t.m, exc, others, labels, names)
    # keep the exceptional cycle's tree vertex name
    cyc = list(qv.cycles)
    cyc[0] = replace(cyc[0], tree_vertex=t.exceptional)
    qv = replace(qv, cycles=tuple(cyc))
    return qv, relations_for(qv)


def relations_for(qv: GradedQuiver) -> RelationSet:
    zero = []
    for a in qv.arrows:
        for b in qv.arrows_from(a.target):
            if b.cycle != a.cycle:
                zero.append((a.id, b.id))
    equalities, truncations = [], []
    for i in range(1, qv.e + 1):
        cyc = qv.cycles_at(i)
        words = [c.word(i, qv.multiplicity_of(c) * c.length) for c in cyc]
        if len(cyc) == 2:
            # exceptional word (if any) on the left
            if cyc[1].exceptional:
                words.reverse()
            equalities.append((i, words[0], words[1]))
        elif len(cyc) == 1:
            c = cyc[0]
            truncations.append((i, c.word(i, qv.multiplicity_of(c) * c.length + 1)))
    return RelationSet(tuple(sorted(zero)), tuple(equalities), tuple(truncations))


def exceptional_degree(i: int, j: int, e: int) -> int:
    """Degree of the exceptional arrow i -> j; equals e on the loop."""
    return (i - j - 1) % e + 1


def assign_degrees(qv: GradedQuiver, n: GreenNumbering | None = None,
                   m: int | None = None) -> GradedQuiver:
    """Green's-walk grading in closed form.

    Exceptional arrows i -> j get ((i - j - 1) mod e) + 1. In every other
    cycle the arrow from the smallest to the largest index gets m*e and the
    remaining arrows get 0.
    """
    m = qv.m if m is None else m
    e = qv.e
    degrees = {}
    for c in qv.cycles:
        lo, hi = min(c.vertices), max(c.vertices)
        for aid in c.arrows:
            a = qv.arrow(aid)
            if c.exceptional:
                degrees[aid] = exceptional_degree(a.source, a.target, e)
            else:
                degrees[aid] = m * e if (a.source, a.target) == (lo, hi) else 0
    return qv.with_degrees(degrees)


def green_graded_quiver(n: GreenNumbering) -> tuple[GradedQuiver, RelationSet]:
    qv, rel = build_quiver(n)
    return assign_degrees(qv, n, n.tree.m), rel


@dataclass
class DegreeCheck:
    arrow: str
    degree: int
    component_size: int

    @property
    def ok(self) -> bool:
        return self.degree == self.component_size


def exceptional_degree_check(qv: GradedQuiver, comps) -> list[DegreeCheck]:
    """Compare each exceptional arrow's degree with the size of its target's component."""
    size = {c.root: c.size for c in comps}
    out = []
    for aid in qv.exceptional_cycle.arrows:
        a = qv.arrow(aid)
        out.append(DegreeCheck(aid, qv.degree(aid), size[a.target]))
    return out


def grading_from_tree(t, start: str | None = None):
    """Convenience: numbering, graded quiver and relations for a tree."""
    from .green_walk import green_number

    n = green_number(t, start)
    qv, rel = green_graded_quiver(n)
    return n, qv, rel


def degrees_by_edge(qv: GradedQuiver) -> dict[tuple[str, str], int]:
    """Degrees keyed by (source edge id, target edge id), for comparing numberings."""
    return {
        (qv.labels[a.source], qv.labels[a.target]): qv.degree(a.id) for a in qv.arrows
    }


def quiver_json(qv: GradedQuiver, rel: RelationSet | None = None) -> str:
    doc = qv.to_dict()
    if rel is not None:
        doc["relations"] = rel.to_dict()
    return json.dumps(doc, indent=2)


def check_components_sizes(n: GreenNumbering, qv: GradedQuiver) -> bool:
    return all(c.ok for c in exceptional_degree_check(qv, components(n)))
