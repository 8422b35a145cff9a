"""Brauer trees: planar trees with a rotation system, an exceptional vertex
and a multiplicity, plus their JSON form and edge distances."""
from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass
from typing import Mapping, Sequence


class TreeError(ValueError):
    """Invalid Brauer tree description."""


@dataclass(frozen=True)
class BrauerTree:
    """A Brauer tree of type (m, e).

    ``rotation`` maps each vertex id to the counter-clockwise cyclic list of
    its incident edge ids; the starting element of each list carries no
    meaning. ``edges`` maps each edge id to its two endpoint vertex ids.
    Construct through :func:`make_tree` or :func:`parse_tree` to get
    validation.
    """

    rotation: Mapping[str, tuple[str, ...]]
    edges: Mapping[str, tuple[str, str]]
    exceptional: str
    multiplicity: int

    @property
    def m(self) -> int:
        return self.multiplicity

    @property
    def e(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> list[str]:
        return list(self.rotation)

    def other_end(self, edge: str, vertex: str) -> str:
        a, b = self.edges[edge]
        if vertex == a:
            return b
        if vertex == b:
            return a
        raise TreeError(f"edge {edge!r} is not incident to vertex {vertex!r}")

    def ccw_after(self, vertex: str, edge: str) -> list[str]:
        """Edges at ``vertex`` in counter-clockwise order, starting just after ``edge``."""
        rot = list(self.rotation[vertex])
        k = rot.index(edge)
        return rot[k + 1:] + rot[:k]

    def ccw_from(self, vertex: str, edge: str) -> list[str]:
        return [edge] + self.ccw_after(vertex, edge)

    def exceptional_edges(self) -> tuple[str, ...]:
        return tuple(self.rotation[self.exceptional])

    def canonical(self) -> tuple:
        """Hashable form in which every rotation list starts at its smallest id."""
        rot = []
        for v in sorted(self.rotation):
            lst = list(self.rotation[v])
            k = lst.index(min(lst))
            rot.append((v, tuple(lst[k:] + lst[:k])))
        edges = tuple(sorted((k, tuple(sorted(v))) for k, v in self.edges.items()))
        return (tuple(rot), edges, self.exceptional, self.multiplicity)

    def same_as(self, other: "BrauerTree") -> bool:
        return self.canonical() == other.canonical()

    def to_dict(self) -> dict:
        return {
            "multiplicity": self.multiplicity,
            "exceptional": self.exceptional,
            "vertices": {v: list(r) for v, r in self.rotation.items()},
            "edges": {k: list(v) for k, v in self.edges.items()},
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def with_exceptional(self, vertex: str, multiplicity: int | None = None) -> "BrauerTree":
        return make_tree(self.rotation, self.edges, vertex,
                         self.multiplicity if multiplicity is None else multiplicity)


def make_tree(rotation: Mapping[str, Sequence[str]], edges: Mapping[str, Sequence[str]],
              exceptional: str, multiplicity: int) -> BrauerTree:
    """Validate the pieces and build a :class:`BrauerTree`."""
    if isinstance(multiplicity, bool) or not isinstance(multiplicity, int):
        raise TreeError(f"multiplicity must be an integer, got {multiplicity!r}")
    if multiplicity < 1:
        raise TreeError(f"multiplicity must be >= 1, got {multiplicity}")
    if not edges:
        raise TreeError("a Brauer tree needs at least one edge")
    rot = {str(v): tuple(str(x) for x in lst) for v, lst in rotation.items()}
    edg: dict[str, tuple[str, str]] = {}
    for k, ends in edges.items():
        ends = tuple(str(x) for x in ends)
        if len(ends) != 2:
            raise TreeError(f"edge {k!r} must have exactly two endpoints")
        if ends[0] == ends[1]:
            raise TreeError(f"edge {k!r} is a loop")
        for v in ends:
            if v not in rot:
                raise TreeError(f"edge {k!r} has unknown endpoint {v!r}")
        edg[str(k)] = ends
    if exceptional not in rot:
        raise TreeError(f"unknown exceptional vertex {exceptional!r}")

    for v, lst in rot.items():
        if len(set(lst)) != len(lst):
            raise TreeError(f"vertex {v!r} lists an edge twice")
        for k in lst:
            if k not in edg:
                raise TreeError(f"dangling edge id {k!r} at vertex {v!r}")
            if v not in edg[k]:
                raise TreeError(f"vertex {v!r} lists edge {k!r} which does not touch it")
    for k, (a, b) in edg.items():
        for v in (a, b):
            if k not in rot[v]:
                raise TreeError(f"edge {k!r} missing from the rotation of {v!r}")
    isolated = [v for v, lst in rot.items() if not lst]
    if isolated:
        raise TreeError(f"not connected: isolated vertex {isolated[0]!r}")

    seen = {exceptional}
    queue = deque([exceptional])
    while queue:
        v = queue.popleft()
        for k in rot[v]:
            a, b = edg[k]
            w = b if a == v else a
            if w not in seen:
                seen.add(w)
                queue.append(w)
    if len(seen) != len(rot):
        raise TreeError("not connected")
    if len(edg) != len(rot) - 1:
        raise TreeError(f"not a tree: {len(edg)} edges on {len(rot)} vertices")
    return BrauerTree(rot, edg, exceptional, multiplicity)


def parse_tree(text: str | Mapping) -> BrauerTree:
    """Parse the JSON tree document (string or already-decoded mapping)."""
    if isinstance(text, Mapping):
        doc = text
    else:
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise TreeError(f"malformed document: {exc}") from None
    if not isinstance(doc, Mapping):
        raise TreeError("malformed document: top level must be an object")
    missing = [k for k in ("multiplicity", "exceptional", "vertices", "edges") if k not in doc]
    if missing:
        raise TreeError(f"malformed document: missing key(s) {', '.join(missing)}")
    if not isinstance(doc["vertices"], Mapping) or not isinstance(doc["edges"], Mapping):
        raise TreeError("malformed document: 'vertices' and 'edges' must be objects")
    for v, lst in doc["vertices"].items():
        if not isinstance(lst, list):
            raise TreeError(f"malformed document: rotation of {v!r} must be a list")
    return make_tree(doc["vertices"], doc["edges"], str(doc["exceptional"]), doc["multiplicity"])


def load_tree(path) -> BrauerTree:
    with open(path) as fh:
        return parse_tree(fh.read())


def star_tree(m: int, e: int) -> BrauerTree:
    """The Brauer star: ``e`` edges ``S1..Se`` counter-clockwise around the exceptional centre."""
    if e < 1:
        raise TreeError(f"e must be >= 1, got {e}")
    rotation = {"c": [f"S{i}" for i in range(1, e + 1)]}
    edges = {}
    for i in range(1, e + 1):
        rotation[f"v{i}"] = [f"S{i}"]
        edges[f"S{i}"] = ["c", f"v{i}"]
    return make_tree(rotation, edges, "c", m)


def line_tree(m: int, e: int) -> BrauerTree:
    """The Brauer line with the exceptional vertex at one end; edge ``Si`` joins ``v{i-1}`` and ``v{i}``."""
    if e < 1:
        raise TreeError(f"e must be >= 1, got {e}")
    rotation = {f"v{i}": [] for i in range(e + 1)}
    edges = {}
    for i in range(1, e + 1):
        edges[f"S{i}"] = [f"v{i - 1}", f"v{i}"]
        rotation[f"v{i - 1}"].append(f"S{i}")
        rotation[f"v{i}"].append(f"S{i}")
    return make_tree(rotation, edges, "v0", m)


def random_tree(rng: random.Random, e: int, m: int) -> BrauerTree:
    """Random attachment tree with shuffled rotations and a random exceptional vertex."""
    rotation: dict[str, list[str]] = {"u0": []}
    edges = {}
    for k in range(1, e + 1):
        parent = rng.choice(sorted(rotation))
        child = f"u{k}"
        name = f"E{k}"
        edges[name] = [parent, child]
        rotation[parent].insert(rng.randint(0, len(rotation[parent])), name)
        rotation[child] = [name]
    exceptional = rng.choice(sorted(rotation))
    return make_tree(rotation, edges, exceptional, m)


@dataclass(frozen=True)
class EdgeDistance:
    """Distance of every edge from the exceptional vertex (adjacent edges have 1),
    the predecessor edge on the path towards it, and the endpoint nearer to it."""

    delta: Mapping[str, int]
    predecessor: Mapping[str, str | None]
    near_vertex: Mapping[str, str]

    def __getitem__(self, edge: str) -> int:
        return self.delta[edge]


def distances(t: BrauerTree) -> EdgeDistance:
    delta: dict[str, int] = {}
    pred: dict[str, str | None] = {}
    near: dict[str, str] = {}
    queue = deque()
    for k in t.rotation[t.exceptional]:
        delta[k], pred[k], near[k] = 1, None, t.exceptional
        queue.append(k)
    while queue:
        k = queue.popleft()
        far = t.other_end(k, near[k])
        for nxt in t.rotation[far]:
            if nxt not in delta:
                delta[nxt], pred[nxt], near[nxt] = delta[k] + 1, k, far
                queue.append(nxt)
    return EdgeDistance(delta, pred, near)
