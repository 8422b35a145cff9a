"""The degree-zero subalgebra A_0 of a Green's-walk graded Brauer tree algebra.

A_0 is a product of monomial algebras, one per edge at the exceptional
vertex. Each factor has a rooted tree as quiver, arrows pointing towards
the root, and a composite of two arrows vanishes exactly when they came
from different cycles of the full quiver.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from .exactmath import cofactor_det
from .quiver import (GradedQuiver, RelationSet, arrow_id, exceptional_degree,
                     quiver_from_cycles, relations_for)


class A0Error(ValueError):
    """Input does not describe a valid A_0 (or is outside a supported case)."""


@dataclass(frozen=True)
class A0Component:
    """One rooted-tree factor of A_0.

    ``arrows`` are (source, target) pairs and ``zero`` lists the pairs of
    arrow ids whose composite vanishes.
    """

    root: int
    vertices: tuple[int, ...]
    arrows: tuple[tuple[int, int], ...]
    zero: frozenset
    levels: Mapping[int, int]

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def arrow_ids(self) -> list[str]:
        return [arrow_id(s, t) for s, t in self.arrows]

    def out_arrow(self, v: int) -> tuple[int, int] | None:
        outs = [a for a in self.arrows if a[0] == v]
        return outs[0] if outs else None

    def in_arrows(self, v: int) -> list[tuple[int, int]]:
        return [a for a in self.arrows if a[1] == v]

    @property
    def max_level(self) -> int:
        return max(self.levels.values())

    def relations(self) -> list[tuple[str, str]]:
        return sorted(self.zero)


@dataclass(frozen=True)
class A0Algebra:
    e: int
    m: int
    components: tuple[A0Component, ...]

    @property
    def t(self) -> int:
        return len(self.components)

    @property
    def levels(self) -> dict[int, int]:
        out = {}
        for c in self.components:
            out.update(c.levels)
        return out

    def component_of(self, v: int) -> A0Component:
        for c in self.components:
            if v in c.vertices:
                return c
        raise KeyError(v)

    @property
    def arrows(self) -> list[tuple[int, int]]:
        return [a for c in self.components for a in c.arrows]

    @property
    def zero(self) -> set:
        return set().union(*(c.zero for c in self.components)) if self.components else set()


def _validate(c: A0Component) -> None:
    for v in c.vertices:
        outs = [a for a in c.arrows if a[0] == v]
        ins = [a for a in c.arrows if a[1] == v]
        if v == c.root:
            if outs:
                raise A0Error(f"root {v} has an outgoing arrow")
            if len(ins) > 1:
                raise A0Error(f"root {v} has {len(ins)} incoming arrows")
        else:
            if len(outs) != 1:
                raise A0Error(f"vertex {v} has {len(outs)} outgoing arrows, expected 1")
            if len(ins) > 2:
                raise A0Error(f"vertex {v} has {len(ins)} incoming arrows")


def extract_a0(qv: GradedQuiver, rel: RelationSet) -> A0Algebra:
    """Degree-zero arrows, their components and the inherited zero relations."""
    zero_arrows = [a for a in qv.arrows if qv.degree(a.id) == 0]
    ids = {a.id for a in zero_arrows}
    out = {a.source: a.target for a in zero_arrows}
    if len(out) != len(zero_arrows):
        raise A0Error("some vertex has two outgoing degree-0 arrows")

    @lru_cache(maxsize=None)
    def chain(v: int) -> tuple[int, int]:
        # (root, level); bounded by e since degree-0 arrows lower the index
        if v not in out:
            return v, 0
        r, lvl = chain(out[v])
        return r, lvl + 1

    roots = sorted(qv.exceptional_cycle.vertices)
    comps = []
    for r in roots:
        verts = tuple(sorted(v for v in range(1, qv.e + 1) if chain(v)[0] == r))
        arrows = tuple(sorted((a.source, a.target) for a in zero_arrows if a.source in verts))
        zero = frozenset(p for p in rel.zero if p[0] in ids and p[1] in ids
                         and qv.arrow(p[0]).source in verts)
        comp = A0Component(r, verts, arrows, zero, {v: chain(v)[1] for v in verts})
        _validate(comp)
        comps.append(comp)
    if sum(c.size for c in comps) != qv.e:
        raise A0Error("degree-0 arrows do not lead every vertex to an exceptional root")
    return A0Algebra(qv.e, qv.m, tuple(comps))


def a0_paths(a: A0Algebra) -> list[tuple[int, int, tuple[str, ...]]]:
    """Basis of A_0: trivial paths and all arrow words avoiding the zero pairs."""
    zero = a.zero
    by_source: dict[int, list[tuple[int, int]]] = {}
    for s, t in a.arrows:
        by_source.setdefault(s, []).append((s, t))
    out = []
    for i in range(1, a.e + 1):
        out.append((i, i, ()))
        stack = [(i, ())]
        while stack:
            v, word = stack.pop()
            for s, t in by_source.get(v, []):
                aid = arrow_id(s, t)
                if word and (word[-1], aid) in zero:
                    continue
                w = word + (aid,)
                out.append((i, t, w))
                stack.append((t, w))
    return out


def _longest_path_to(v: int, arrows: set, zero: set) -> tuple[int, ...]:
    """Vertices of the unique longest nonzero path ending at ``v``."""
    best: list[tuple[int, ...]] = []

    def walk(path: tuple[int, ...], last: str | None):
        nonlocal best
        extended = False
        for s, t in sorted(arrows):
            if t != path[0]:
                continue
            aid = arrow_id(s, t)
            if last is not None and (aid, last) in zero:
                continue
            extended = True
            walk((s,) + path, aid)
        if not extended and len(path) > 1:
            if not best or len(path) > len(best[0]):
                best = [path]
            elif len(path) == len(best[0]):
                best.append(path)

    walk((v,), None)
    if not best:
        raise A0Error(f"no path ends at {v}")
    lengths = sorted({len(p) for p in best})
    longest = [p for p in best if len(p) == lengths[-1]]
    if len(longest) != 1:
        raise A0Error(f"longest nonzero path ending at {v} is not unique")
    return longest[0]


def recover_quiver(a: A0Algebra) -> tuple[GradedQuiver, RelationSet]:
    """Rebuild the graded quiver and relations of A_Gamma from A_0 alone.

    Vertices are treated level by level; at each vertex still receiving an
    unused arrow, the longest nonzero path of unused arrows ending there is
    closed into a cycle by an arrow of degree m*e back to its source. The
    exceptional cycle comes from the cyclic order of the roots.
    """
    me = a.m * a.e
    cycles: list[tuple[int, ...]] = []
    degrees: dict[str, int] = {}
    for comp in a.components:
        _validate(comp)
        unused = set(comp.arrows)
        zero = set(comp.zero)
        for v in sorted(comp.vertices, key=lambda x: (comp.levels[x], x)):
            while any(t == v for _, t in unused):
                path = _longest_path_to(v, unused, zero)
                for s, t in zip(path, path[1:]):
                    unused.discard((s, t))
                    degrees[arrow_id(s, t)] = 0
                # cycle order: v, then the path read backwards from v
                cycles.append((v,) + tuple(reversed(path[:-1])))
                degrees[arrow_id(v, path[0])] = me
        if unused:
            raise A0Error(f"arrows {sorted(unused)} lie on no recovered cycle")

    roots = tuple(c.root for c in a.components)
    size = {c.root: c.size for c in a.components}
    qv = quiver_from_cycles(a.e, a.m, roots, cycles)
    for aid in qv.exceptional_cycle.arrows:
        s, t = qv.arrow(aid).source, qv.arrow(aid).target
        degrees[aid] = size[t] if s != t else a.e
        assert degrees[aid] == exceptional_degree(s, t, a.e)
    qv = qv.with_degrees(degrees)
    return qv, relations_for(qv)


def same_graded_quiver(a: GradedQuiver, b: GradedQuiver) -> bool:
    return a.same_shape(b) and dict(a.degrees) == dict(b.degrees)


def a0_cartan(a: A0Algebra) -> list[list[int]]:
    """c[i][j] = number of nonzero paths of A_0 from i to j (Green order).

    Lower triangular with unit diagonal since degree-0 arrows lower the index.
    """
    e = a.e
    C = [[0] * e for _ in range(e)]
    for i, j, _ in a0_paths(a):
        C[i - 1][j - 1] += 1
    for i in range(e):
        if C[i][i] != 1 or any(C[i][j] for j in range(i + 1, e)):
            raise AssertionError("A_0 Cartan matrix is not unitriangular")
    return C


def a0_cartan_det(a: A0Algebra) -> int:
    return cofactor_det(a0_cartan(a)) if a.e <= 8 else _triangular_det(a0_cartan(a))


def _triangular_det(C) -> int:
    d = 1
    for i in range(len(C)):
        d *= C[i][i]
    return d


def a0_global_dimension(a: A0Algebra) -> int:
    """Global dimension by iterated syzygies of the (right) simple modules.

    In a monomial algebra with quadratic zero relations the right ideal
    ``xA`` of an arrow x is projective unless some arrow y has ``xy = 0``,
    in which case its syzygy is the sum of those ``yA``.
    """
    zero = a.zero
    outs: dict[int, list[str]] = {}
    for s, t in a.arrows:
        outs.setdefault(s, []).append(arrow_id(s, t))
    target = {arrow_id(s, t): t for s, t in a.arrows}

    @lru_cache(maxsize=None)
    def pd_ideal(x: str) -> int:
        killers = [y for y in outs.get(target[x], []) if (x, y) in zero]
        return 1 + max(pd_ideal(y) for y in killers) if killers else 0

    best = 0
    for i in range(1, a.e + 1):
        if outs.get(i):
            best = max(best, 1 + max(pd_ideal(x) for x in outs[i]))
    return best


@dataclass(frozen=True)
class QHOrder:
    """Per component, S_j < S_i iff the quiver of A_0 has a path v_j -> v_i."""

    below: Mapping[int, frozenset]

    @classmethod
    def from_a0(cls, a: A0Algebra) -> "QHOrder":
        succ: dict[int, set] = {v: set() for v in range(1, a.e + 1)}
        for s, t in a.arrows:
            succ[s].add(t)
        reach: dict[int, frozenset] = {}
        for v in sorted(succ):
            seen, todo = set(), list(succ[v])
            while todo:
                w = todo.pop()
                if w not in seen:
                    seen.add(w)
                    todo.extend(succ[w])
            reach[v] = frozenset(seen)
        return cls(reach)

    def less(self, j: int, i: int) -> bool:
        return i in self.below[j]

    def is_partial_order(self) -> bool:
        vs = list(self.below)
        for x in vs:
            if self.less(x, x):
                return False
            for y in self.below[x]:
                if self.less(y, x):
                    return False
                if not self.below[y] <= self.below[x]:
                    return False
        return True

    def standard_ok(self, a: A0Algebra) -> bool:
        """Each right projective e_j A_0 has top S_j and otherwise only factors above S_j."""
        for j, k, word in a0_paths(a):
            if word and not self.less(j, k):
                return False
        return True


def tight_relations_homogeneous(a: A0Algebra) -> bool:
    """With all A_0 arrows in degree 1 every relation has degree 2."""
    return all(len(p) == 2 for p in a.zero)


# trivial extension -------------------------------------------------------

class _TrivialExtension:
    """T(B) = B + B* on the path basis of B = A_0, B in degree 0 and B* in degree 1."""

    def __init__(self, a: A0Algebra):
        self.basis = a0_paths(a)
        self.key = {w if w else ("e", i): (i, j, w) for i, j, w in self.basis}
        self.zero = a.zero

    @staticmethod
    def name(p) -> tuple:
        i, _, w = p
        return w if w else ("e", i)

    def mul_b(self, x, y):
        """Product of two basis paths of B, or None."""
        i, j, w = x
        k, l, v = y
        if j != k:
            return None
        if w and v and (w[-1], v[0]) in self.zero:
            return None
        return (i, l, w + v)

    def mul(self, X, Y):
        """(x, f)(y, g) = (xy, xg + fy), elements as {(part, name): coeff}."""
        out: dict = {}

        def add(k, c):
            out[k] = out.get(k, 0) + c
            if out[k] == 0:
                del out[k]

        for (px, nx), cx in X.items():
            for (py, ny), cy in Y.items():
                if px == 0 and py == 0:
                    z = self.mul_b(self.key[nx], self.key[ny])
                    if z is not None:
                        add((0, self.name(z)), cx * cy)
                elif px == 0 and py == 1:
                    # (x . g)(z) = g(z x)
                    x = self.key[nx]
                    for z in self.basis:
                        zx = self.mul_b(z, x)
                        if zx is not None and self.name(zx) == ny:
                            add((1, self.name(z)), cx * cy)
                elif px == 1 and py == 0:
                    # (f . y)(z) = f(y z)
                    y = self.key[ny]
                    for z in self.basis:
                        yz = self.mul_b(y, z)
                        if yz is not None and self.name(yz) == nx:
                            add((1, self.name(z)), cx * cy)
        return out


@dataclass(frozen=True)
class TrivialExtensionReport:
    dim_a0: int
    dim_algebra: int
    relations_ok: bool
    bijective: bool
    table_ok: bool
    grading_ok: bool

    @property
    def ok(self) -> bool:
        return self.relations_ok and self.bijective and self.table_ok and self.grading_ok


def _is_line(t) -> bool:
    if any(len(r) > 2 for r in t.rotation.values()):
        return False
    return len(t.rotation[t.exceptional]) == 1


def trivial_extension_check(t) -> TrivialExtensionReport:
    """Check a -> (a, 0), b_k -> (0, a_k*) is a graded isomorphism T(A_0) -> A_Gamma.

    Only Brauer lines with m = 1 and the exceptional vertex at an end are
    supported; degrees of A_Gamma are divided by e first.
    """
    from .cartan import nonzero_paths
    from .exactmath import rank
    from .quiver import grading_from_tree
    from .regrading import rescale

    if t.m != 1 or not _is_line(t):
        raise A0Error("trivial extension check needs a Brauer line with m = 1, exceptional vertex at an end")
    _, qv, rel = grading_from_tree(t)
    qv = qv.with_degrees(rescale(qv.degrees, t.e))
    a = extract_a0(qv, rel)
    T = _TrivialExtension(a)

    def image_of_arrow(aid: str) -> dict:
        if qv.degree(aid) == 0:
            return {(0, (aid,)): 1}
        s, tgt = qv.arrow(aid).source, qv.arrow(aid).target
        # the loop of the one-edge case is dual to the idempotent
        return {(1, (arrow_id(tgt, s),) if s != tgt else ("e", s)): 1}

    def image(i: int, word) -> dict:
        X = {(0, ("e", i)): 1}
        for aid in word:
            X = T.mul(X, image_of_arrow(aid))
        return X

    def image_diff(i, w1, w2):
        X, Y = image(i, w1), image(i, w2)
        return {k: X.get(k, 0) - Y.get(k, 0) for k in set(X) | set(Y) if X.get(k, 0) != Y.get(k, 0)}

    relations_ok = all(not image(qv.arrow(x).source, (x, y)) for x, y in rel.zero)
    relations_ok &= all(not image(i, w) for i, w in rel.truncations)
    relations_ok &= all(not image_diff(i, w1, w2) for i, w1, w2 in rel.equalities)
    # idempotents: the e_i go to a complete set of orthogonal idempotents
    for i in range(1, t.e + 1):
        for j in range(1, t.e + 1):
            prod = T.mul({(0, ("e", i)): 1}, {(0, ("e", j)): 1})
            relations_ok &= prod == ({(0, ("e", i)): 1} if i == j else {})

    basis = nonzero_paths(qv, rel)
    images = [image(i, w) for i, _, w in basis]
    keys = sorted({k for X in images for k in X}, key=repr)
    M = [[X.get(k, 0) for k in keys] for X in images]
    dim_t = 2 * len(T.basis)
    bijective = len(basis) == dim_t and rank(M) == dim_t

    normal = {tuple(w2): tuple(w1) for _, w1, w2 in rel.equalities}
    index = {(i, w): k for k, (i, _, w) in enumerate(basis)}

    def reduce(i, word):
        # every nonzero word is a basis word up to the socle identification
        return index.get((i, normal.get(word, word)))

    table_ok = True
    for x in basis:
        for y in basis:
            if x[1] != y[0]:
                continue
            k = reduce(x[0], x[2] + y[2])
            lhs = T.mul(images[index[(x[0], x[2])]], images[index[(y[0], y[2])]])
            rhs = images[k] if k is not None else {}
            if lhs != rhs:
                table_ok = False

    grading_ok = True
    for (i, _, w), X in zip(basis, images):
        d = qv.word_degree(w)
        if any(part != d for part, _ in X):
            grading_ok = False
    return TrivialExtensionReport(len(T.basis), len(basis), relations_ok, bijective,
                                  table_ok, grading_ok)
