"""Graded homotopy-category computations over the Brauer star algebra.

The star algebra A_S of type (m, e) is tightly graded and uniserial: the
projective P_i has length m*e + 1 and its layer d (internal degree d above
its top) is S_{((i - 1 + d) mod e) + 1}. Every homomorphism P_i -> P_j is a
combination of "drop" maps sending the top of P_i to layer d of P_j, which
exist exactly when d = i - j (mod e) and 0 <= d <= m*e. Drops add under
composition and vanish past m*e.

Each summand of the Green's-walk tilting complex has at most two terms, so
graded Hom spaces in the homotopy category reduce to tiny exact linear
solves, one per internal degree.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exactmath import QQ, rank, solve_linear
from .green_walk import GreenNumbering
from .quiver import GradedQuiver


@dataclass(frozen=True)
class StarProjective:
    """P_index placed with its top in internal degree ``top``."""

    index: int
    top: int

    def layers(self, m: int, e: int) -> list[tuple[int, int]]:
        """(internal degree, composition factor) from the top down."""
        return [(self.top + d, (self.index - 1 + d) % e + 1) for d in range(m * e + 1)]


@dataclass(frozen=True)
class StarHom:
    source: int
    target: int
    drop: int
    coefficient: object = 1

    def admissible(self, m: int, e: int) -> bool:
        return is_admissible(self.source, self.target, self.drop, m, e)


def is_admissible(i: int, j: int, drop: int, m: int, e: int) -> bool:
    return 0 <= drop <= m * e and (drop - (i - j)) % e == 0


def minimal_positive_drop(i: int, j: int, e: int) -> int:
    """Drop of the maximal-rank map P_i -> P_j that is not an isomorphism."""
    return (i - j - 1) % e + 1


def compose(first: StarHom, second: StarHom, m: int, e: int) -> StarHom | None:
    """``second`` after ``first``; ``None`` when the composite vanishes."""
    if first.target != second.source:
        raise ValueError("maps are not composable")
    d = first.drop + second.drop
    if d > m * e:
        return None
    return StarHom(first.source, second.target, d, first.coefficient * second.coefficient)


@dataclass(frozen=True)
class Term:
    """One projective of a complex: homological degree and placed projective."""

    position: int
    projective: StarProjective


@dataclass(frozen=True)
class TiltingSummand:
    """T_x: a stalk ``P_x`` or a two-term complex ``P_x -> P_j``.

    Positions are homological degrees and the differential lowers them by
    one. ``terms`` are listed along the differential (source first) and
    ``drops`` holds the drop of each differential.
    """

    edge: int
    terms: tuple[Term, ...]
    drops: tuple[int, ...]

    @property
    def is_stalk(self) -> bool:
        return len(self.terms) == 1

    @property
    def positions(self) -> tuple[int, ...]:
        return tuple(t.position for t in self.terms)

    def term_at(self, position: int) -> Term | None:
        for t in self.terms:
            if t.position == position:
                return t
        return None

    def differential_drop(self, position: int) -> int | None:
        """Drop of the differential leaving ``position`` (``None`` if there is none)."""
        for k, t in enumerate(self.terms[:-1]):
            if t.position == position:
                return self.drops[k]
        return None

    def describe(self) -> str:
        parts = [f"P{t.projective.index}[{t.position}]<{t.projective.top}>" for t in self.terms]
        return " -> ".join(parts)


def build_tilting(n: GreenNumbering, m: int | None = None) -> list[TiltingSummand]:
    """The graded Green's-walk tilting complex, one summand per edge index.

    Stalk summands are ``P_x`` in degree 0 with top in internal degree 0. An
    edge x with predecessor j gets ``P_x -> P_j`` with ``P_x`` in degree
    delta(x) - 1 and ``P_j`` in degree delta(x) - 2, i.e. exactly where T_j
    keeps its own copy of ``P_j``. That copy is raised by m*e internally and
    the differential is the highest-rank map (minimal positive drop), so it
    is homogeneous of degree 0.
    """
    e = n.e
    if m is None:
        m = n.tree.m
    summands: dict[int, TiltingSummand] = {}
    for x in sorted(range(1, e + 1), key=lambda i: (n.delta[i], i)):
        j = n.predecessor[x]
        if j is None:
            summands[x] = TiltingSummand(x, (Term(0, StarProjective(x, 0)),), ())
            continue
        head = summands[j].terms[0]
        assert head.position == n.delta[x] - 2
        drop = minimal_positive_drop(x, j, e)
        top_j = head.projective.top + m * e
        summands[x] = TiltingSummand(
            x,
            (Term(n.delta[x] - 1, StarProjective(x, top_j + drop)),
             Term(head.position, StarProjective(j, top_j))),
            (drop,),
        )
    return [summands[i] for i in range(1, e + 1)]


@dataclass(frozen=True)
class GradedHomSpace:
    """Graded dimension of Hom in the homotopy category between two summands."""

    source: int
    target: int
    dims: tuple[tuple[int, int], ...]
    chain_dims: tuple[tuple[int, int], ...] = ()
    homotopy_dims: tuple[tuple[int, int], ...] = ()

    @property
    def total(self) -> int:
        return sum(d for _, d in self.dims)

    def as_dict(self) -> dict[int, int]:
        return dict(self.dims)

    def lowest_degree(self) -> int | None:
        return self.dims[0][0] if self.dims else None


def _map_drop(src: StarProjective, tgt: StarProjective, degree: int, m: int, e: int) -> int | None:
    """Drop of the unique (up to scalar) degree-``degree`` map between placed projectives."""
    d = degree + src.top - tgt.top
    return d if is_admissible(src.index, tgt.index, d, m, e) else None


def hom_complex(a: TiltingSummand, b: TiltingSummand, m: int, e: int,
                field=QQ) -> GradedHomSpace:
    """Graded Hom_{K^b}(a, b): chain maps modulo null-homotopic maps, degree by degree."""
    me = m * e
    lo = min(tb.projective.top - ta.projective.top for ta in a.terms for tb in b.terms)
    hi = max(tb.projective.top - ta.projective.top + me for ta in a.terms for tb in b.terms)
    dims, chain_dims, htpy_dims = [], [], []
    for h in range(lo, hi + 1):
        chain, htpy, quotient = _hom_in_degree(a, b, h, m, e, field)
        if chain:
            chain_dims.append((h, chain))
        if htpy:
            htpy_dims.append((h, htpy))
        if quotient:
            dims.append((h, quotient))
    return GradedHomSpace(a.edge, b.edge, tuple(dims), tuple(chain_dims), tuple(htpy_dims))


def _hom_in_degree(a, b, h, m, e, field):
    me = m * e
    # chain-map unknowns: one coefficient per position with a nonzero degree-h map
    unknowns = []
    for ta in a.terms:
        tb = b.term_at(ta.position)
        if tb is None:
            continue
        d = _map_drop(ta.projective, tb.projective, h, m, e)
        if d is not None:
            unknowns.append((ta.position, d))
    if not unknowns:
        return 0, 0, 0
    col = {p: k for k, (p, _) in enumerate(unknowns)}
    drop_of = dict(unknowns)

    # commutation d_b f_p = f_{p-1} d_a, one equation per position p where the
    # composite X_p -> Y_{p-1} can be nonzero
    rows = []
    for ta in a.terms:
        p = ta.position
        tgt = b.term_at(p - 1)
        if tgt is None or _map_drop(ta.projective, tgt.projective, h, m, e) is None:
            continue
        row = [field.zero] * len(unknowns)
        db = b.differential_drop(p)
        if p in col and db is not None and drop_of[p] + db <= me:
            row[col[p]] += field.one
        da = a.differential_drop(p)
        if p - 1 in col and da is not None and da + drop_of[p - 1] <= me:
            row[col[p - 1]] -= field.one
        if any(x != 0 for x in row):
            rows.append(row)
    chain_dim = solve_linear(rows, None, field, ncols=len(unknowns)).nullity

    # null-homotopic maps f_p = d_b s_p + s_{p-1} d_a with s_p: X_p -> Y_{p+1}
    images = []
    for ta in a.terms:
        p = ta.position
        tb = b.term_at(p + 1)
        if tb is None:
            continue
        sd = _map_drop(ta.projective, tb.projective, h, m, e)
        if sd is None:
            continue
        vec = [field.zero] * len(unknowns)
        db = b.differential_drop(p + 1)
        if db is not None and p in col and sd + db <= me:
            vec[col[p]] += field.one
        # s_p after d_a: X_{p+1} -> X_p -> Y_{p+1}
        da = a.differential_drop(p + 1)
        if da is not None and (p + 1) in col and da + sd <= me:
            vec[col[p + 1]] += field.one
        images.append(vec)
    htpy_dim = rank(images, field) if images else 0
    return chain_dim, htpy_dim, chain_dim - htpy_dim


def hom_dimension_table(summands: Sequence[TiltingSummand], m: int, e: int) -> list[list[int]]:
    """Total dimensions of Hom(T_i, T_j), rows i, columns j."""
    return [[hom_complex(a, b, m, e).total for b in summands] for a in summands]


def case_table_value(qv: GradedQuiver, i: int, j: int) -> int:
    """Expected dimension of Hom(T_i, T_j) by the same-cycle case analysis."""
    if i == j:
        return qv.m + 1 if qv.on_exceptional(i) else 2
    if qv.on_exceptional(i) and qv.on_exceptional(j):
        return qv.m
    if qv.same_cycle(i, j):
        return 1
    return 0


def derive_graded_quiver(summands: Sequence[TiltingSummand], shape: GradedQuiver) -> GradedQuiver:
    """Arrow degrees as lowest degrees of nonzero Hom(T_source, T_target).

    For a loop the identity in degree 0 is discounted and the lowest degree
    of the remaining endomorphisms is used.
    """
    m, e = shape.m, shape.e
    by_edge = {s.edge: s for s in summands}
    degrees = {}
    for arrow in shape.arrows:
        space = hom_complex(by_edge[arrow.source], by_edge[arrow.target], m, e)
        dims = space.as_dict()
        if arrow.source == arrow.target:
            dims[0] = dims.get(0, 0) - 1
        positive = sorted(h for h, d in dims.items() if d > 0)
        if not positive:
            raise ArithmeticError(f"no nonzero Hom for arrow {arrow.id}")
        degrees[arrow.id] = positive[0]
    return shape.with_degrees(degrees)
