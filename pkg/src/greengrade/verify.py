"""Cross-checks run by ``greengrade verify`` on a single tree."""
from __future__ import annotations

from dataclasses import dataclass, field

from .a0 import (QHOrder, a0_cartan, a0_global_dimension, extract_a0, recover_quiver,
                 same_graded_quiver)
from .cartan import cartan_closed_form, cartan_from_paths, determinant_report
from .green_walk import green_number
from .quiver import degrees_by_edge, green_graded_quiver
from .regrading import apply_shifts, morita_solve, positive_shifts
from .star_homotopy import (build_tilting, case_table_value, derive_graded_quiver,
                            hom_dimension_table)
from .tree import BrauerTree


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail and not self.ok else "")


@dataclass
class Report:
    command: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(ok), detail))

    def text(self) -> str:
        lines = [c.line() for c in self.checks]
        lines.append(f"{sum(c.ok for c in self.checks)}/{len(self.checks)} checks passed")
        return "\n".join(lines) + "\n"


def _first_diff(a: dict, b: dict) -> str:
    for k in sorted(set(a) | set(b), key=str):
        if a.get(k) != b.get(k):
            return f"{k}: {a.get(k)} != {b.get(k)}"
    return ""


def _first_matrix_diff(A, B) -> str:
    for i, (ra, rb) in enumerate(zip(A, B), start=1):
        for j, (x, y) in enumerate(zip(ra, rb), start=1):
            if x != y:
                return f"entry ({i},{j}): {x} != {y}"
    return ""


def grading_structure(qv) -> list[tuple[str, bool, str]]:
    """Non-negativity, socle degree m*e, one positive arrow per ordinary
    cycle, degree-0 arrows decreasing the Green index."""
    me = qv.m * qv.e
    out = []
    neg = [a for a in qv.arrow_ids() if qv.degree(a) < 0]
    out.append(("non-negative degrees", not neg, f"negative: {neg}"))
    bad_socle = []
    for c in qv.cycles:
        if not c.arrows:
            continue
        deg = sum(qv.degree(a) for a in c.arrows) * qv.multiplicity_of(c)
        if deg != me:
            bad_socle.append(c.id)
    out.append(("socle degree m*e", not bad_socle, f"cycles {bad_socle}"))
    bad_pos = [c.id for c in qv.cycles if not c.exceptional and c.arrows
               and sum(1 for a in c.arrows if qv.degree(a) > 0) != 1]
    out.append(("one positive arrow per ordinary cycle", not bad_pos, f"cycles {bad_pos}"))
    bad_zero = [a.id for a in qv.arrows if qv.degree(a.id) == 0 and a.source <= a.target]
    out.append(("degree-0 arrows decrease the index", not bad_zero, f"arrows {bad_zero}"))
    return out


def verify_tree(t: BrauerTree) -> Report:
    rep = Report("verify")
    n = green_number(t)
    qv, rel = green_graded_quiver(n)
    m, e = t.m, t.e

    for name, ok, detail in grading_structure(qv):
        rep.add(name, ok, detail)

    summands = build_tilting(n)
    derived = derive_graded_quiver(summands, qv)
    rep.add("homotopy degrees = closed form", dict(derived.degrees) == dict(qv.degrees),
            _first_diff(dict(derived.degrees), dict(qv.degrees)))
    table = hom_dimension_table(summands, m, e)
    expected = [[case_table_value(qv, i, j) for j in range(1, e + 1)] for i in range(1, e + 1)]
    rep.add("Hom dimensions = case table", table == expected, _first_matrix_diff(table, expected))

    closed = cartan_closed_form(qv)
    paths = cartan_from_paths(qv, rel)
    rep.add("Cartan paths = closed form", paths == closed,
            _first_matrix_diff(paths.rows(), closed.rows()))
    rep.add("Cartan at q=1 = Hom dimensions", closed.at_one() == table,
            _first_matrix_diff(closed.at_one(), table))
    det = determinant_report(closed, m)
    rep.add("determinant = 1 + q^e + ... + q^(m e^2)", det.ok, f"residual {det.residual}")

    a0 = extract_a0(qv, rel)
    rq, rrel = recover_quiver(a0)
    rep.add("A0 recovery round trip", same_graded_quiver(rq, qv) and rrel == rel)
    try:
        c0 = a0_cartan(a0)
        rep.add("A0 Cartan unitriangular, = constant terms", c0 == closed.constant_terms(),
                _first_matrix_diff(c0, closed.constant_terms()))
    except AssertionError as exc:
        rep.add("A0 Cartan unitriangular, = constant terms", False, str(exc))
    order = QHOrder.from_a0(a0)
    rep.add("A0 quasi-hereditary order", order.is_partial_order() and order.standard_ok(a0))
    gd, top = a0_global_dimension(a0), max(c.max_level for c in a0.components)
    rep.add("A0 gl.dim <= max level", gd <= top, f"gl.dim {gd} > {top}")

    base = degrees_by_edge(qv)
    bad_start = []
    for start in t.exceptional_edges():
        other, _ = green_graded_quiver(green_number(t, start))
        if degrees_by_edge(other) != base:
            bad_start.append(start)
    rep.add("start-edge independence", not bad_start, f"start edges {bad_start}")

    shifts = positive_shifts(qv, a0)
    shifted = apply_shifts(qv.degrees, shifts)
    rep.add("positive after shifts", all(d > 0 for d in shifted.values()),
            _first_diff({k: v for k, v in shifted.items() if v <= 0}, {}))
    sol = morita_solve(qv, dict(qv.degrees), shifted)
    rep.add("morita_solve recovers the shifts",
            sol is not None and sol.shifts == {v: shifts[v] - shifts[1] for v in sorted(shifts)})
    return rep
