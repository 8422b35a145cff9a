"""Command-line interface: ``greengrade <command> ...``.

Exit status is 0 when everything checked passes, 1 on a failed check and
2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from .a0 import (A0Error, a0_cartan, a0_global_dimension, extract_a0, recover_quiver,
                 trivial_extension_check)
from .aut_group import HmError, hm_decompose, hm_inv, hm_mul, parse_element
from .cartan import cartan_closed_form, cartan_from_paths, determinant_report
from .exactmath import parse_field
from .green_walk import green_number
from .quiver import green_graded_quiver, quiver_json
from .regrading import (RegradingError, apply_shifts, morita_solve, normalize,
                        positive_shifts)
from .tree import TreeError, load_tree, random_tree
from .verify import Report, verify_tree


class UsageError(Exception):
    pass


def _tree(path: str):
    try:
        return load_tree(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _graded(args):
    n = green_number(_tree(args.tree), args.start)
    qv, rel = green_graded_quiver(n)
    return n, qv, rel


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def cmd_walk(args, out) -> int:
    n = green_number(_tree(args.tree), args.start)
    for i in range(1, n.e + 1):
        pred = n.predecessor[i]
        out.write(f"{i}\t{n.edge(i)}\t{n.delta[i]}\t{'-' if pred is None else pred}\n")
    return 0


def cmd_grade(args, out) -> int:
    _, qv, rel = _graded(args)
    if args.dot:
        out.write(qv.to_dot())
    elif args.latex:
        out.write(qv.to_latex())
    elif args.json:
        out.write(quiver_json(qv, rel) + "\n")
    else:
        for a in qv.arrows:
            tag = " (exceptional)" if qv.cycle(a.cycle).exceptional else ""
            out.write(f"{a.id}\t{qv.degree(a.id)}{tag}\n")
    return 0


def cmd_cartan(args, out) -> int:
    _, qv, rel = _graded(args)
    C = cartan_from_paths(qv, rel) if args.paths else cartan_closed_form(qv)
    out.write(C.latex(args.transpose) if args.latex else C.render(args.transpose))
    if args.det:
        rep = determinant_report(C, qv.m)
        out.write(f"det = {rep.determinant}\n")
        if not rep.ok:
            out.write(f"FAIL determinant residual {rep.residual}\n")
            return 1
    return 0


def cmd_a0(args, out) -> int:
    _, qv, rel = _graded(args)
    a = extract_a0(qv, rel)
    for c in a.components:
        out.write(f"component root {c.root}: vertices {list(c.vertices)}\n")
        for s, t in c.arrows:
            out.write(f"  {s}->{t}\tlevel {c.levels[s]}\n")
        for x, y in c.relations():
            out.write(f"  zero: {x} . {y}\n")
    status = 0
    if args.cartan:
        for row in a0_cartan(a):
            out.write(" ".join(str(x) for x in row) + "\n")
    if args.gldim:
        gd = a0_global_dimension(a)
        top = max(c.max_level for c in a.components)
        out.write(f"gl.dim = {gd} (max level {top})\n")
        if gd > top:
            status = 1
    if args.recover:
        rq, rrel = recover_quiver(a)
        same = rq.same_shape(qv) and dict(rq.degrees) == dict(qv.degrees) and rrel == rel
        for ar in rq.arrows:
            out.write(f"recovered {ar.id}\t{rq.degree(ar.id)}\n")
        out.write(("PASS" if same else "FAIL") + " recovery matches the graded quiver\n")
        status = status or (0 if same else 1)
    return status


def cmd_trivext(args, out) -> int:
    rep = trivial_extension_check(_tree(args.tree))
    out.write(f"dim A0 = {rep.dim_a0}, dim A = {rep.dim_algebra}\n")
    for name in ("relations_ok", "bijective", "table_ok", "grading_ok"):
        out.write(f"{'PASS' if getattr(rep, name) else 'FAIL'} {name.replace('_ok', '')}\n")
    return 0 if rep.ok else 1


def cmd_shifts(args, out) -> int:
    _, qv, rel = _graded(args)
    if args.vector:
        vec = _ints(args.vector)
        if len(vec) != qv.e:
            raise UsageError(f"--vector needs {qv.e} entries, got {len(vec)}")
        n = dict(enumerate(vec, start=1))
    else:
        n = positive_shifts(qv, extract_a0(qv, rel))
        out.write("n = " + ",".join(str(n[i]) for i in range(1, qv.e + 1)) + "\n")
    shifted = apply_shifts(qv.degrees, n)
    for aid in qv.arrow_ids():
        out.write(f"{aid}\t{qv.degree(aid)}\t{shifted[aid]}\n")
    return 0


def cmd_morita(args, out) -> int:
    _, qv, _ = _graded(args)
    try:
        with open(args.other) as fh:
            other = {str(k): int(v) for k, v in json.load(fh).items()}
    except (OSError, ValueError, AttributeError) as exc:
        raise UsageError(f"cannot read grading {args.other}: {exc}") from None
    sol = morita_solve(qv, dict(qv.degrees), other, allow_rescale=args.rescale)
    if sol is None:
        out.write("no shift vector relates the two gradings\n")
        return 1
    out.write(f"scale = {sol.scale}\n")
    out.write("n = " + ",".join(str(sol.shifts[i]) for i in range(1, qv.e + 1)) + "\n")
    return 0


def cmd_hm(args, out) -> int:
    field = parse_field(args.field)
    elems = [parse_element(x, field) for x in args.values]
    for x in elems:
        if x.m != args.m:
            raise UsageError(f"tuple {x} does not have m = {args.m} entries")
    if args.op == "mul":
        if len(elems) != 2:
            raise UsageError("mul takes two tuples b a and prints b * a")
        out.write(f"{hm_mul(elems[0], elems[1])}\n")
    elif args.op == "inv":
        if len(elems) != 1:
            raise UsageError("inv takes one tuple")
        out.write(f"{hm_inv(elems[0])}\n")
    else:
        if len(elems) != 1:
            raise UsageError("decompose takes one tuple")
        torus, uni = hm_decompose(elems[0], args.order)
        out.write(f"torus {torus}\nunipotent {uni}\n")
    return 0


def cmd_verify(args, out) -> int:
    rep: Report = verify_tree(_tree(args.tree))
    out.write(rep.text())
    return 0 if rep.ok else 1


def cmd_random(args, out) -> int:
    seed = args.seed if args.seed is not None else random.SystemRandom().randrange(2 ** 32)
    sys.stderr.write(f"seed {seed}\n")
    t = random_tree(random.Random(seed), args.e, args.m)
    out.write(t.to_json() + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="greengrade",
                                description="Green's-walk gradings of Brauer tree algebras")
    sub = p.add_subparsers(dest="command", required=True)

    def tree_cmd(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("tree", help="tree JSON file")
        sp.add_argument("--start", help="edge at the exceptional vertex to start the walk")
        sp.set_defaults(fn=fn)
        return sp

    tree_cmd("walk", cmd_walk, "print the Green's walk numbering")
    g = tree_cmd("grade", cmd_grade, "graded quiver of the tree")
    fmt = g.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--latex", action="store_true")

    c = tree_cmd("cartan", cmd_cartan, "graded Cartan matrix")
    how = c.add_mutually_exclusive_group()
    how.add_argument("--paths", action="store_true", help="enumerate nonzero paths")
    how.add_argument("--closed", action="store_true", help="closed form (default)")
    c.add_argument("--det", action="store_true")
    c.add_argument("--latex", action="store_true")
    c.add_argument("--transpose", action="store_true", help="rows indexed by projectives")

    a = tree_cmd("a0", cmd_a0, "degree-zero subalgebra")
    a.add_argument("--recover", action="store_true")
    a.add_argument("--cartan", action="store_true")
    a.add_argument("--gldim", action="store_true")

    tree_cmd("trivext", cmd_trivext, "trivial extension check (Brauer lines, m=1)")

    s = tree_cmd("shifts", cmd_shifts, "apply a shift vector (default: 1 + level)")
    s.add_argument("--vector", help="n1,...,ne")

    mo = tree_cmd("morita", cmd_morita, "solve for shifts relating two gradings")
    mo.add_argument("--other", required=True, help='grading JSON {"i->j": degree}')
    mo.add_argument("--rescale", action="store_true")

    h = sub.add_parser("hm", help="arithmetic in H_m")
    h.add_argument("--m", type=int, required=True)
    h.add_argument("--field", default=None, help="prime p for GF(p); rationals by default")
    h.add_argument("--order", default="unipotent-torus",
                   choices=["unipotent-torus", "torus-unipotent"])
    h.add_argument("op", choices=["mul", "inv", "decompose"])
    h.add_argument("values", nargs="+", help="tuples a1,...,am")
    h.set_defaults(fn=cmd_hm)

    v = sub.add_parser("verify", help="run every cross-check on a tree")
    v.add_argument("tree")
    v.set_defaults(fn=cmd_verify)

    r = sub.add_parser("random", help="print a seeded random tree")
    r.add_argument("--e", type=int, required=True)
    r.add_argument("--m", type=int, default=1)
    r.add_argument("--seed", type=int)
    r.set_defaults(fn=cmd_random)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args, out)
    except (UsageError, TreeError, A0Error, HmError, RegradingError) as exc:
        sys.stderr.write(f"greengrade: error: {exc}\n")
        return 2


def run(argv) -> int:
    try:
        return main(argv)
    except SystemExit as exc:
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
