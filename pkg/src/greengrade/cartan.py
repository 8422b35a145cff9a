"""Graded Cartan matrices of Green's-walk graded Brauer tree algebras.

Entry ``c[i][j]`` (Green indices, 1-based in the API, 0-based in storage)
is the graded multiplicity of S_i in P_j, i.e. the sum of q^deg over a
basis of nonzero paths from i to j.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exactmath import LaurentPoly, evaluate_matrix, laurent_det
from .quiver import GradedQuiver, RelationSet


@dataclass(frozen=True)
class GradedCartanMatrix:
    e: int
    entries: tuple[tuple[LaurentPoly, ...], ...]

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        i, j = ij
        return self.entries[i - 1][j - 1]

    def rows(self) -> list[list[LaurentPoly]]:
        return [list(r) for r in self.entries]

    def transpose(self) -> "GradedCartanMatrix":
        return GradedCartanMatrix(self.e, tuple(zip(*self.entries)))

    def at_one(self) -> list[list[int]]:
        return evaluate_matrix(self.rows(), 1)

    def constant_terms(self) -> list[list[int]]:
        return [[p.coeff(0) for p in row] for row in self.entries]

    def total(self) -> int:
        return sum(sum(r) for r in self.at_one())

    def render(self, transpose: bool = False) -> str:
        rows = self.transpose().entries if transpose else self.entries
        cells = [[str(p) for p in r] for r in rows]
        width = max(len(c) for r in cells for c in r)
        return "\n".join("  ".join(c.rjust(width) for c in r) for r in cells) + "\n"

    def latex(self, transpose: bool = False) -> str:
        rows = self.transpose().entries if transpose else self.entries
        body = " \\\\\n".join(" & ".join(p.latex() for p in r) for r in rows)
        return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}\n"


def _arith(start: int, step: int, count: int) -> LaurentPoly:
    return LaurentPoly.geometric(start, step, count)


def cartan_closed_form(qv: GradedQuiver, m: int | None = None, e: int | None = None) -> GradedCartanMatrix:
    """Cartan matrix from the four closed-form clauses of the Green grading."""
    m = qv.m if m is None else m
    e = qv.e if e is None else e
    me = m * e
    exc = set(qv.exceptional_cycle.vertices)
    rows = []
    for i in range(1, e + 1):
        row = []
        for j in range(1, e + 1):
            if i == j:
                p = _arith(0, e, m + 1) if i in exc else LaurentPoly({0: 1, me: 1})
            elif i in exc and j in exc:
                if i > j:
                    p = _arith(i - j, e, m)
                else:
                    p = _arith(e - (j - i), e, m)
            elif qv.same_cycle(i, j):
                p = LaurentPoly(1) if i > j else LaurentPoly.monomial(me)
            else:
                p = LaurentPoly()
            row.append(p)
        rows.append(tuple(row))
    return GradedCartanMatrix(e, tuple(rows))


def _is_zero_word(word: Sequence[str], zero: set, killers: list[tuple[str, ...]]) -> bool:
    for a, b in zip(word, word[1:]):
        if (a, b) in zero:
            return True
    n = len(word)
    for k in killers:
        L = len(k)
        for s in range(n - L + 1):
            if tuple(word[s:s + L]) == k:
                return True
    return False


def nonzero_paths(qv: GradedQuiver, rel: RelationSet) -> list[tuple[int, int, tuple[str, ...]]]:
    """A basis of A_Gamma as (source, target, arrow word) triples.

    Words are extended one arrow at a time and abandoned once they contain a
    zero pair, a truncation word, or a socle word with one more arrow on
    either side. At a vertex on two cycles the two socle words are equal, so
    only the first is kept.
    """
    zero = set(rel.zero)
    killers = [tuple(w) for _, w in rel.truncations]
    for _, w1, w2 in rel.equalities:
        for w in (w1, w2):
            for a in qv.arrows_from(qv.arrow(w[-1]).target):
                killers.append(tuple(w) + (a.id,))
            for a in qv.arrows_to(qv.arrow(w[0]).source):
                killers.append((a.id,) + tuple(w))
    duplicate = {tuple(w2) for _, _, w2 in rel.equalities}
    bound = max((len(k) for k in killers), default=1) + 1

    out = []
    for i in range(1, qv.e + 1):
        out.append((i, i, ()))
        stack = [(i, ())]
        while stack:
            v, word = stack.pop()
            for a in qv.arrows_from(v):
                w = word + (a.id,)
                if _is_zero_word(w, zero, killers):
                    continue
                if len(w) > bound:
                    raise ArithmeticError("relations do not bound path length")
                if w not in duplicate:
                    out.append((i, a.target, w))
                stack.append((a.target, w))
    return out


def cartan_from_paths(qv: GradedQuiver, rel: RelationSet) -> GradedCartanMatrix:
    """Cartan matrix by enumerating the nonzero paths of the graded quiver."""
    e = qv.e
    acc = [[dict() for _ in range(e)] for _ in range(e)]
    for i, j, word in nonzero_paths(qv, rel):
        d = qv.word_degree(word)
        cell = acc[i - 1][j - 1]
        cell[d] = cell.get(d, 0) + 1
    return GradedCartanMatrix(e, tuple(tuple(LaurentPoly(c) for c in row) for row in acc))


def expected_determinant(m: int, e: int) -> LaurentPoly:
    """1 + q^e + q^{2e} + ... + q^{m e^2}."""
    return _arith(0, e, m * e + 1)


@dataclass(frozen=True)
class DeterminantReport:
    determinant: LaurentPoly
    expected: LaurentPoly

    @property
    def residual(self) -> LaurentPoly:
        return self.determinant - self.expected

    @property
    def ok(self) -> bool:
        return self.residual.is_zero()


def cartan_determinant(C: GradedCartanMatrix, m: int | None = None,
                       method: str = "auto") -> LaurentPoly:
    """Exact determinant; with ``m`` given, a mismatch with the expected
    geometric series raises ``ArithmeticError`` showing the residual."""
    det = laurent_det(C.rows(), method=method)
    if m is not None:
        rep = DeterminantReport(det, expected_determinant(m, C.e))
        if not rep.ok:
            raise ArithmeticError(f"determinant {det} differs from {rep.expected} by {rep.residual}")
    return det


def determinant_report(C: GradedCartanMatrix, m: int) -> DeterminantReport:
    return DeterminantReport(laurent_det(C.rows()), expected_determinant(m, C.e))
