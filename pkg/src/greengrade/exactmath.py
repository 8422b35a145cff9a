"""Exact scalars, Laurent polynomials in q, and small exact linear algebra.

Nothing in this package touches floating point. Scalars are either
``fractions.Fraction`` (the default) or elements of a prime field built by
:class:`PrimeField`.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence


class DimensionError(ValueError):
    """Matrix or vector shapes do not fit together."""


# ---------------------------------------------------------------------------
# scalar fields


class Fp:
    """Element of the prime field GF(p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.p = p
        self.value = value % p

    def _coerce(self, other) -> "Fp":
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError(f"mixing GF({self.p}) and GF({other.p})")
            return other
        if isinstance(other, int):
            return Fp(other, self.p)
        if isinstance(other, Fraction):
            return Fp(other.numerator, self.p) / Fp(other.denominator, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        return Fp(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return Fp(self.value - other.value, self.p)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return Fp(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.value, self.p)

    def inverse(self) -> "Fp":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return Fp(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return Fp(pow(self.value, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Fp)):
            try:
                other = self._coerce(other)
            except ZeroDivisionError:
                return False
            return self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Fp({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


class Rationals:
    """The field Q, realised by ``Fraction``."""

    name = "QQ"

    def __call__(self, x) -> Fraction:
        return Fraction(x)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "Rationals()"


class PrimeField:
    """GF(p); ``p`` is trusted to be prime."""

    def __init__(self, p: int = 32003):
        if p < 2:
            raise ValueError(f"p must be >= 2, got {p}")
        self.p = p
        self.name = f"GF({p})"

    def __call__(self, x) -> Fp:
        if isinstance(x, Fp):
            return x
        if isinstance(x, Fraction):
            return Fp(x.numerator, self.p) / x.denominator
        return Fp(int(x), self.p)

    @property
    def zero(self) -> Fp:
        return Fp(0, self.p)

    @property
    def one(self) -> Fp:
        return Fp(1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


QQ = Rationals()


def parse_field(name: str | int | None):
    """``None``/``"QQ"`` gives the rationals, an integer ``p`` gives GF(p)."""
    if name is None or name in ("QQ", "Q", "rationals"):
        return QQ
    return PrimeField(int(name))


# ---------------------------------------------------------------------------
# Laurent polynomials


class LaurentPoly:
    """Immutable element of Z[q, q^-1]."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | int = ()):
        if isinstance(terms, int):
            terms = {0: terms}
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for exp, coeff in items:
            acc[int(exp)] = acc.get(int(exp), 0) + int(coeff)
        self._terms = tuple(sorted((k, v) for k, v in acc.items() if v != 0))

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def geometric(cls, start: int, step: int, count: int) -> "LaurentPoly":
        """q^start + q^(start+step) + ... with ``count`` terms."""
        return cls({start + k * step: 1 for k in range(count)})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return iter(self._terms)

    def coeff(self, exp: int) -> int:
        return dict(self._terms).get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no valuation")
        return self._terms[0][0]

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return self._terms[-1][0]

    def __call__(self, q):
        return self.evaluate(q)

    def evaluate(self, q):
        total = 0
        for exp, coeff in self._terms:
            total += coeff * (Fraction(q) ** exp if exp < 0 else q ** exp)
        return total

    @staticmethod
    def _lift(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return LaurentPoly(itertools.chain(self._terms, other._terms))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly((k, -v) for k, v in self._terms)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for a, x in self._terms:
            for b, y in other._terms:
                acc[a + b] = acc.get(a + b, 0) + x * y
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1 or abs(self._terms[0][1]) != 1:
                raise ValueError("only units of Z[q, q^-1] have negative powers")
            exp, coeff = self._terms[0]
            return LaurentPoly({exp * n: coeff ** n})
        result = LaurentPoly(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient when ``other`` divides ``self``; raises otherwise."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        rem = dict(self._terms)
        lead_exp, lead = other._terms[-1]
        low = other._terms[0][0]
        quot: dict[int, int] = {}
        # top-down long division; stops once the remainder cannot contain other
        while rem:
            top = max(rem)
            if top - lead_exp < min(rem) - low:
                break
            c = rem[top]
            if c % lead:
                raise ValueError(f"{other} does not divide {self}")
            k = c // lead
            shift = top - lead_exp
            quot[shift] = quot.get(shift, 0) + k
            for exp, coeff in other._terms:
                v = rem.get(exp + shift, 0) - k * coeff
                if v:
                    rem[exp + shift] = v
                else:
                    rem.pop(exp + shift, None)
        if rem:
            raise ValueError(f"{other} does not divide {self}")
        return LaurentPoly(quot)

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"LaurentPoly({dict(self._terms)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for exp, coeff in self._terms:
            mag = abs(coeff)
            if exp == 0:
                body = str(mag)
            else:
                var = "q" if exp == 1 else f"q^{exp}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not out:
                out.append(body if coeff > 0 else f"-{body}")
            else:
                out.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(out)

    def latex(self) -> str:
        return _latex_terms(self)


def _latex_terms(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for exp, coeff in p.items():
        mag = abs(coeff)
        if exp == 0:
            body = str(mag)
        else:
            var = "q" if exp == 1 else f"q^{{{exp}}}"
            body = var if mag == 1 else f"{mag}{var}"
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(parts)


q = LaurentPoly.monomial(1)


# ---------------------------------------------------------------------------
# determinants


def _check_square(M: Sequence[Sequence]) -> int:
    n = len(M)
    for row in M:
        if len(row) != n:
            raise DimensionError(f"matrix is not square: {n} rows, row of length {len(row)}")
    return n


def cofactor_det(M: Sequence[Sequence], zero=0, one=1):
    """Laplace expansion along the first row. Exponential; small matrices only."""
    n = _check_square(M)
    if n == 0:
        return one
    if n == 1:
        return M[0][0]
    total = zero
    for j in range(n):
        entry = M[0][j]
        if not entry:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = entry * cofactor_det(minor, zero, one)
        total = total + term if j % 2 == 0 else total - term
    return total


def bareiss_det(M: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free elimination over Z[q, q^-1]."""
    n = _check_square(M)
    if n == 0:
        return LaurentPoly(1)
    A = [[LaurentPoly._lift(x) for x in row] for row in M]
    sign = 1
    prev = LaurentPoly(1)
    for k in range(n - 1):
        if A[k][k].is_zero():
            for r in range(k + 1, n):
                if not A[r][k].is_zero():
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly()
        pivot = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (pivot * A[i][j] - A[i][k] * A[k][j]).divexact(prev)
            A[i][k] = LaurentPoly()
        prev = pivot
    return A[n - 1][n - 1] * sign


def laurent_det(M: Sequence[Sequence[LaurentPoly]], method: str = "auto") -> LaurentPoly:
    """Exact determinant of a square matrix of Laurent polynomials.

    ``method`` is ``"cofactor"``, ``"bareiss"`` or ``"auto"`` (cofactor up to
    6x6, Bareiss above).
    """
    n = _check_square(M)
    if method == "auto":
        method = "cofactor" if n <= 6 else "bareiss"
    if method == "cofactor":
        rows = [[LaurentPoly._lift(x) for x in row] for row in M]
        return cofactor_det(rows, LaurentPoly(), LaurentPoly(1))
    if method == "bareiss":
        return bareiss_det(M)
    raise ValueError(f"unknown determinant method {method!r}")


def evaluate_matrix(M: Sequence[Sequence[LaurentPoly]], value) -> list[list]:
    return [[LaurentPoly._lift(x).evaluate(value) for x in row] for row in M]


# ---------------------------------------------------------------------------
# linear systems


class SolutionSpace:
    """Affine solution set ``particular + span(kernel)`` of ``A x = b``.

    ``particular`` is ``None`` when the system is inconsistent.
    """

    def __init__(self, particular, kernel, rank: int):
        self.particular = particular
        self.kernel = kernel
        self.rank = rank

    @property
    def consistent(self) -> bool:
        return self.particular is not None

    @property
    def nullity(self) -> int:
        return len(self.kernel)

    def __repr__(self):
        return (
            f"SolutionSpace(consistent={self.consistent}, rank={self.rank}, "
            f"nullity={self.nullity})"
        )


def rref(A: Sequence[Sequence], field=QQ):
    """Reduced row echelon form; returns ``(rows, pivot_columns)``."""
    R = [[field(x) for x in row] for row in A]
    ncols = len(R[0]) if R else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(R)) if R[i][c] != 0), None)
        if pr is None:
            continue
        R[r], R[pr] = R[pr], R[r]
        inv = field.one / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(len(R)):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == len(R):
            break
    return R, pivots


def rank(A: Sequence[Sequence], field=QQ) -> int:
    if not A or not A[0]:
        return 0
    return len(rref(A, field)[1])


def solve_linear(A: Sequence[Sequence], b: Sequence | None = None, field=QQ,
                 ncols: int | None = None) -> SolutionSpace:
    """Solve ``A x = b`` exactly over ``field``.

    ``b`` defaults to the zero vector. ``ncols`` is required when ``A`` has
    no rows.
    """
    nrows = len(A)
    if nrows:
        n = len(A[0])
        if any(len(row) != n for row in A):
            raise DimensionError("ragged matrix")
        if ncols is not None and ncols != n:
            raise DimensionError(f"ncols={ncols} but matrix has {n} columns")
    else:
        if ncols is None:
            raise DimensionError("ncols is required for an empty system")
        n = ncols
    if b is None:
        b = [0] * nrows
    if len(b) != nrows:
        raise DimensionError(f"right-hand side has length {len(b)}, expected {nrows}")
    if nrows == 0:
        kernel = [[field.one if i == j else field.zero for i in range(n)] for j in range(n)]
        return SolutionSpace([field.zero] * n, kernel, 0)

    aug = [list(row) + [rhs] for row, rhs in zip(A, b)]
    R, pivots = rref(aug, field)
    if n in pivots:
        pivots = [p for p in pivots if p != n]
        return SolutionSpace(None, _kernel_from_rref(R, pivots, n, field), len(pivots))
    particular = [field.zero] * n
    for row, p in zip(R, pivots):
        particular[p] = row[n]
    return SolutionSpace(particular, _kernel_from_rref(R, pivots, n, field), len(pivots))


def _kernel_from_rref(R, pivots, n, field):
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * n
        v[f] = field.one
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def mat_vec(A: Sequence[Sequence], x: Sequence, zero=0) -> list:
    out = []
    for row in A:
        if len(row) != len(x):
            raise DimensionError("matrix/vector length mismatch")
        acc = zero
        for a, v in zip(row, x):
            acc = acc + a * v
        out.append(acc)
    return out


def identity_matrix(n: int, one=1, zero=0) -> list[list]:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def map_matrix(M: Sequence[Sequence], fn: Callable) -> list[list]:
    return [[fn(x) for x in row] for row in M]
