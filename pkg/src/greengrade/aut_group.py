"""The group H_m of m-tuples (a1, ..., am), a1 != 0.

The tuple a stands for the automorphism x -> a1 x + a2 x^2 + ... + am x^m
of k[x]/(x^(m+1)), and ``hm_mul(b, a)`` is the tuple of "a applied after
b": substitute b's polynomial into a's. Coefficients live in any field
whose elements support + - * / (Fractions by default, or Fp).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .exactmath import QQ


class HmError(ValueError):
    pass


@dataclass(frozen=True)
class HmElement:
    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise HmError("an element of H_m needs m >= 1 coordinates")
        if self.coeffs[0] == 0:
            raise HmError("first coordinate must be nonzero")

    @classmethod
    def of(cls, values: Sequence, field=QQ) -> "HmElement":
        return cls(tuple(field(v) for v in values))

    @property
    def m(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int):
        """1-based coordinate access, matching a1..am."""
        return self.coeffs[i - 1]

    def __mul__(self, other: "HmElement") -> "HmElement":
        return hm_mul(self, other)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coeffs) + ")"


def identity(m: int, field=QQ) -> HmElement:
    return HmElement((field.one,) + (field.zero,) * (m - 1))


def _poly_mul(p: Sequence, q: Sequence, m: int, zero) -> list:
    """Product of coefficient lists (index = exponent) truncated above x^m."""
    out = [zero] * (m + 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            if i + j > m:
                break
            out[i + j] = out[i + j] + a * b
    return out


def hm_mul(b: HmElement, a: HmElement) -> HmElement:
    """(b * a)_l = sum_i a_i * sum_{k1+...+ki = l} b_k1 ... b_ki."""
    if a.m != b.m:
        raise HmError(f"mismatched m: {b.m} and {a.m}")
    m = a.m
    zero = a.coeffs[0] * 0
    base = [zero] + list(b.coeffs)          # b(x) as coefficients of x^0..x^m
    power = [zero] * (m + 1)
    power[0] = zero + 1                     # b(x)^0
    total = [zero] * (m + 1)
    for i in range(1, m + 1):
        power = _poly_mul(power, base, m, zero)
        for l in range(m + 1):
            total[l] = total[l] + a.coeffs[i - 1] * power[l]
    return HmElement(tuple(total[1:]))


def hm_mul_formula(b: HmElement, a: HmElement) -> HmElement:
    """Same product by literally summing over compositions k1+...+ki = l."""
    m = a.m
    zero = a.coeffs[0] * 0
    out = []
    for l in range(1, m + 1):
        acc = zero
        for i in range(1, l + 1):
            inner = zero
            for ks in product(range(1, l + 1), repeat=i):
                if sum(ks) != l:
                    continue
                term = zero + 1
                for k in ks:
                    term = term * b.coeffs[k - 1]
                inner = inner + term
            acc = acc + a.coeffs[i - 1] * inner
        out.append(acc)
    return HmElement(tuple(out))


def hm_inv(a: HmElement) -> HmElement:
    """Two-sided inverse, solved one coordinate at a time.

    Writing the unknown as c, (c * a)_l = a1 c_l + (terms in c_1..c_{l-1}),
    so each c_l follows from requiring (c * a)_l = 0 for l > 1.
    """
    m = a.m
    zero = a.coeffs[0] * 0
    c = [1 / a.coeffs[0]] + [zero] * (m - 1)
    for l in range(2, m + 1):
        trial = hm_mul(HmElement(tuple(c)), a)
        # c_l enters coordinate l only through a1 * c_l
        c[l - 1] = -trial.coeffs[l - 1] / a.coeffs[0]
    inv = HmElement(tuple(c))
    one = identity(m, _field_of(a))
    if hm_mul(inv, a) != one or hm_mul(a, inv) != one:
        raise ArithmeticError("inverse failed to verify")
    return inv


class _FieldOf:
    def __init__(self, sample):
        self.zero = sample * 0
        self.one = self.zero + 1


def _field_of(a: HmElement):
    return _FieldOf(a.coeffs[0])


@dataclass(frozen=True)
class TruncatedPolyMap:
    """The endomorphism of k[x]/(x^(m+1)) sending x to sum coeffs[j-1] x^j."""

    coeffs: tuple

    @property
    def m(self) -> int:
        return len(self.coeffs)

    @property
    def is_automorphism(self) -> bool:
        return self.coeffs[0] != 0

    def image_of(self, poly: Sequence) -> list:
        """Apply the map to a truncated polynomial given by coefficients of x^0..x^m."""
        m = self.m
        zero = self.coeffs[0] * 0
        x_image = [zero] + list(self.coeffs)
        out = [zero] * (m + 1)
        power = [zero] * (m + 1)
        power[0] = zero + 1
        for j, c in enumerate(poly[: m + 1]):
            if j:
                power = _poly_mul(power, x_image, m, zero)
            for l in range(m + 1):
                out[l] = out[l] + c * power[l]
        return out

    @classmethod
    def from_element(cls, a: HmElement) -> "TruncatedPolyMap":
        return cls(a.coeffs)

    def to_element(self) -> HmElement:
        return HmElement(self.coeffs)


def hm_oracle_compose(f: TruncatedPolyMap, g: TruncatedPolyMap) -> TruncatedPolyMap:
    """f o g as algebra maps (f applied after g).

    The image of x is g's polynomial with f applied to it, sum g_j f(x)^j.
    """
    if f.m != g.m:
        raise HmError(f"mismatched m: {f.m} and {g.m}")
    zero = f.coeffs[0] * 0
    image = f.image_of([zero] + [zero + 1] + [zero] * (f.m - 1))  # f(x)
    out = [zero] * (f.m + 1)
    power = [zero] * (f.m + 1)
    power[0] = zero + 1
    for j in range(1, f.m + 1):
        power = _poly_mul(power, image, f.m, zero)
        for l in range(f.m + 1):
            out[l] = out[l] + g.coeffs[j - 1] * power[l]
    return TruncatedPolyMap(tuple(out[1:]))


def hm_decompose(a: HmElement, order: str = "unipotent-torus") -> tuple[HmElement, HmElement]:
    """Split a into (torus, unipotent) parts.

    ``order="unipotent-torus"`` gives hm_mul(unipotent, torus) == a;
    ``order="torus-unipotent"`` gives hm_mul(torus, unipotent) == a.
    """
    m = a.m
    zero = a.coeffs[0] * 0
    a1 = a.coeffs[0]
    torus = HmElement((a1,) + (zero,) * (m - 1))
    if order == "unipotent-torus":
        u = HmElement(tuple(c / a1 for c in a.coeffs))
        ok = hm_mul(u, torus) == a
    elif order == "torus-unipotent":
        u = HmElement(tuple(c / a1 ** l for l, c in enumerate(a.coeffs, start=1)))
        ok = hm_mul(torus, u) == a
    else:
        raise HmError(f"unknown order {order!r}")
    if not ok:
        raise ArithmeticError("decomposition failed to recombine")
    return torus, u


def in_torus(a: HmElement) -> bool:
    return all(c == 0 for c in a.coeffs[1:])


def in_unipotent(a: HmElement) -> bool:
    return a.coeffs[0] == 1


def parse_element(text: str, field=QQ) -> HmElement:
    try:
        values = [Fraction(x.strip()) for x in text.split(",") if x.strip()]
    except ValueError:
        raise HmError(f"cannot parse tuple {text!r}") from None
    return HmElement.of(values, field)
