import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from greengrade.aut_group import (HmElement, HmError, TruncatedPolyMap, hm_decompose, hm_inv,
                                  hm_mul, hm_mul_formula, hm_oracle_compose, identity,
                                  in_torus, in_unipotent)
from greengrade.exactmath import PrimeField


def rand_elem(rng, m, field=None):
    vals = [rng.choice([x for x in range(-9, 10) if x])] + [rng.randint(-9, 9) for _ in range(m - 1)]
    vals = [Fraction(v, rng.randint(1, 4)) for v in vals]
    return HmElement.of(vals) if field is None else HmElement.of(vals, field)


def substitute(outer, inner, m):
    """Coefficients of outer(inner(x)) mod x^(m+1); both given as a1..am."""
    result = [Fraction(0)] * (m + 1)
    power = [Fraction(1)] + [Fraction(0)] * m
    inner_full = [Fraction(0)] + list(inner)
    for c in outer:
        nxt = [Fraction(0)] * (m + 1)
        for i, x in enumerate(power):
            for j, y in enumerate(inner_full):
                if i + j <= m:
                    nxt[i + j] += x * y
        power = nxt
        result = [r + c * p for r, p in zip(result, power)]
    return tuple(result[1:])


def test_worked_example_m2():
    b, a = HmElement.of([2, 1]), HmElement.of([3, 5])
    assert hm_mul(b, a).coeffs == (6, 23)
    f, g = TruncatedPolyMap(b.coeffs), TruncatedPolyMap(a.coeffs)
    assert hm_oracle_compose(f, g).coeffs == (6, 23)


def test_m3_displayed_expansion():
    rng = random.Random(3)
    for _ in range(50):
        b, a = rand_elem(rng, 3), rand_elem(rng, 3)
        b1, b2, b3 = b.coeffs
        a1, a2, a3 = a.coeffs
        assert hm_mul(b, a).coeffs == (a1 * b1, a1 * b2 + a2 * b1 ** 2,
                                       a1 * b3 + 2 * a2 * b1 * b2 + a3 * b1 ** 3)


def test_identity_and_inverse_examples():
    a = HmElement.of([3, 5, 7])
    assert hm_mul(identity(3), a) == a == hm_mul(a, identity(3))
    assert hm_inv(HmElement.of([4, 0, 0])) == HmElement.of([Fraction(1, 4), 0, 0])
    b1, b2 = Fraction(2), Fraction(3)
    assert hm_inv(HmElement.of([b1, b2])) == HmElement.of([1 / b1, -b2 / b1 ** 3])


def test_rejections():
    with pytest.raises(HmError):
        HmElement.of([0, 1])
    with pytest.raises(HmError):
        hm_mul(HmElement.of([1]), HmElement.of([1, 2]))
    with pytest.raises(HmError):
        hm_decompose(HmElement.of([1, 2]), order="sideways")


def test_decomposition_examples():
    torus, uni = hm_decompose(HmElement.of([2, 6]))
    assert torus == HmElement.of([2, 0]) and in_unipotent(uni)
    assert hm_mul(uni, torus) == HmElement.of([2, 6])
    t2, u2 = hm_decompose(HmElement.of([5, 0, 0]))
    assert t2 == HmElement.of([5, 0, 0]) and u2 == identity(3)
    t3, u3 = hm_decompose(HmElement.of([1, 4, 2]))
    assert t3 == identity(3) and u3 == HmElement.of([1, 4, 2])


@pytest.mark.parametrize("m", range(1, 7))
def test_group_axioms_random(m):
    rng = random.Random(1000 + m)
    one = identity(m)
    for _ in range(170):
        a, b, c = rand_elem(rng, m), rand_elem(rng, m), rand_elem(rng, m)
        assert hm_mul(hm_mul(a, b), c) == hm_mul(a, hm_mul(b, c))
        inv = hm_inv(a)
        assert hm_mul(inv, a) == one == hm_mul(a, inv)


@pytest.mark.parametrize("m", range(1, 7))
def test_tuple_product_matches_substitution(m):
    rng = random.Random(2000 + m)
    for _ in range(100):
        b, a = rand_elem(rng, m), rand_elem(rng, m)
        expected = substitute(a.coeffs, b.coeffs, m)
        assert hm_mul(b, a).coeffs == expected
        assert hm_mul_formula(b, a).coeffs == expected
        composed = hm_oracle_compose(TruncatedPolyMap(b.coeffs), TruncatedPolyMap(a.coeffs))
        assert composed.coeffs == expected


@settings(max_examples=100)
@given(st.integers(0, 10 ** 6), st.integers(1, 6))
def test_decomposition_and_normality(seed, m):
    rng = random.Random(seed)
    a, b = rand_elem(rng, m), rand_elem(rng, m)
    for order in ("unipotent-torus", "torus-unipotent"):
        torus, uni = hm_decompose(a, order)
        assert in_torus(torus) and in_unipotent(uni)
        assert (hm_mul(uni, torus) if order == "unipotent-torus" else hm_mul(torus, uni)) == a
    ta, tb = hm_decompose(a)[0], hm_decompose(b)[0]
    assert hm_decompose(hm_mul(a, b))[0] == hm_mul(ta, tb)
    u = hm_decompose(b)[1]
    assert in_unipotent(hm_mul(hm_mul(hm_inv(a), u), a))
    assert in_unipotent(hm_mul(u, hm_decompose(a)[1]))


def test_prime_field():
    F = PrimeField(101)
    rng = random.Random(9)
    for _ in range(50):
        a = rand_elem(rng, 4, F)
        assert hm_mul(hm_inv(a), a) == identity(4, F)
