import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heckebound.field import QQ, cyclotomic_field

ORDERS = [4, 6, 8, 10, 12, 14, 16, 24]


def high_precision_value(x):
    """Independent evaluation: sum c_k cos(2 pi k / n) at 60 digits."""
    with mpmath.workdps(60):
        n = x.field.order
        return mpmath.fsum(mpmath.mpf(c) * mpmath.cos(2 * mpmath.pi * k / n)
                           for k, c in enumerate(x.num)) / x.den


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6, 7, 8, 12])
def test_cos_pi_over_m_value(m):
    F = cyclotomic_field(math.lcm(2, 2 * m))
    c = F.cos_pi_over(m)
    assert float(c) == pytest.approx(math.cos(math.pi / m), abs=1e-14)


def test_known_identities():
    F = cyclotomic_field(12)
    c6 = F.cos_pi_over(6)
    assert c6 * c6 == F.rational(Fraction(3, 4))
    assert F.cos_pi_over(3) == Fraction(1, 2)
    assert F.cos_pi_over(2).is_zero()
    H = cyclotomic_field(10)
    phi = H.cos_pi_over(5) * 2
    assert phi * phi - phi - 1 == 0
    R = cyclotomic_field(16)
    c8 = R.cos_pi_over(8)
    assert 2 * c8 * c8 - 1 == R.cos_pi_over(4)


def test_field_mismatch_raises():
    with pytest.raises(ValueError):
        cyclotomic_field(12).one + cyclotomic_field(10).one


def test_cos_outside_field_rejected():
    with pytest.raises(ValueError):
        cyclotomic_field(12).cos_pi_over(5)


def test_rational_field():
    a = QQ.rational(Fraction(-1, 2))
    assert a.sign() == -1
    assert a * 2 == -1
    assert (a / 3) == Fraction(-1, 6)


def test_near_zero_sign_uses_exact_refinement():
    F = cyclotomic_field(12)
    sqrt3 = F.cos_pi_over(6) * 2
    # 1e-17 away from zero: beyond the float pass
    for k in (10 ** 15, 10 ** 17, 10 ** 20):
        num = math.isqrt(3 * k * k)
        x = sqrt3 * k - num
        assert x.sign() == 1
        assert (num + 1 - sqrt3 * k).sign() == 1


real_element = st.builds(
    lambda n, coeffs, den: _real(n, coeffs, den),
    st.sampled_from(ORDERS),
    st.lists(st.integers(-50, 50), min_size=4, max_size=4),
    st.integers(1, 12),
)


def _real(n, coeffs, den):
    F = cyclotomic_field(n)
    total = F.zero
    for k, c in enumerate(coeffs, start=1):
        if n % (2 * k) == 0:
            total = total + F.cos_pi_over(k) * c
        else:
            total = total + F.rational(c)
    return total * Fraction(1, den)


@settings(max_examples=200, deadline=None)
@given(real_element)
def test_sign_matches_high_precision(x):
    v = high_precision_value(x)
    if x.is_zero():
        assert abs(v) < mpmath.mpf(10) ** -50
    else:
        assert x.sign() == (1 if v > 0 else -1)


@settings(max_examples=100, deadline=None)
@given(real_element, real_element)
def test_ring_axioms_and_inverse(a, b):
    if a.field is not b.field:
        b = a.field.rational(Fraction(b.num[0], b.den))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * a == a * a + b * a
    assert a - a == 0
    if not a.is_zero():
        assert a * a.inverse() == 1
    assert float(a * b) == pytest.approx(float(a) * float(b), abs=1e-9)


@settings(max_examples=100, deadline=None)
@given(real_element, real_element)
def test_order_consistent_with_values(a, b):
    if a.field is not b.field:
        return
    lt = a < b
    assert lt == (high_precision_value(b) - high_precision_value(a) > mpmath.mpf(10) ** -40)
    assert not (a < a) and a <= a
