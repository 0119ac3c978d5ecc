"""Exact arithmetic in cyclotomic number fields.

Every value of the bilinear form of a Coxeter system with finite labels
lies in the real subfield of ``Q(zeta_n)`` where ``n = lcm(2 m_st)``.
Elements are stored as rational coefficient vectors in the power basis
``1, zeta, ..., zeta^(phi(n)-1)``, so the zero test is exact.  Signs are
decided by a fast floating point pass with a generous error bound, falling
back to interval arithmetic of increasing precision.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache, reduce
from numbers import Rational

import mpmath

__all__ = ["CyclotomicField", "ExactReal", "cyclotomic_field", "QQ"]

# float pass: |computed - exact| <= _FLOAT_SLACK * sum(|c_k|) / den, far
# above the true worst case for phi(n) <= 64 terms
_FLOAT_SLACK = 1e-11
_START_PREC = 96


class CyclotomicField:
    """The field ``Q(zeta_n)``; use :func:`cyclotomic_field` to get instances."""

    def __init__(self, order: int):
        if order < 1:
            raise ValueError("cyclotomic order must be positive")
        from sympy import Symbol, cyclotomic_poly

        t = Symbol("t")
        coeffs = [int(c) for c in cyclotomic_poly(order, t, polys=True).all_coeffs()]
        self.order = order
        self.modulus = tuple(reversed(coeffs))  # low to high, monic
        self.degree = len(self.modulus) - 1

        d = self.degree
        table = []
        power = [-c for c in self.modulus[:d]]  # t^d mod Phi_n
        for _ in range(max(d - 1, 0)):
            table.append(tuple(power))
            top = power[-1]
            power = [0] + power[:-1]
            if top:
                for j in range(d):
                    power[j] -= top * self.modulus[j]
        self._reduce_table = table
        self._cos = tuple(math.cos(2 * math.pi * k / order) for k in range(d))

        self.zero = ExactReal(self, (0,) * d, 1)
        self.one = self.rational(1)

    def __repr__(self):
        return f"CyclotomicField({self.order})"

    def __reduce__(self):
        return (cyclotomic_field, (self.order,))

    def reduce_poly(self, coeffs) -> list[int]:
        """Reduce an integer coefficient list (low to high) modulo Phi_n."""
        d = self.degree
        out = list(coeffs[:d]) + [0] * max(0, d - len(coeffs))
        for k in range(d, len(coeffs)):
            c = coeffs[k]
            if not c:
                continue
            if k - d < len(self._reduce_table):
                row = self._reduce_table[k - d]
            else:
                row = self._power_row(k)
            for j in range(d):
                if row[j]:
                    out[j] += c * row[j]
        return out

    @lru_cache(maxsize=None)
    def _power_row(self, k: int) -> tuple[int, ...]:
        vec = [0] * (k + 1)
        vec[k] = 1
        # only hit for k >= 2d - 1; reduce one step at a time
        d = self.degree
        for top in range(k, d - 1, -1):
            c = vec[top]
            if c:
                vec[top] = 0
                for j in range(d):
                    vec[top - d + j] -= c * self.modulus[j]
        return tuple(vec[:d])

    def rational(self, q) -> "ExactReal":
        q = Fraction(q)
        return ExactReal(self, (q.numerator,) + (0,) * (self.degree - 1), q.denominator)

    def zeta_power(self, k: int) -> "ExactReal":
        """The element ``zeta_n ** k`` (not real unless paired with its conjugate)."""
        k %= self.order
        coeffs = [0] * (k + 1)
        coeffs[k] = 1
        return ExactReal(self, self.reduce_poly(coeffs), 1)

    def cos_pi_over(self, m: int) -> "ExactReal":
        """Exact ``cos(pi/m)``; requires ``2m | n``."""
        if self.order % (2 * m):
            raise ValueError(f"cos(pi/{m}) does not lie in Q(zeta_{self.order})")
        k = self.order // (2 * m)
        s = self.zeta_power(k) + self.zeta_power(-k)
        return s * Fraction(1, 2)

    def coerce(self, value) -> "ExactReal":
        if isinstance(value, ExactReal):
            if value.field is not self:
                raise ValueError(f"field mismatch: {value.field} vs {self}")
            return value
        if isinstance(value, (int, Rational)):
            return self.rational(value)
        raise TypeError(f"cannot coerce {type(value).__name__} into {self}")


@lru_cache(maxsize=None)
def cyclotomic_field(order: int) -> CyclotomicField:
    return CyclotomicField(order)


def _normalize(num, den):
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = reduce(math.gcd, num, den)
    if g != 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


class ExactReal:
    """An element of a cyclotomic field, compared and ordered as a real number.

    Only real elements should be ordered; the arithmetic itself is valid for
    any element of the field.
    """

    __slots__ = ("field", "num", "den", "_float", "_hash")

    def __init__(self, field: CyclotomicField, num, den: int = 1, *, _normalized=False):
        self.field = field
        if _normalized:
            self.num, self.den = num, den
        else:
            self.num, self.den = _normalize(list(num), den)
        self._float = None
        self._hash = None

    # -- arithmetic ---------------------------------------------------
    def _other(self, other):
        if isinstance(other, ExactReal):
            if other.field is not self.field:
                raise ValueError(f"field mismatch: {other.field} vs {self.field}")
            return other
        if isinstance(other, (int, Rational)):
            return self.field.rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            num = [a + b for a, b in zip(self.num, other.num)]
            return ExactReal(self.field, num, self.den)
        num = [a * other.den + b * self.den for a, b in zip(self.num, other.num)]
        return ExactReal(self.field, num, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return ExactReal(self.field, tuple(-a for a in self.num), self.den, _normalized=True)

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        a, b = self.num, other.num
        if not any(b[1:]):
            c = b[0]
            return ExactReal(self.field, [x * c for x in a], self.den * other.den)
        if not any(a[1:]):
            c = a[0]
            return ExactReal(self.field, [x * c for x in b], self.den * other.den)
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return ExactReal(self.field, self.field.reduce_poly(prod), self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "ExactReal":
        """Multiplicative inverse, by solving the multiplication-matrix system over Q."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        d = self.field.degree
        cols = []
        basis = [0] * d
        for j in range(d):
            e = list(basis)
            e[j] = 1
            cols.append((self * ExactReal(self.field, e, 1)).as_fractions())
        rows = [[cols[j][i] for j in range(d)] + [Fraction(int(i == 0))] for i in range(d)]
        for c in range(d):
            piv = next(r for r in range(c, d) if rows[r][c] != 0)
            rows[c], rows[piv] = rows[piv], rows[c]
            p = rows[c][c]
            rows[c] = [v / p for v in rows[c]]
            for r in range(d):
                if r != c and rows[r][c] != 0:
                    f = rows[r][c]
                    rows[r] = [v - f * w for v, w in zip(rows[r], rows[c])]
        sol = [rows[i][d] for i in range(d)]
        den = reduce(math.lcm, (q.denominator for q in sol), 1)
        return ExactReal(self.field, [int(q * den) for q in sol], den)

    def __truediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    # -- predicates ---------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def as_fractions(self) -> list[Fraction]:
        return [Fraction(c, self.den) for c in self.num]

    def __float__(self):
        if self._float is None:
            try:
                self._float = math.fsum(c * w for c, w in zip(self.num, self.field._cos)) / self.den
            except OverflowError:
                self._float = float(self._interval(_START_PREC).mid)
        return self._float

    def _interval(self, prec):
        iv = mpmath.iv
        old = iv.prec
        iv.prec = prec
        try:
            n = self.field.order
            total = iv.mpf(0)
            for k, c in enumerate(self.num):
                if c:
                    total += iv.mpf(c) * iv.cos(2 * iv.pi * k / n)
            return total / self.den
        finally:
            iv.prec = old

    def sign(self) -> int:
        """Exact sign (-1, 0, 1) of the real value."""
        if self.is_zero():
            return 0
        if self.is_rational():
            return 1 if self.num[0] > 0 else -1
        try:
            approx = float(self)
            bound = _FLOAT_SLACK * sum(abs(c) for c in self.num) / self.den
            if abs(approx) > bound:
                return 1 if approx > 0 else -1
        except OverflowError:
            pass
        prec = _START_PREC
        while True:
            box = self._interval(prec)
            if box.a > 0:
                return 1
            if box.b < 0:
                return -1
            prec *= 2

    def _cmp(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return (self - other).sign()

    def __lt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c >= 0

    def __eq__(self, other):
        if isinstance(other, ExactReal):
            return (self.field is other.field and self.den == other.den
                    and self.num == other.num)
        if isinstance(other, (int, Rational)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.num[0], self.den))
            else:
                self._hash = hash((self.field.order, self.num, self.den))
        return self._hash

    def key(self):
        """Deterministic, hashable exact identity."""
        return (self.num, self.den)

    def __repr__(self):
        return f"ExactReal({self}, ~{float(self):.12g})"

    def __str__(self):
        if self.is_rational():
            return str(Fraction(self.num[0], self.den))
        terms = []
        for k, c in enumerate(self.num):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*z{self.field.order}^{k}")
        body = " + ".join(terms)
        return f"({body})/{self.den}" if self.den != 1 else f"({body})"

    def to_json(self):
        return {"coeffs": list(self.num), "den": self.den, "approx": float(self)}


QQ = cyclotomic_field(1)
