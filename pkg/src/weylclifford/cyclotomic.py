"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements live in the power basis 1, zeta, ..., zeta^{d-1} with
d = deg Phi_m, reduced modulo the m-th cyclotomic polynomial Phi_m.
Reducing modulo Phi_m rather than x^m - 1 keeps the representation
canonical and the arithmetic a field: equality is coefficient
comparison and every nonzero element has an inverse.

Coefficients are exact rationals, stored as an integer numerator
vector over a single positive denominator with gcd(numerators,
denominator) = 1.  There is no floating-point fallback anywhere in
this module; ``to_complex`` is the one explicit bridge to floats.

Values of different orders never mix implicitly: combining them
raises :class:`OrderMismatchError`, and callers embed into a common
order with :meth:`CyclotomicNumber.lift` (zeta_m = zeta_{km}^k).
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from math import gcd

__all__ = [
    "CyclotomicNumber",
    "IntPolynomial",
    "OrderMismatchError",
    "cyclotomic_polynomial",
    "root_of_unity",
    "totient",
]


class OrderMismatchError(ValueError):
    """Two cyclotomic orders were combined without an explicit lift."""


class IntPolynomial:
    """Dense integer polynomial, coefficients in ascending degree.

    Trailing zero coefficients are stripped, so equal polynomials have
    equal coefficient tuples.  The zero polynomial has degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-c for c in self.coeffs])

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = IntPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        """Evaluate by Horner; x may be int, Fraction or CyclotomicNumber."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        """Divide exactly, raising ValueError on a nonzero remainder."""
        if not isinstance(other, IntPolynomial) or not other:
            raise ValueError("division by zero polynomial")
        rem = [Fraction(c) for c in self.coeffs]
        div = [Fraction(c) for c in other.coeffs]
        dq = len(rem) - len(div)
        if dq < 0:
            if any(rem):
                raise ValueError("inexact polynomial division")
            return IntPolynomial()
        quo = [Fraction(0)] * (dq + 1)
        lead = div[-1]
        for i in range(dq, -1, -1):
            c = rem[i + len(div) - 1] / lead
            quo[i] = c
            if c:
                for j, dj in enumerate(div):
                    rem[i + j] -= c * dj
        if any(rem):
            raise ValueError("inexact polynomial division")
        if any(q.denominator != 1 for q in quo):
            raise ValueError("non-integer quotient")
        return IntPolynomial([int(q) for q in quo])

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)!r})"


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> IntPolynomial:
    """m-th cyclotomic polynomial, by exact division of x^m - 1.

    x^m - 1 = prod_{d | m} Phi_d, so Phi_m is the quotient of x^m - 1
    by the product of Phi_d over proper divisors d.
    """
    if m < 1:
        raise ValueError("cyclotomic order must be a positive integer")
    num = IntPolynomial([-1] + [0] * (m - 1) + [1])
    den = IntPolynomial([1])
    for d in range(1, m):
        if m % d == 0:
            den = den * cyclotomic_polynomial(d)
    return num.exact_div(den)


def totient(m: int) -> int:
    """Degree of Phi_m (Euler's totient)."""
    return cyclotomic_polynomial(m).degree


@lru_cache(maxsize=None)
def _zeta_power_row(m: int, e: int) -> tuple:
    """Integer coordinates of zeta_m^e in the power basis mod Phi_m."""
    phi = cyclotomic_polynomial(m).coeffs
    d = len(phi) - 1
    e %= m
    if e < d:
        row = [0] * d
        row[e] = 1
        return tuple(row)
    prev = _zeta_power_row(m, e - 1)
    lead = prev[d - 1]
    row = [0] + list(prev[: d - 1])
    if lead:
        row = [c - lead * p for c, p in zip(row, phi[:d])]
    return tuple(row)


def _unit_exp(e: int, m: int) -> complex:
    """exp(2*pi*i*e/m), exact on the four Gaussian axes."""
    e %= m
    q, r = divmod(4 * e, m)
    if r == 0:
        return (1 + 0j, 1j, -1 + 0j, -1j)[q]
    return cmath.exp(2j * math.pi * e / m)


def _normalize(num, den):
    if den < 0:
        num = [-x for x in num]
        den = -den
    g = den
    for x in num:
        g = gcd(g, x)
        if g == 1:
            break
    if g > 1:
        num = [x // g for x in num]
        den //= g
    if not any(num):
        den = 1
    return tuple(num), den


class CyclotomicNumber:
    """Exact element of Q(zeta_m) in canonical reduced form."""

    __slots__ = ("order", "_num", "_den")

    def __init__(self, order: int, coeffs):
        if order < 1:
            raise ValueError("cyclotomic order must be a positive integer")
        d = totient(order)
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for f in fr:
            den = den * f.denominator // gcd(den, f.denominator)
        ints = [int(f * den) for f in fr]
        vec = [0] * d
        for e, c in enumerate(ints):
            if c:
                if e < d:
                    vec[e] += c
                else:
                    row = _zeta_power_row(order, e)
                    for i, r in enumerate(row):
                        vec[i] += c * r
        self.order = order
        self._num, self._den = _normalize(vec, den)

    @classmethod
    def _raw(cls, order, num, den):
        self = object.__new__(cls)
        self.order = order
        self._num = num
        self._den = den
        return self

    @classmethod
    def rational(cls, order: int, value) -> "CyclotomicNumber":
        f = Fraction(value)
        d = totient(order)
        num = (f.numerator,) + (0,) * (d - 1)
        return cls._raw(order, num, f.denominator)

    @classmethod
    def zero(cls, order: int) -> "CyclotomicNumber":
        return cls.rational(order, 0)

    @classmethod
    def one(cls, order: int) -> "CyclotomicNumber":
        return cls.rational(order, 1)

    @property
    def coeffs(self) -> tuple:
        """Coordinates over 1, zeta, ..., zeta^{d-1} as Fractions."""
        return tuple(Fraction(n, self._den) for n in self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                raise OrderMismatchError(
                    f"orders {self.order} and {other.order} differ; lift explicitly"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.rational(self.order, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d1, d2 = self._den, o._den
        den = d1 * d2 // gcd(d1, d2)
        m1, m2 = den // d1, den // d2
        num = [a * m1 + b * m2 for a, b in zip(self._num, o._num)]
        num, den = _normalize(num, den)
        return CyclotomicNumber._raw(self.order, num, den)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber._raw(
            self.order, tuple(-x for x in self._num), self._den
        )

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._num, o._num
        d = len(a)
        conv = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        vec = conv[:d]
        for e in range(d, len(conv)):
            c = conv[e]
            if c:
                row = _zeta_power_row(self.order, e)
                for i, r in enumerate(row):
                    if r:
                        vec[i] += c * r
        num, den = _normalize(vec, self._den * o._den)
        return CyclotomicNumber._raw(self.order, num, den)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        """Field inverse via the extended Euclidean algorithm mod Phi_m."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.order).coeffs]
        a = [Fraction(n, self._den) for n in self._num]
        # invariants: s0*self == r0, s1*self == r1  (mod Phi_m)
        r0, r1 = phi, _trim(a)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, _trim(r)
            s0, s1 = s1, _trim(_poly_sub(s0, _poly_mul(q, s1)))
        if not r1 or r1[0] == 0:
            raise ZeroDivisionError("element not invertible")  # unreachable: Phi_m irreducible
        inv = [c / r1[0] for c in s1]
        return CyclotomicNumber(self.order, inv)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base = self.inverse()
            k = -k
        out = CyclotomicNumber.one(self.order)
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def conjugate(self) -> "CyclotomicNumber":
        """Complex conjugate (the automorphism zeta -> zeta^{-1})."""
        m = self.order
        d = len(self._num)
        vec = [0] * d
        for e, c in enumerate(self._num):
            if c:
                row = _zeta_power_row(m, (m - e) % m)
                for i, r in enumerate(row):
                    vec[i] += c * r
        num, den = _normalize(vec, self._den)
        return CyclotomicNumber._raw(m, num, den)

    def lift(self, new_order: int) -> "CyclotomicNumber":
        """Embed into Q(zeta_{new_order}) via zeta_m = zeta_{new_order}^{new_order/m}."""
        if new_order % self.order:
            raise OrderMismatchError(
                f"cannot lift order {self.order} into order {new_order}"
            )
        k = new_order // self.order
        d = totient(new_order)
        vec = [0] * d
        for e, c in enumerate(self._num):
            if c:
                row = _zeta_power_row(new_order, e * k)
                for i, r in enumerate(row):
                    vec[i] += c * r
        num, den = _normalize(vec, self._den)
        return CyclotomicNumber._raw(new_order, num, den)

    def to_complex(self) -> complex:
        """Numerical value at zeta_m = exp(2*pi*i/m)."""
        z = 0j
        m = self.order
        for e, c in enumerate(self._num):
            if c:
                z += c * _unit_exp(e, m)
        return z / self._den

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.rational(self.order, other)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        return (
            self.order == other.order
            and self._num == other._num
            and self._den == other._den
        )

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self._num[0], self._den))
        return hash((self.order, self._num, self._den))

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [str(Fraction(n, self._den)) for n in self._num],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CyclotomicNumber":
        return cls(int(obj["order"]), [Fraction(s) for s in obj["coeffs"]])

    def __repr__(self):
        return f"CyclotomicNumber({self.order}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            if e == 0:
                parts.append(str(c))
            else:
                z = f"z{e}" if e > 1 else "z"
                parts.append(z if c == 1 else f"({c})*{z}")
        return " + ".join(parts) + f" [order {self.order}]"


def root_of_unity(order: int, k: int = 1) -> CyclotomicNumber:
    """zeta_order^k as an exact cyclotomic number."""
    if order < 1:
        raise ValueError("cyclotomic order must be a positive integer")
    row = _zeta_power_row(order, k % order)
    return CyclotomicNumber._raw(order, row, 1)


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_sub(a, b):
    out = list(a) + [Fraction(0)] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return out


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_divmod(a, b):
    rem = list(a)
    dq = len(rem) - len(b)
    if dq < 0:
        return [], rem
    quo = [Fraction(0)] * (dq + 1)
    lead = b[-1]
    for i in range(dq, -1, -1):
        c = rem[i + len(b) - 1] / lead
        quo[i] = c
        if c:
            for j, bj in enumerate(b):
                rem[i + j] -= c * bj
    return quo, rem
