"""Laurent polynomials in the quantum parameter A with exact rational coefficients.

Storage is dense: an exponent offset ``low`` plus a tuple of coefficients
whose first and last entries are nonzero.  Coefficients are gmpy2 ``mpq``
internally (much faster than ``Fraction`` once they grow); ``terms`` hands
back ``Fraction`` values.  The zero polynomial has no
coefficients.  Ordinary polynomials (``low >= 0``) share the type; the
Euclidean helpers at the bottom of the module treat them that way.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

from gmpy2 import mpq

_ZERO = mpq(0)
_ONE = mpq(1)
_MPQ = type(_ZERO)


def _q(c):
    if type(c) is _MPQ:
        return c
    if isinstance(c, Rational):
        return mpq(int(c.numerator), int(c.denominator))
    f = Fraction(c)
    return mpq(f.numerator, f.denominator)


def _trim(low: int, coeffs: list) -> tuple[int, tuple]:
    lo, hi = 0, len(coeffs)
    while lo < hi and not coeffs[lo]:
        lo += 1
    while hi > lo and not coeffs[hi - 1]:
        hi -= 1
    if lo == hi:
        return 0, ()
    return low + lo, tuple(coeffs[lo:hi])


class LaurentPoly:
    """Immutable element of Q[A, A^-1]."""

    __slots__ = ("_low", "_c", "_hash")

    def __init__(self, terms: Mapping[int, object] | None = None):
        if not terms:
            self._low, self._c = 0, ()
        else:
            lo, hi = min(terms), max(terms)
            dense = [_ZERO] * (hi - lo + 1)
            for e, c in terms.items():
                dense[e - lo] += _q(c)
            self._low, self._c = _trim(lo, dense)
        self._hash = None

    @classmethod
    def _raw(cls, low: int, coeffs: tuple) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._low, obj._c, obj._hash = low, coeffs, None
        return obj

    @classmethod
    def _dense(cls, low: int, coeffs: list) -> "LaurentPoly":
        lo, c = _trim(low, coeffs)
        return cls._raw(lo, c)

    @classmethod
    def constant(cls, c) -> "LaurentPoly":
        c = _q(c)
        return cls._raw(0, (c,)) if c else ZERO

    @classmethod
    def monomial(cls, exp: int, c=1) -> "LaurentPoly":
        c = _q(c)
        return cls._raw(exp, (c,)) if c else ZERO

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[int, Fraction]:
        return {self._low + i: Fraction(int(c.numerator), int(c.denominator)) for i, c in enumerate(self._c) if c}

    @property
    def low(self) -> int | None:
        return self._low if self._c else None

    @property
    def high(self) -> int | None:
        return self._low + len(self._c) - 1 if self._c else None

    @property
    def coeffs(self) -> tuple:
        return self._c

    def leading(self) -> Fraction:
        return self._c[-1] if self._c else _ZERO

    def trailing(self) -> Fraction:
        return self._c[0] if self._c else _ZERO

    def is_zero(self) -> bool:
        return not self._c

    def is_one(self) -> bool:
        return self._low == 0 and self._c == (_ONE,)

    def is_constant(self) -> bool:
        return not self._c or (self._low == 0 and len(self._c) == 1)

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def nterms(self) -> int:
        return sum(1 for c in self._c if c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._low == other._low and self._c == other._c
        if isinstance(other, Rational):
            return self == LaurentPoly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._low, self._c))
        return self._hash

    # -- arithmetic -------------------------------------------------------

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self._low, tuple(-c for c in self._c))

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, Rational):
            other = LaurentPoly.constant(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other._c:
            return self
        if not self._c:
            return other
        lo = min(self._low, other._low)
        hi = max(self._low + len(self._c), other._low + len(other._c))
        out = [_ZERO] * (hi - lo)
        o = self._low - lo
        for i, c in enumerate(self._c):
            out[o + i] = c
        o = other._low - lo
        for i, c in enumerate(other._c):
            out[o + i] += c
        return LaurentPoly._dense(lo, out)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, Rational):
            other = LaurentPoly.constant(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, Rational):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return ZERO
        if len(b) == 1:
            k = b[0]
            return LaurentPoly._raw(self._low + other._low, tuple(c * k for c in a))
        if len(a) == 1:
            k = a[0]
            return LaurentPoly._raw(self._low + other._low, tuple(k * c for c in b))
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return LaurentPoly._dense(self._low + other._low, out)

    __rmul__ = __mul__

    def scale(self, k) -> "LaurentPoly":
        k = _q(k)
        if not k:
            return ZERO
        return LaurentPoly._raw(self._low, tuple(c * k for c in self._c))

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by A^k."""
        if not self._c:
            return self
        return LaurentPoly._raw(self._low + k, self._c)

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if self.is_monomial():
                return LaurentPoly.monomial(self._low * n, 1 / self._c[0] ** (-n))
            raise ValueError("negative power of a non-monomial Laurent polynomial")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, a) -> Fraction:
        a = _q(a)
        acc = _ZERO
        for c in reversed(self._c):
            acc = acc * a + c
        v = acc * a ** self._low if self._c else _ZERO
        return Fraction(int(v.numerator), int(v.denominator))

    def __repr__(self) -> str:
        return f"LaurentPoly({self.terms!r})"

    def __str__(self) -> str:
        from .printing import format_multinomial

        return format_multinomial({(e, 0, 0): c for e, c in self.terms.items()})


ZERO = LaurentPoly._raw(0, ())
ONE = LaurentPoly._raw(0, (_ONE,))


# -- ordinary polynomial helpers (low == 0 assumed by callers) ---------------


def poly_divmod(a: LaurentPoly, b: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Euclidean division of ordinary polynomials over Q."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if a.low is not None and a.low < 0 or b.low < 0:
        raise ValueError("poly_divmod expects ordinary polynomials")
    r = [_ZERO] * a._low + list(a._c) if a else []
    db = b.high
    bc = [_ZERO] * b._low + list(b._c)
    inv = 1 / bc[-1]
    if len(r) - 1 < db:
        return ZERO, a
    q = [_ZERO] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if c:
            c = c * inv
            q[k - db] = c
            off = k - db
            for j in range(db + 1):
                r[off + j] -= c * bc[j]
    return LaurentPoly._dense(0, q), LaurentPoly._dense(0, r[:db] if db else [])


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd of two ordinary polynomials (gcd(0, 0) = 0)."""
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if not a:
        return ZERO
    return a.scale(1 / a.leading())


def strip_power(p: LaurentPoly) -> tuple[int, LaurentPoly]:
    """Split p = A^k * p0 with p0(0) != 0."""
    if not p:
        return 0, p
    return p._low, LaurentPoly._raw(0, p._c)


def exact_quotient(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Quotient of Laurent polynomials known to divide exactly."""
    ka, a0 = strip_power(a)
    kb, b0 = strip_power(b)
    q, r = poly_divmod(a0, b0)
    if r:
        raise ArithmeticError("inexact Laurent division")
    return q.shift(ka - kb)


def lcm_poly(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    out = ONE
    for p in polys:
        if p.is_one():
            continue
        g = poly_gcd(out, p)
        out = poly_divmod(out * p, g)[0]
    return out
