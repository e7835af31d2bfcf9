"""The rational function field Q(A).

A value is stored as ``num / den`` with

* ``den`` an ordinary polynomial with nonzero constant term and leading
  coefficient 1 (so any pure power of A lives in ``num``),
* ``gcd(num, den) == 1`` once ``num`` is cleared to an ordinary polynomial.

With that form equal values have identical representations, and
multiplying by A^k only shifts ``num``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .laurent import ONE as L_ONE
from .laurent import ZERO as L_ZERO
from .laurent import LaurentPoly, exact_quotient, poly_divmod, poly_gcd, strip_power


class CoeffZeroDivision(ZeroDivisionError):
    """Division by the zero element of a coefficient field."""


class RatFunc:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=None):
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly.constant(num)
        if den is None:
            self.num, self.den = num, L_ONE
        else:
            if not isinstance(den, LaurentPoly):
                den = LaurentPoly.constant(den)
            self.num, self.den = _normalize(num, den)
        self._hash = None

    @classmethod
    def _make(cls, num: LaurentPoly, den: LaurentPoly = L_ONE) -> "RatFunc":
        obj = cls.__new__(cls)
        obj.num, obj.den, obj._hash = num, den, None
        return obj

    @classmethod
    def apow(cls, k: int, c=1) -> "RatFunc":
        return cls._make(LaurentPoly.monomial(k, c))

    @classmethod
    def from_rational(cls, c) -> "RatFunc":
        return cls._make(LaurentPoly.constant(c))

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def is_signed_apower(self) -> bool:
        """True iff the value is +-A^k."""
        return self.den.is_one() and self.num.is_monomial() and abs(self.num.coeffs[0]) == 1

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, Rational):
            return self.den.is_one() and self.num == LaurentPoly.constant(other)
        if isinstance(other, LaurentPoly):
            return self.den.is_one() and self.num == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, Rational):
            return RatFunc._make(LaurentPoly.constant(x))
        if isinstance(x, LaurentPoly):
            return RatFunc._make(x)
        return None

    def __neg__(self) -> "RatFunc":
        return RatFunc._make(-self.num, self.den)

    def __add__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            if self.den.is_one():
                return RatFunc._make(self.num + o.num)
            return RatFunc._make(*_normalize(self.num + o.num, self.den))
        return RatFunc._make(*_normalize(self.num * o.den + o.num * self.den, self.den * o.den))

    __radd__ = __add__

    def __sub__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return ZERO
        if self.den.is_one() and o.den.is_one():
            return RatFunc._make(self.num * o.num)
        if o.num.is_monomial() and o.den.is_one():
            return RatFunc._make(self.num * o.num, self.den)
        if self.num.is_monomial() and self.den.is_one():
            return RatFunc._make(self.num * o.num, o.den)
        return RatFunc._make(*_normalize(self.num * o.num, self.den * o.den))

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise CoeffZeroDivision("inverse of zero in Q(A)")
        k, n0 = strip_power(self.num)
        lc = n0.leading()
        # den / num = A^-k * den / n0, and n0 has nonzero constant term
        return RatFunc._make(self.den.shift(-k).scale(1 / lc), n0.scale(1 / lc))

    def __truediv__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_apow(self, k: int) -> "RatFunc":
        return RatFunc._make(self.num.shift(k), self.den) if k else self

    def evaluate(self, a) -> Fraction:
        d = self.den.evaluate(a)
        if not d:
            raise CoeffZeroDivision(f"denominator vanishes at A={a}")
        return self.num.evaluate(a) / d

    # -- printing ---------------------------------------------------------

    def multinomials(self) -> tuple[dict, dict]:
        num = {(e, 0, 0): c for e, c in self.num.terms.items()}
        den = {(e, 0, 0): c for e, c in self.den.terms.items()}
        return num, den

    def __str__(self) -> str:
        from .printing import format_quotient

        return format_quotient(*self.multinomials())

    def __repr__(self) -> str:
        return f"RatFunc({str(self)!r})"


def _normalize(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if not den:
        raise CoeffZeroDivision("zero denominator")
    if not num:
        return L_ZERO, L_ONE
    kd, d0 = strip_power(den)
    kn, n0 = strip_power(num)
    if not d0.is_constant():
        g = poly_gcd(n0, d0)
        if not g.is_one():
            n0 = poly_divmod(n0, g)[0]
            d0 = poly_divmod(d0, g)[0]
    lc = d0.leading()
    if lc != 1:
        n0, d0 = n0.scale(1 / lc), d0.scale(1 / lc)
    return n0.shift(kn - kd), d0


def laurent_quotient(a: RatFunc, b: RatFunc) -> RatFunc:
    """a / b when both are Laurent and b divides a exactly in Q[A^+-1]."""
    return RatFunc._make(exact_quotient(a.num, b.num))


ZERO = RatFunc._make(L_ZERO)
ONE = RatFunc._make(L_ONE)
A = RatFunc._make(LaurentPoly.monomial(1))
