"""Q(A)(m2): rational functions in a second commuting variable over Q(A).

Needed for localized coefficients, where annihilating polynomials of one
link component pick up the meridian m2 of the other component.  Values are
``num / den`` with ``num, den`` in Q(A)[m2], ``den`` monic and coprime to
``num``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Sequence

from .field import QA, Field, FieldTag
from .laurent import LaurentPoly, lcm_poly
from .poly import Poly, poly_lcm
from .ratfunc import CoeffZeroDivision, RatFunc

_VAR = "m2"


def _qa_poly(coeffs) -> Poly:
    return Poly._make(QA, coeffs, _VAR)


_PZERO = _qa_poly(())
_PONE = _qa_poly([QA.one])


class ExtFunc:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        num = _as_qa_poly(num)
        if den is None:
            self.num, self.den = num, _PONE
        else:
            self.num, self.den = _normalize(num, _as_qa_poly(den))
        self._hash = None

    @classmethod
    def _make(cls, num: Poly, den: Poly = _PONE) -> "ExtFunc":
        obj = cls.__new__(cls)
        obj.num, obj.den, obj._hash = num, den, None
        return obj

    @classmethod
    def m2(cls) -> "ExtFunc":
        return cls._make(_qa_poly([QA.zero, QA.one]))

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def is_signed_apower(self) -> bool:
        return self.den.degree == 0 and self.num.degree == 0 and self.num.c[0].is_signed_apower()

    def __eq__(self, other) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.num.c == o.num.c and self.den.c == o.den.c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num.c, self.den.c))
        return self._hash

    def __neg__(self) -> "ExtFunc":
        return ExtFunc._make(-self.num, self.den)

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den.c == o.den.c:
            if self.den.degree == 0:
                return ExtFunc._make(self.num + o.num)
            return ExtFunc._make(*_normalize(self.num + o.num, self.den))
        return ExtFunc._make(*_normalize(self.num * o.den + o.num * self.den, self.den * o.den))

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return EZERO
        if self.den.degree == 0 and o.den.degree == 0:
            return ExtFunc._make(self.num * o.num)
        if o.num.degree == 0 and o.den.degree == 0:
            return ExtFunc._make(self.num.scale(o.num.c[0]), self.den)
        if self.num.degree == 0 and self.den.degree == 0:
            return ExtFunc._make(o.num.scale(self.num.c[0]), o.den)
        return ExtFunc._make(*_normalize(self.num * o.num, self.den * o.den))

    __rmul__ = __mul__

    def inverse(self) -> "ExtFunc":
        if not self.num:
            raise CoeffZeroDivision("inverse of zero in Q(A)(m2)")
        lc = self.num.leading()
        return ExtFunc._make(self.den.scale(1 / lc), self.num.scale(1 / lc))

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "ExtFunc":
        if n < 0:
            return self.inverse() ** (-n)
        result, base = EONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_apow(self, k: int) -> "ExtFunc":
        if not k:
            return self
        return ExtFunc._make(self.num.scale(RatFunc.apow(k)), self.den)

    def evaluate(self, a, m2) -> Fraction:
        m2 = Fraction(m2)

        def ev(p: Poly) -> Fraction:
            acc = Fraction(0)
            for c in reversed(p.c):
                acc = acc * m2 + c.evaluate(a)
            return acc

        d = ev(self.den)
        if not d:
            raise CoeffZeroDivision(f"denominator vanishes at A={a}, m2={m2}")
        return ev(self.num) / d

    def __str__(self) -> str:
        return QAm2.format(self)

    def __repr__(self) -> str:
        return f"ExtFunc({str(self)!r})"


def _as_qa_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x if x.var == _VAR else Poly._make(QA, x.c, _VAR)
    return _qa_poly([QA.coerce(x)])


def _coerce(x) -> ExtFunc | None:
    if isinstance(x, ExtFunc):
        return x
    if isinstance(x, (Rational, RatFunc, LaurentPoly)):
        return ExtFunc._make(_qa_poly([QA.coerce(x)]))
    return None


def _normalize(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if not den:
        raise CoeffZeroDivision("zero denominator")
    if not num:
        return _PZERO, _PONE
    if den.degree > 0:
        g = num.gcd(den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
    lc = den.leading()
    if lc != 1:
        inv = 1 / lc
        num, den = num.scale(inv), den.scale(inv)
    return num, den


EZERO = ExtFunc._make(_PZERO)
EONE = ExtFunc._make(_PONE)


class LocalizedField(Field):
    """Q(A)(m2)."""

    tag = FieldTag.EXTENDED
    label = "QAm2"
    variables = ("A", "m2")

    @property
    def zero(self) -> ExtFunc:
        return EZERO

    @property
    def one(self) -> ExtFunc:
        return EONE

    def coerce(self, x) -> ExtFunc:
        o = _coerce(x)
        if o is None:
            raise TypeError(f"cannot coerce {type(x).__name__} into Q(A)(m2)")
        return o

    def apow(self, k: int, c=1) -> ExtFunc:
        return ExtFunc._make(_qa_poly([RatFunc.apow(k, c)]))

    def m2(self) -> ExtFunc:
        return ExtFunc.m2()

    def is_signed_apower(self, x) -> bool:
        return self.coerce(x).is_signed_apower()

    def evaluate(self, x, point: dict) -> Fraction:
        return self.coerce(x).evaluate(point["A"], point["m2"])

    def primitive_scale(self, xs: Sequence) -> ExtFunc:
        xs = [self.coerce(x) for x in xs if x]
        if not xs:
            return EONE
        den = poly_lcm([x.den for x in xs], QA, _VAR)
        nums = [x.num * den.exact_div(x.den) for x in xs]
        g = nums[0]
        for n in nums[1:]:
            g = g.gcd(n)
        g = g.monic()
        qs = [n.exact_div(g) for n in nums]
        flat = [c for q in qs for c in q.c if c]
        s0 = QA.primitive_scale(flat)
        return ExtFunc._make(_qa_poly([s0])) * ExtFunc(den, g)

    def _clear(self, polys: Sequence[Poly]) -> tuple[list[Poly], LaurentPoly]:
        """Multiply Q(A)[m2] polynomials by the lcm of their A-denominators."""
        den = lcm_poly(c.den for p in polys for c in p.c if c)
        d = RatFunc._make(den)
        return [p.scale(d) for p in polys], den

    def multinomials(self, x) -> tuple[dict, dict]:
        x = self.coerce(x)
        (n, d), _ = self._clear([x.num, x.den])
        return _flatten(n, 1), _flatten(d, 1)

    def poly_multinomials(self, p) -> tuple[dict, dict]:
        dens = [x.den for x in p.c if x]
        d1 = poly_lcm(dens, QA, _VAR) if dens else _PONE
        nums = [x.num * d1.exact_div(x.den) if x else _PZERO for x in p.c]
        cleared, _ = self._clear(nums + [d1])
        num: dict = {}
        for i, q in enumerate(cleared[:-1]):
            for key, c in _flatten(q, 1).items():
                num[(key[0], key[1], i)] = c
        return num, _flatten(cleared[-1], 1)


def _flatten(p: Poly, slot: int) -> dict:
    out = {}
    for j, c in enumerate(p.c):
        if c:
            assert c.den.is_one()
            for e, v in c.num.terms.items():
                key = [e, 0, 0]
                key[slot] = j
                out[tuple(key)] = v
    return out


QAm2 = LocalizedField()
