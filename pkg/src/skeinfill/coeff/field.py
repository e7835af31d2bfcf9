"""Common interface for the two coefficient fields.

Downstream modules never touch ``RatFunc`` or ``ExtFunc`` directly; they
ask a ``Field`` for constants, powers of A, parsing and printing, so the
same code runs over Q(A) and over Q(A)(m2).
"""

from __future__ import annotations

import abc
import enum
from fractions import Fraction
from numbers import Rational
from typing import Sequence

from .laurent import LaurentPoly, lcm_poly, poly_gcd, strip_power
from .ratfunc import RatFunc


class FieldTag(enum.Enum):
    BASE = "QA"
    EXTENDED = "QAm2"


class Field(abc.ABC):
    tag: FieldTag
    label: str

    @property
    @abc.abstractmethod
    def zero(self): ...

    @property
    @abc.abstractmethod
    def one(self): ...

    @abc.abstractmethod
    def coerce(self, x):
        """Embed ints, Fractions and smaller-field values; TypeError otherwise."""

    @abc.abstractmethod
    def apow(self, k: int, c=1):
        """c * A^k."""

    @abc.abstractmethod
    def is_signed_apower(self, x) -> bool: ...

    @abc.abstractmethod
    def evaluate(self, x, point: dict) -> Fraction:
        """Specialize A (and m2) to rationals."""

    @abc.abstractmethod
    def primitive_scale(self, xs: Sequence):
        """A nonzero s with s*xs in the canonical primitive form of the ray."""

    @abc.abstractmethod
    def multinomials(self, x) -> tuple[dict, dict]: ...

    @abc.abstractmethod
    def poly_multinomials(self, p) -> tuple[dict, dict]: ...

    def format(self, x) -> str:
        from .printing import format_quotient

        return format_quotient(*self.multinomials(self.coerce(x)))

    def parse(self, text: str):
        from .parse import parse_scalar

        return parse_scalar(text, self)

    def __repr__(self) -> str:
        return f"<field {self.label}>"


class RationalFunctionField(Field):
    """Q(A)."""

    tag = FieldTag.BASE
    label = "QA"
    variables = ("A",)

    @property
    def zero(self) -> RatFunc:
        from .ratfunc import ZERO

        return ZERO

    @property
    def one(self) -> RatFunc:
        from .ratfunc import ONE

        return ONE

    def coerce(self, x) -> RatFunc:
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, Rational):
            return RatFunc.from_rational(x)
        if isinstance(x, LaurentPoly):
            return RatFunc._make(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into Q(A)")

    def apow(self, k: int, c=1) -> RatFunc:
        return RatFunc.apow(k, c)

    def is_signed_apower(self, x) -> bool:
        return self.coerce(x).is_signed_apower()

    def evaluate(self, x, point: dict) -> Fraction:
        return self.coerce(x).evaluate(point["A"])

    def primitive_scale(self, xs: Sequence[RatFunc]) -> RatFunc:
        xs = [self.coerce(x) for x in xs if x]
        if not xs:
            return self.one
        den = lcm_poly(x.den for x in xs)
        dpoly = RatFunc._make(den)
        nums = [(x * dpoly).num for x in xs]
        g = None
        lows = []
        for n in nums:
            k, n0 = strip_power(n)
            lows.append(k)
            g = n0 if g is None else poly_gcd(g, n0)
        # nums / g have rational coefficients; make them coprime integers
        qs = [RatFunc(n, g) for n in nums]
        content = _rational_content(c for q in qs for c in q.num.coeffs)
        lead = qs[-1].num.leading()
        sign = -1 if lead < 0 else 1
        shift = -min(q.num.low for q in qs)
        scale = RatFunc(LaurentPoly.monomial(shift, Fraction(sign) / content) * den, g)
        return scale

    def multinomials(self, x) -> tuple[dict, dict]:
        return self.coerce(x).multinomials()

    def poly_multinomials(self, p) -> tuple[dict, dict]:
        den = lcm_poly(x.den for x in p.c)
        dpoly = RatFunc._make(den)
        slot = 2 if p.var == "m" else 1
        num: dict = {}
        for i, x in enumerate(p.c):
            if x:
                n = (x * dpoly).num
                for e, c in n.terms.items():
                    key = [e, 0, 0]
                    key[slot] = i
                    num[tuple(key)] = c
        return num, {(e, 0, 0): c for e, c in den.terms.items()}


def _rational_content(values) -> Fraction:
    """gcd of numerators over lcm of denominators (positive)."""
    from math import gcd

    n, d = 0, 1
    for v in values:
        v = Fraction(v)
        if not v:
            continue
        n = gcd(n, v.numerator)
        d = d * v.denominator // gcd(d, v.denominator)
    return Fraction(n, d) if n else Fraction(1)


QA = RationalFunctionField()
