"""Univariate polynomials over one of the coefficient fields.

Used both for the meridian polynomials a_i(m) and internally for the
extended field Q(A)(m2).  Coefficients are stored densely, lowest degree
first, with no trailing zeros.  The zero polynomial has degree ``None``.
"""

from __future__ import annotations

from typing import Sequence


class Poly:
    __slots__ = ("field", "c", "var", "_hash")

    def __init__(self, field, coeffs: Sequence = (), var: str = "m"):
        cs = [field.coerce(x) for x in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field, self.c, self.var, self._hash = field, tuple(cs), var, None

    @classmethod
    def _make(cls, field, coeffs, var):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        obj = cls.__new__(cls)
        obj.field, obj.c, obj.var, obj._hash = field, tuple(cs), var, None
        return obj

    @classmethod
    def monomial(cls, field, deg: int, coeff=1, var: str = "m") -> "Poly":
        cs = [field.zero] * deg + [field.coerce(coeff)]
        return cls._make(field, cs, var)

    @classmethod
    def constant(cls, field, coeff, var: str = "m") -> "Poly":
        return cls._make(field, [field.coerce(coeff)], var)

    def _like(self, coeffs) -> "Poly":
        return Poly._make(self.field, coeffs, self.var)

    # -- inspection -------------------------------------------------------

    @property
    def degree(self) -> int | None:
        return len(self.c) - 1 if self.c else None

    @property
    def coefficients(self) -> dict[int, object]:
        return {i: x for i, x in enumerate(self.c) if x}

    def leading(self):
        return self.c[-1] if self.c else self.field.zero

    def coeff(self, i: int):
        return self.c[i] if 0 <= i < len(self.c) else self.field.zero

    def is_zero(self) -> bool:
        return not self.c

    def is_constant(self) -> bool:
        return len(self.c) <= 1

    def __bool__(self) -> bool:
        return bool(self.c)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.c == other.c
        if not self.c:
            return not other
        if len(self.c) == 1:
            return self.c[0] == other
        return False

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.c)
        return self._hash

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        try:
            return Poly._make(self.field, [self.field.coerce(other)], self.var)
        except TypeError:
            return None

    def __neg__(self) -> "Poly":
        return self._like([-x for x in self.c])

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.c, o.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] = out[i] + x
        return self._like(out)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.c, o.c
        if not a or not b:
            return self._like(())
        if len(b) == 1:
            return self.scale(b[0])
        if len(a) == 1:
            return o.scale(a[0])._retag(self.var)
        out = [self.field.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = out[i + j] + x * y
        return self._like(out)

    __rmul__ = __mul__

    def _retag(self, var: str) -> "Poly":
        return self if self.var == var else Poly._make(self.field, self.c, var)

    def scale(self, k) -> "Poly":
        k = self.field.coerce(k)
        if not k:
            return self._like(())
        return self._like([x * k for x in self.c])

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = self._like([self.field.one]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if not other.c:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        db = len(other.c) - 1
        if len(r) - 1 < db:
            return self._like(()), self
        inv = 1 / other.c[-1] if other.c[-1] != 1 else None
        q = [self.field.zero] * (len(r) - db)
        bc = other.c
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k]
            if c:
                if inv is not None:
                    c = c * inv
                q[k - db] = c
                off = k - db
                for j in range(db):
                    if bc[j]:
                        r[off + j] = r[off + j] - c * bc[j]
                r[k] = self.field.zero
        return self._like(q), self._like(r[:db])

    def __floordiv__(self, other):
        return self.divmod(self._coerce(other))[0]

    def __mod__(self, other):
        return self.divmod(self._coerce(other))[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> "Poly":
        if not self.c or self.c[-1] == 1:
            return self
        return self.scale(1 / self.c[-1])

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while b:
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def __call__(self, x):
        """Horner evaluation at a field element (or anything closed under + and *)."""
        acc = self.field.zero
        for c in reversed(self.c):
            acc = acc * x + c
        return acc

    def map_coeffs(self, fn, field=None) -> "Poly":
        field = field or self.field
        return Poly._make(field, [fn(x) for x in self.c], self.var)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"

    def __str__(self) -> str:
        from .printing import format_quotient

        return format_quotient(*self.field.poly_multinomials(self))


def poly_lcm(polys: Sequence[Poly], field, var: str) -> Poly:
    out = Poly.constant(field, 1, var)
    for p in polys:
        if p.is_constant():
            continue
        out = (out * p).exact_div(out.gcd(p))
    return out.monic()
