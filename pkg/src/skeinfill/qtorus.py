"""The quantum torus and its theta-invariant subalgebra.

``TorusElement`` holds combinations of e_{a,b} = A^{-ab} u^a v^b, with

    e_{a,b} * e_{c,d} = A^{ad - bc} e_{a+c, b+d}.

``SymmetricElement`` holds combinations of the symmetric vectors
et_{a,b} = e_{a,b} + e_{-a,-b}, keyed by a canonical representative of
{(a,b), (-a,-b)}.  The class (0,0) is kept as a basis vector equal to
2 e_{0,0}, so the algebra unit is 1/2 et_{0,0}.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .coeff import QA, Field

Pair = tuple[int, int]


def canonical_class(a: int, b: int) -> Pair:
    """Representative of {(a,b), (-a,-b)}: a > 0, or a == 0 and b >= 0."""
    if a > 0 or (a == 0 and b >= 0):
        return (a, b)
    return (-a, -b)


def is_canonical(a: int, b: int) -> bool:
    return a > 0 or (a == 0 and b >= 0)


class NotThetaInvariant(ValueError):
    def __init__(self, index: Pair):
        self.index = index
        super().__init__(f"element is not theta-invariant: coefficients at {index} "
                         f"and {(-index[0], -index[1])} differ")


class _Combination:
    """Shared storage for finite formal combinations keyed by lattice points."""

    __slots__ = ("field", "terms")

    def __init__(self, field: Field, terms: Mapping[Pair, object] | None = None):
        self.field = field
        clean = {}
        for k, v in (terms or {}).items():
            v = field.coerce(v)
            if v:
                clean[self._key(k)] = clean.get(self._key(k), field.zero) + v
        self.terms = {k: v for k, v in clean.items() if v}

    @staticmethod
    def _key(k: Pair) -> Pair:
        return (int(k[0]), int(k[1]))

    @classmethod
    def _from_clean(cls, field: Field, terms: dict):
        obj = cls.__new__(cls)
        obj.field, obj.terms = field, terms
        return obj

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coeff(self, key: Pair):
        return self.terms.get(self._key(key), self.field.zero)

    def support(self) -> list[Pair]:
        return sorted(self.terms)

    def items(self):
        return sorted(self.terms.items())

    def _combine(self, other, sign: int):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            if k in out:
                s = out[k] + v if sign > 0 else out[k] - v
                if s:
                    out[k] = s
                else:
                    del out[k]
            else:
                out[k] = v if sign > 0 else -v
        return type(self)._from_clean(self.field, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return type(self)._from_clean(self.field, {k: -v for k, v in self.terms.items()})

    def scale(self, c):
        c = self.field.coerce(c)
        if not c:
            return type(self)._from_clean(self.field, {})
        return type(self)._from_clean(self.field, {k: v * c for k, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __repr__(self) -> str:
        body = " + ".join(f"({self.field.format(v)})*{self._basis_name()}{k}" for k, v in self.items())
        return f"{type(self).__name__}[{self.field.label}]({body or '0'})"

    def _basis_name(self) -> str:
        return "e"


def _accumulate(out: dict, key: Pair, val) -> None:
    cur = out.get(key)
    out[key] = val if cur is None else cur + val


def _drop_zeros(out: dict) -> dict:
    return {k: v for k, v in out.items() if v}


class TorusElement(_Combination):
    __slots__ = ()

    @classmethod
    def basis(cls, a: int, b: int, coeff=1, field: Field = QA) -> "TorusElement":
        return cls(field, {(a, b): coeff})

    @classmethod
    def unit(cls, field: Field = QA) -> "TorusElement":
        return cls(field, {(0, 0): 1})

    def __mul__(self, other):
        if isinstance(other, TorusElement):
            return e_mul(self, other)
        return self.scale(other)


class SymmetricElement(_Combination):
    __slots__ = ()

    @staticmethod
    def _key(k: Pair) -> Pair:
        a, b = int(k[0]), int(k[1])
        if not is_canonical(a, b):
            raise ValueError(f"non-canonical class index {k}; use {canonical_class(a, b)}")
        return (a, b)

    @classmethod
    def from_any_index(cls, field: Field, terms: Mapping[Pair, object]) -> "SymmetricElement":
        """Build from arbitrary representatives, merging (a,b) with (-a,-b)."""
        out: dict = {}
        for k, v in terms.items():
            v = field.coerce(v)
            if v:
                _accumulate(out, canonical_class(*k), v)
        return cls._from_clean(field, _drop_zeros(out))

    @classmethod
    def basis(cls, a: int, b: int, coeff=1, field: Field = QA) -> "SymmetricElement":
        return cls.from_any_index(field, {(a, b): coeff})

    @classmethod
    def unit(cls, field: Field = QA) -> "SymmetricElement":
        return cls._from_clean(field, {(0, 0): field.coerce(Fraction(1, 2))})

    def __mul__(self, other):
        if isinstance(other, SymmetricElement):
            return etilde_mul(self, other)
        return self.scale(other)

    def expand(self) -> TorusElement:
        """Rewrite in the e-basis; et_{0,0} contributes 2 e_{0,0}."""
        out = {}
        for (a, b), v in self.terms.items():
            if (a, b) == (0, 0):
                out[(0, 0)] = v + v
            else:
                out[(a, b)] = v
                out[(-a, -b)] = v
        return TorusElement._from_clean(self.field, out)

    def _basis_name(self) -> str:
        return "et"


def e_mul(x: TorusElement, y: TorusElement) -> TorusElement:
    out: dict = {}
    for (a, b), cx in x.terms.items():
        for (c, d), cy in y.terms.items():
            _accumulate(out, (a + c, b + d), (cx * cy).mul_apow(a * d - b * c))
    return TorusElement._from_clean(x.field, _drop_zeros(out))


def theta(x: TorusElement) -> TorusElement:
    return TorusElement._from_clean(x.field, {(-a, -b): v for (a, b), v in x.terms.items()})


def symmetrize(x: TorusElement) -> SymmetricElement:
    """Rewrite a theta-invariant element in the et-basis."""
    out = {}
    for (a, b), v in x.terms.items():
        if x.coeff((-a, -b)) != v:
            raise NotThetaInvariant(canonical_class(a, b))
        if (a, b) == (0, 0):
            out[(0, 0)] = v * Fraction(1, 2)
        elif is_canonical(a, b):
            out[(a, b)] = v
    return SymmetricElement._from_clean(x.field, out)


def etilde_mul(x: SymmetricElement, y: SymmetricElement) -> SymmetricElement:
    """et_{a,b} et_{c,d} = A^{ad-bc} et_{a+c,b+d} + A^{bc-ad} et_{a-c,b-d}."""
    out: dict = {}
    for (a, b), cx in x.terms.items():
        for (c, d), cy in y.terms.items():
            w = a * d - b * c
            base = cx * cy
            _accumulate(out, canonical_class(a + c, b + d), base.mul_apow(w))
            _accumulate(out, canonical_class(a - c, b - d), base.mul_apow(-w))
    return SymmetricElement._from_clean(x.field, _drop_zeros(out))


def etilde_power(x: SymmetricElement, n: int) -> SymmetricElement:
    result = SymmetricElement.unit(x.field)
    for _ in range(n):
        result = etilde_mul(result, x)
    return result


def sum_elements(items: Iterable, zero):
    total = zero
    for it in items:
        total = total + it
    return total
