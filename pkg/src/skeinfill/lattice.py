"""Integer lattice geometry: Newton polygons, edge slopes, filling bands.

Lattice point (p, q) stands for the peripheral curve l^p m^q of slope q/p.
All geometry is decided with exact integer cross products.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import gcd
from typing import Iterable

from .qtorus import Pair, canonical_class

POINT, SEGMENT, POLYGON = "POINT", "SEGMENT", "POLYGON"


def _cross(o: Pair, a: Pair, b: Pair) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class NewtonPolygon:
    kind: str
    vertices: tuple[Pair, ...]

    def edges(self) -> list[tuple[Pair, Pair]]:
        v = self.vertices
        if self.kind == POINT:
            return []
        if self.kind == SEGMENT:
            return [(v[0], v[1])]
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def negated(self) -> "NewtonPolygon":
        return newton_polygon([(-a, -b) for a, b in self.vertices])

    def is_symmetric(self) -> bool:
        return set(self.vertices) == {(-a, -b) for a, b in self.vertices}

    def is_origin_point(self) -> bool:
        return self.kind == POINT and self.vertices[0] == (0, 0)


def newton_polygon(support: Iterable[Pair]) -> NewtonPolygon:
    """Convex hull with extreme points only, counterclockwise from the lexicographic minimum."""
    pts = sorted({(int(a), int(b)) for a, b in support})
    if not pts:
        raise ValueError("Newton polygon of an empty support")
    if len(pts) == 1:
        return NewtonPolygon(POINT, (pts[0],))
    lower: list[Pair] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Pair] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2:
        return NewtonPolygon(SEGMENT, tuple(hull))
    return NewtonPolygon(POLYGON, tuple(hull))


@total_ordering
@dataclass(frozen=True)
class Slope:
    """q/p in lowest terms; ``value is None`` means infinity."""

    value: Fraction | None

    @classmethod
    def of_direction(cls, dx: int, dy: int) -> "Slope":
        if dx == 0:
            if dy == 0:
                raise ValueError("zero direction has no slope")
            return cls(None)
        return cls(Fraction(dy, dx))

    @classmethod
    def parse(cls, text: str) -> "Slope":
        text = text.strip()
        if text.lower() in ("inf", "infinity", "1/0", "-1/0"):
            return cls(None)
        return cls(Fraction(text))

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def direction(self) -> Pair:
        """Primitive (p, q) with p > 0, or (0, 1) for infinity."""
        if self.value is None:
            return (0, 1)
        return (self.value.denominator, self.value.numerator)

    def _key(self):
        return (1, Fraction(0)) if self.value is None else (0, self.value)

    def __lt__(self, other: "Slope") -> bool:
        return self._key() < other._key()

    def __str__(self) -> str:
        return "inf" if self.value is None else str(self.value)


def slopes(P: NewtonPolygon) -> set[Slope]:
    return {Slope.of_direction(b[0] - a[0], b[1] - a[1]) for a, b in P.edges()}


@dataclass(frozen=True)
class BandPair:
    """lam(x, y) = lam[0] x + lam[1] y, likewise eps; band |lam| <= M."""

    lam: Pair
    eps: Pair
    M: int

    def lam_at(self, pt: Pair) -> int:
        return self.lam[0] * pt[0] + self.lam[1] * pt[1]

    def eps_at(self, pt: Pair) -> int:
        return self.eps[0] * pt[0] + self.eps[1] * pt[1]

    def det(self) -> int:
        return self.lam[0] * self.eps[1] - self.lam[1] * self.eps[0]

    def point(self, lam_val: int, eps_val: int) -> Pair:
        """The lattice point with the given (lam, eps) coordinates."""
        d = self.det()
        (l1, l2), (e1, e2) = self.lam, self.eps
        return ((e2 * lam_val - l2 * eps_val) * d, (l1 * eps_val - e1 * lam_val) * d)


def filling_forms(p: int, q: int) -> tuple[Pair, Pair]:
    """lam = (q, -p) vanishing on (p, q), and eps with eps(p, q) = 1.

    eps = (a, b) solves a p + b q = 1 with b the least nonnegative residue
    modulo |p| (for p = 0, eps = (0, q)).
    """
    if gcd(abs(p), abs(q)) != 1:
        raise ValueError(f"({p},{q}) is not a coprime pair")
    if p == 0:
        eps = (0, q)
    else:
        b = pow(q, -1, abs(p)) if abs(p) > 1 else 0
        a, r = divmod(1 - b * q, p)
        assert r == 0
        eps = (a, b)
    return (q, -p), eps


def band_pair(p: int, q: int, P: NewtonPolygon) -> tuple[BandPair, bool]:
    """Band data for filling direction (p, q) and whether max lam on P is attained once."""
    lam, eps = filling_forms(p, q)
    values = [lam[0] * a + lam[1] * b for a, b in P.vertices]
    M = max(values)
    return BandPair(lam, eps, M), values.count(M) == 1


def enumerate_classes(bp: BandPair) -> list[Pair]:
    """Canonical class representatives with |lam| <= M and eps in {0, 1}."""
    out = set()
    for e in (0, 1):
        for l in range(-bp.M, bp.M + 1):
            out.add(canonical_class(*bp.point(l, e)))
    return sorted(out)


def count_classes(M: int) -> int:
    """Number of +-1 classes in the band |lam| <= M, 0 <= eps <= 1, counted in (lam, eps) coordinates."""
    if M < 0:
        raise ValueError("band half-width must be nonnegative")
    seen = set()
    for e in (0, 1):
        for l in range(-M, M + 1):
            seen.add(max((l, e), (-l, -e)))
    return len(seen)


def closed_form_count(M: int) -> int:
    """3M + 2, derived from the count above (M+1 classes at eps=0, 2M+1 at eps=1)."""
    return 3 * M + 2
