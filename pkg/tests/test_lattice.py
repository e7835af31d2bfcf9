import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skeinfill.lattice import (POINT, POLYGON, SEGMENT, BandPair, Slope, band_pair, closed_form_count, count_classes,
                               enumerate_classes, filling_forms, newton_polygon, slopes)

S = Slope.parse


def test_hull_examples():
    assert newton_polygon([(0, 0)]).kind == POINT
    seg = newton_polygon([(1, 0), (-1, 0), (0, 0)])
    assert seg.kind == SEGMENT and set(seg.vertices) == {(-1, 0), (1, 0)}
    quad = newton_polygon([(0, 2), (0, -2), (0, 0), (1, 0), (-1, 0)])
    assert quad.kind == POLYGON
    assert set(quad.vertices) == {(0, 2), (1, 0), (0, -2), (-1, 0)}


def test_hull_ccw_from_lexmin():
    P = newton_polygon([(0, 2), (1, 0), (0, -2), (-1, 0), (0, 1)])
    assert P.vertices == ((-1, 0), (0, -2), (1, 0), (0, 2))


def test_empty_support():
    with pytest.raises(ValueError):
        newton_polygon([])


def test_slope_examples():
    assert slopes(newton_polygon([(0, 0)])) == set()
    assert slopes(newton_polygon([(1, 0), (-1, 0)])) == {S("0")}
    quad = newton_polygon([(0, 2), (1, 0), (0, -2), (-1, 0)])
    assert slopes(quad) == {S("-2"), S("2")}
    hexagon = newton_polygon([(3, 0), (0, 3), (-3, 4), (-3, 0), (0, -3), (3, -4)])
    assert slopes(hexagon) == {S("-1"), S("-1/3"), S("inf")}


def test_slope_order_and_text():
    assert sorted([S("inf"), S("1/2"), S("-3")]) == [S("-3"), S("1/2"), S("inf")]
    assert str(S("inf")) == "inf" and str(S("-2/4")) == "-1/2"
    assert Slope.of_direction(-2, 4) == S("-2")
    assert Slope.of_direction(0, -3).is_infinite


def _brute_hull_vertices(pts):
    """A point is a vertex iff it is not in the convex hull of the others (checked by brute force)."""
    from itertools import combinations

    pts = set(pts)

    def inside_triangle(p, a, b, c):
        def cr(o, u, v):
            return (u[0] - o[0]) * (v[1] - o[1]) - (u[1] - o[1]) * (v[0] - o[0])
        if cr(a, b, c) == 0:
            return False
        d1, d2, d3 = cr(a, b, p), cr(b, c, p), cr(c, a, p)
        neg = d1 < 0 or d2 < 0 or d3 < 0
        pos = d1 > 0 or d2 > 0 or d3 > 0
        return not (neg and pos)

    out = set()
    for p in pts:
        others = pts - {p}
        if not any(inside_triangle(p, *t) for t in combinations(others, 3)) and \
                not any(_on_segment(p, a, b) for a, b in combinations(others, 2)):
            out.add(p)
    return out


def _on_segment(p, a, b):
    cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
    return cross == 0 and min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


sym_support = st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=1, max_size=5).map(
    lambda pts: pts + [(-a, -b) for a, b in pts])


@given(sym_support)
def test_hull_matches_brute_force(pts):
    P = newton_polygon(pts)
    if P.kind == POLYGON:
        assert set(P.vertices) == _brute_hull_vertices(pts)
    assert P.is_symmetric()
    assert slopes(P) == slopes(P.negated())


@given(sym_support, st.integers(-6, 6), st.integers(-6, 6))
def test_uniqueness_iff_not_a_slope(pts, p, q):
    if gcd(abs(p), abs(q)) != 1:
        return
    P = newton_polygon(pts)
    _, unique = band_pair(p, q, P)
    assert unique == (Slope.of_direction(p, q) not in slopes(P))


@given(st.integers(-30, 30), st.integers(-30, 30))
def test_filling_forms(p, q):
    if gcd(abs(p), abs(q)) != 1:
        with pytest.raises(ValueError):
            filling_forms(p, q)
        return
    lam, eps = filling_forms(p, q)
    assert lam[0] * p + lam[1] * q == 0
    assert eps[0] * p + eps[1] * q == 1
    assert abs(lam[0] * eps[1] - lam[1] * eps[0]) == 1


def test_band_pair_examples():
    hexagon = newton_polygon([(2, -2), (2, 0), (1, 1), (-2, 2), (-2, 0), (-1, -1)])
    bp, unique = band_pair(2, -1, hexagon)
    assert unique and bp.M == 3
    assert bp.lam in ((1, 2), (-1, -2)) and bp.eps == (1, 1)
    seg = newton_polygon([(1, 0), (-1, 0)])
    bp, unique = band_pair(0, 1, seg)
    assert (bp.lam, bp.M, unique) == ((1, 0), 1, True)
    assert band_pair(1, 0, seg)[1] is False


def test_count_examples():
    assert count_classes(3) == 11
    assert count_classes(0) == 2
    assert count_classes(1) == 5


def test_enumerate_examples():
    bp = BandPair((1, 0), (0, 1), 1)
    assert set(enumerate_classes(bp)) == {(0, 0), (1, 0), (1, -1), (0, 1), (1, 1)}
    assert enumerate_classes(BandPair((1, 0), (0, 1), 0)) == [(0, 0), (0, 1)]
    assert len(enumerate_classes(BandPair((-1, -2), (1, 1), 3))) == 11


def brute_force_classes(bp: BandPair) -> set:
    """Scan a box of lattice points; independent of the (lam, eps) coordinate inverse."""
    R = 4 * (bp.M + 2) * (1 + max(map(abs, bp.lam + bp.eps)))
    seen = set()
    for a in range(-R, R + 1):
        for b in range(-R, R + 1):
            if abs(bp.lam_at((a, b))) <= bp.M and bp.eps_at((a, b)) in (0, 1):
                seen.add(max((a, b), (-a, -b)))
    return seen


def test_count_matches_brute_force():
    rng = random.Random(7)
    dirs = []
    while len(dirs) < 20:
        p, q = rng.randint(-7, 7), rng.randint(-7, 7)
        if gcd(abs(p), abs(q)) == 1:
            dirs.append((p, q))
    for p, q in dirs:
        lam, eps = filling_forms(p, q)
        for M in (0, 1, 2, 5, 11):
            bp = BandPair(lam, eps, M)
            brute = brute_force_classes(bp)
            assert len(brute) == count_classes(M) == len(enumerate_classes(bp))
    for M in range(51):
        assert count_classes(M) == closed_form_count(M)


def test_point_inverse():
    bp = BandPair((-1, -2), (1, 1), 3)
    for l in range(-3, 4):
        for e in (0, 1):
            pt = bp.point(l, e)
            assert (bp.lam_at(pt), bp.eps_at(pt)) == (l, e)
