"""Random free presentations and an evaluation oracle for annihilators."""

import random
from fractions import Fraction

from skeinfill.annihilator import KnotPresentation
from skeinfill.coeff import QA, Poly


def random_presentation(rng: random.Random, max_dim=4, max_deg=3, density=0.6) -> KnotPresentation:
    d = rng.randint(1, max_dim)
    rows = []
    for _ in range(d):
        row = []
        for _ in range(d):
            if rng.random() > density:
                row.append(Poly.constant(QA, 0))
                continue
            deg = rng.randint(0, max_deg)
            coeffs = [QA.apow(rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(deg + 1)]
            row.append(Poly(QA, coeffs))
        rows.append(tuple(row))
    return KnotPresentation(QA, tuple(f"f{i + 1}" for i in range(d)), tuple(rows))


def specialize(p: Poly, a: Fraction, m: Fraction) -> Fraction:
    return sum((QA.evaluate(c, {"A": a}) * m ** i for i, c in p.coefficients.items()), Fraction(0))


def numeric_krylov(pres: KnotPresentation, v, a, m, k):
    L = [[specialize(e, a, m) for e in row] for row in pres.longitude]
    w = [specialize(e, a, m) for e in v]
    cols = [w]
    for _ in range(k):
        w = [sum(L[i][j] * w[j] for j in range(len(w))) for i in range(len(w))]
        cols.append(w)
    return cols


def rank(vectors) -> int:
    rows = [list(v) for v in vectors]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r
