from math import gcd

import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from skeinfill.annihilator import field_poly
from skeinfill.coeff import QA, Poly, parse_poly
from skeinfill.qtorus import SymmetricElement, etilde_mul, etilde_power, theta
from skeinfill.skein_t2 import (EMPTY, CurveMonomial, PeripheralPoly, SkeinElement, chebyshev, peripheral_to_etilde,
                                phi, phi_inv, power_to_chebyshev)

from conftest import symmetric_element

ET = SymmetricElement.basis
UNIT = SymmetricElement.unit()
x = sp.symbols("x")


def curve(p, q, n=1, c=1):
    return SkeinElement(QA, {CurveMonomial.curve(p, q, n): c})


def test_chebyshev_examples():
    assert chebyshev(0) == [2]
    assert chebyshev(2) == [-2, 0, 1]
    assert chebyshev(3) == [0, -3, 0, 1]


def test_chebyshev_matches_closed_form():
    # T_n(t + 1/t) = t^n + t^-n
    t = sp.symbols("t")
    for n in range(0, 15):
        poly = sum(c * (t + 1 / t) ** k for k, c in enumerate(chebyshev(n)))
        assert sp.simplify(poly - (t ** n + t ** -n)) == 0


def test_power_to_chebyshev_examples():
    assert power_to_chebyshev(1) == ({1: 1}, 0)
    assert power_to_chebyshev(2) == ({2: 1}, 2)
    assert power_to_chebyshev(3) == ({3: 1, 1: 3}, 0)


def test_basis_changes_inverse():
    for n in range(31):
        ks, unit = power_to_chebyshev(n)
        total = sp.Integer(unit)
        for k, c in ks.items():
            total += c * sum(a * x ** i for i, a in enumerate(chebyshev(k)))
        assert sp.expand(total - x ** n) == 0


def test_phi_examples():
    assert phi(curve(1, 0)) == ET(1, 0)
    assert phi(curve(1, 0, 2)) == ET(2, 0) + UNIT.scale(2)
    assert phi(SkeinElement.empty()) == UNIT
    assert phi(SkeinElement.empty(QA, 2)) == ET(0, 0)


def test_phi_inv_examples():
    assert phi_inv(ET(2, 0)) == curve(1, 0, 2) - SkeinElement.empty(QA, 2)
    assert phi_inv(ET(1, 1)) == curve(1, 1)
    assert phi_inv(UNIT) == SkeinElement.empty()


@st.composite
def skein_element(draw):
    out = SkeinElement(QA, {})
    for _ in range(draw(st.integers(0, 3))):
        p, q = draw(st.integers(-6, 6)), draw(st.integers(-6, 6))
        if gcd(abs(p), abs(q)) != 1:
            mono = EMPTY
        else:
            mono = CurveMonomial.curve(p, q, draw(st.integers(1, 5)))
        out = out + SkeinElement(QA, {mono: QA.apow(draw(st.integers(-3, 3)), draw(st.integers(-3, 3)))})
    return out


@given(skein_element())
def test_phi_is_power_map(s):
    # independent oracle: phi is an algebra map with phi(gamma) = et_{p,q}
    expected = SymmetricElement(QA, {})
    for mono, c in s.terms.items():
        if mono.is_empty:
            expected = expected + UNIT.scale(c)
        else:
            expected = expected + etilde_power(ET(*mono.direction), mono.copies).scale(c)
    assert phi(s) == expected


@given(skein_element())
def test_phi_inv_phi(s):
    assert phi_inv(phi(s)) == s


@given(symmetric_element())
def test_phi_phi_inv(e):
    assert phi(phi_inv(e)) == e


def test_parallel_curves_chebyshev():
    for p, q in [(1, 0), (0, 1), (2, -3), (1, 4)]:
        for a in range(7):
            for b in range(7):
                lhs = etilde_mul(ET(a * p, a * q), ET(b * p, b * q))
                assert lhs == ET((a + b) * p, (a + b) * q) + ET((a - b) * p, (a - b) * q)


def P(text):
    return parse_poly(text, QA)


def test_peripheral_examples():
    Q1 = PeripheralPoly(QA, {0: P("-m"), 1: P("1")})
    assert peripheral_to_etilde(Q1) == ET(1, 0) - ET(0, 1)
    Q2 = PeripheralPoly(QA, {0: P("-m"), 2: P("1")})
    assert peripheral_to_etilde(Q2) == ET(2, 0) + UNIT.scale(2) - ET(0, 1)
    Q3 = PeripheralPoly(QA, {0: P("m^2")})
    assert peripheral_to_etilde(Q3) == ET(0, 2) + UNIT.scale(2)


def test_factor_order_left():
    # m * l sits as et01 * et10, not et10 * et01
    Q = PeripheralPoly(QA, {1: P("m")})
    assert peripheral_to_etilde(Q) == etilde_mul(ET(0, 1), ET(1, 0))
    assert peripheral_to_etilde(Q) != etilde_mul(ET(1, 0), ET(0, 1))


@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(-2, 2)), max_size=4))
def test_peripheral_theta_invariant(triples):
    coeffs = {}
    for i, j, k in triples:
        coeffs[i] = coeffs.get(i, Poly.constant(QA, 0)) + Poly.monomial(QA, j, QA.apow(k))
    S = peripheral_to_etilde(PeripheralPoly(QA, coeffs))
    assert theta(S.expand()) == S.expand()


def test_peripheral_poly_invariants():
    Q = PeripheralPoly(QA, {0: P("m"), 3: field_poly(QA, 0)})
    assert Q.degree == 0
    assert Q.leading() == P("m")
