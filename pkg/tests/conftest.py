from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from skeinfill.coeff import QA, LaurentPoly, RatFunc
from skeinfill.qtorus import SymmetricElement, TorusElement, canonical_class

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_fraction = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4))


@st.composite
def laurent(draw, max_terms=4, span=4):
    exps = draw(st.lists(st.integers(-span, span), max_size=max_terms, unique=True))
    return LaurentPoly({e: draw(small_fraction) for e in exps})


@st.composite
def ratfunc(draw, nonzero=False):
    num = draw(laurent())
    if nonzero and not num:
        num = LaurentPoly.monomial(draw(st.integers(-3, 3)), 1)
    den = draw(laurent(max_terms=3, span=2))
    if not den:
        den = LaurentPoly.constant(1)
    return RatFunc(num, den)


pair = st.tuples(st.integers(-8, 8), st.integers(-8, 8))


@st.composite
def torus_element(draw, max_terms=3):
    pts = draw(st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), max_size=max_terms, unique=True))
    return TorusElement(QA, {p: draw(laurent(max_terms=2, span=2)) for p in pts})


@st.composite
def symmetric_element(draw, max_terms=3):
    pts = draw(st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), max_size=max_terms))
    terms = {}
    for p in pts:
        terms[canonical_class(*p)] = draw(laurent(max_terms=2, span=2))
    return SymmetricElement(QA, terms)


@pytest.fixture
def data_dir():
    from pathlib import Path

    return Path(__file__).resolve().parent.parent / "data"


# one line per acceptance criterion, filled in by tests/test_acceptance.py
CRITERIA: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for n in sorted(CRITERIA):
            terminalreporter.write_line(CRITERIA[n])
