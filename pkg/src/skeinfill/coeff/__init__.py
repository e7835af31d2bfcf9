"""Exact coefficient arithmetic: Q[A^+-1], Q(A), Q(A)(m2) and polynomials over them."""

from .extended import QAm2, ExtFunc
from .field import QA, Field, FieldTag
from .laurent import LaurentPoly
from .matrix import poly_eval_matrix
from .parse import ParseError, parse_poly, parse_scalar
from .poly import Poly
from .ratfunc import CoeffZeroDivision, RatFunc

BASE = QA
EXTENDED = QAm2


def get_field(tag: str | FieldTag) -> Field:
    """Look up a field by its document tag ("QA" or "QAm2")."""
    if isinstance(tag, FieldTag):
        tag = tag.value
    try:
        return {"QA": QA, "QAm2": QAm2}[tag]
    except KeyError:
        raise ValueError(f"unknown coefficient field {tag!r} (expected QA or QAm2)") from None


def kappa(field: Field):
    """A^2 + A^-2, minus the value of a contractible loop."""
    return field.apow(2) + field.apow(-2)


__all__ = [
    "BASE",
    "EXTENDED",
    "QA",
    "QAm2",
    "CoeffZeroDivision",
    "ExtFunc",
    "Field",
    "FieldTag",
    "LaurentPoly",
    "ParseError",
    "Poly",
    "RatFunc",
    "get_field",
    "kappa",
    "parse_poly",
    "parse_scalar",
    "poly_eval_matrix",
]
