"""JSON documents for elements, presentations, relations and reports.

Every document is UTF-8 JSON with sorted keys; scalars are strings in the
coefficient grammar, so printing and re-parsing is the identity.
"""

from __future__ import annotations

import json
from typing import Any

from .annihilator import AnnihilatingRelation, Annihilator, KnotPresentation, monomial_vertex_check, validate_relation
from .coeff import Field, ParseError, Poly, get_field, parse_poly, parse_scalar
from .filling import FillingReport
from .lattice import NewtonPolygon
from .qtorus import SymmetricElement, TorusElement, is_canonical
from .skein_t2 import EMPTY, CurveMonomial, PeripheralPoly, SkeinElement


class DocumentError(ValueError):
    """A structurally invalid document (as opposed to a bad scalar string)."""


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", text, exc.pos) from None


def _records(doc: Any, what: str) -> list:
    if isinstance(doc, dict):
        if "terms" not in doc:
            raise DocumentError(f"{what} document needs a 'terms' list")
        doc = doc["terms"]
    if not isinstance(doc, list):
        raise DocumentError(f"{what} document must be a list of records")
    return doc


def _int(rec: dict, key: str) -> int:
    v = rec.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise DocumentError(f"record {rec!r}: '{key}' must be an integer")
    return v


def _scalar(field: Field, v: Any):
    if isinstance(v, int) and not isinstance(v, bool):
        return field.coerce(v)
    if not isinstance(v, str):
        raise DocumentError(f"coefficient {v!r} must be a string")
    return parse_scalar(v, field)


def _term_records(terms) -> list[dict]:
    return [{"p": a, "q": b, "coeff": c} for (a, b), c in terms]


# elements

def element_to_doc(x: SymmetricElement | TorusElement) -> dict:
    f = x.field
    return {"terms": _term_records((k, f.format(v)) for k, v in x.items())}


def symmetric_from_doc(doc: Any, field: Field) -> SymmetricElement:
    terms: dict = {}
    for rec in _records(doc, "element"):
        p, q = _int(rec, "p"), _int(rec, "q")
        if not is_canonical(p, q):
            raise DocumentError(f"({p},{q}) is not a canonical class; use ({-p},{-q})")
        if (p, q) in terms:
            raise DocumentError(f"class ({p},{q}) listed twice")
        terms[(p, q)] = _scalar(field, rec.get("coeff"))
    return SymmetricElement(field, terms)


def torus_from_doc(doc: Any, field: Field) -> TorusElement:
    terms: dict = {}
    for rec in _records(doc, "element"):
        k = (_int(rec, "p"), _int(rec, "q"))
        if k in terms:
            raise DocumentError(f"index {k} listed twice")
        terms[k] = _scalar(field, rec.get("coeff"))
    return TorusElement(field, terms)


def skein_to_doc(x: SkeinElement) -> dict:
    f = x.field
    out = []
    for mono, c in x.items():
        p, q = mono.direction if mono.direction else (0, 0)
        out.append({"p": p, "q": q, "copies": mono.copies, "coeff": f.format(c)})
    return {"terms": out}


def skein_from_doc(doc: Any, field: Field) -> SkeinElement:
    terms: dict = {}
    for rec in _records(doc, "skein"):
        copies = _int(rec, "copies")
        if copies == 0:
            mono = EMPTY
        else:
            mono = CurveMonomial.curve(_int(rec, "p"), _int(rec, "q"), copies)
        c = _scalar(field, rec.get("coeff"))
        terms[mono] = terms[mono] + c if mono in terms else c
    return SkeinElement(field, terms)


# relations and peripheral polynomials

def relation_to_doc(R: AnnihilatingRelation) -> dict:
    f = R.field
    return {"terms": _term_records((k, f.format(v)) for k, v in sorted(R.terms.items()))}


def relation_from_doc(doc: Any, field: Field) -> AnnihilatingRelation:
    raw = [(_int(rec, "p"), _int(rec, "q"), _scalar(field, rec.get("coeff"))) for rec in _records(doc, "relation")]
    return validate_relation(field, raw)


def peripheral_to_doc(Q: PeripheralPoly) -> list[dict]:
    return [{"l_degree": i, "a": str(a)} for i, a in Q.coefficients.items()]


def peripheral_from_doc(doc: Any, field: Field) -> PeripheralPoly:
    if not isinstance(doc, list):
        raise DocumentError("peripheral polynomial document must be a list")
    coeffs: dict[int, Poly] = {}
    for rec in doc:
        i = _int(rec, "l_degree")
        a = rec.get("a")
        if not isinstance(a, str):
            raise DocumentError(f"record {rec!r}: 'a' must be a string")
        coeffs[i] = coeffs[i] + parse_poly(a, field) if i in coeffs else parse_poly(a, field)
    return PeripheralPoly(field, coeffs)


# presentations

def presentation_from_doc(doc: Any, coeff_override: str | None = None) -> tuple[KnotPresentation, list]:
    """Returns the presentation and the list of targets (names or vectors)."""
    if not isinstance(doc, dict):
        raise DocumentError("presentation document must be an object")
    for key in ("generators", "longitude_action"):
        if key not in doc:
            raise DocumentError(f"presentation document needs '{key}'")
    field = get_field(coeff_override or doc.get("coeff", "QA"))
    gens = doc["generators"]
    if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
        raise DocumentError("'generators' must be a list of names")
    rows = doc["longitude_action"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise DocumentError("'longitude_action' must be a list of rows")
    L = tuple(tuple(_poly_entry(e, field) for e in row) for row in rows)
    pres = KnotPresentation(field, tuple(gens), L)
    targets: list = []
    if "targets" in doc:
        for t in doc["targets"]:
            targets.append(_target(t, pres))
    elif "target" in doc:
        targets.append(_target(doc["target"], pres))
    else:
        targets = list(gens)
    return pres, targets


def _poly_entry(e: Any, field: Field) -> Poly:
    if isinstance(e, int) and not isinstance(e, bool):
        return Poly.constant(field, e)
    if not isinstance(e, str):
        raise DocumentError(f"matrix entry {e!r} must be a string")
    return parse_poly(e, field)


def _target(t: Any, pres: KnotPresentation):
    if isinstance(t, str):
        pres.index(t)
        return t
    if isinstance(t, list):
        return [_poly_entry(e, pres.field) for e in t]
    raise DocumentError(f"target {t!r} must be a generator name or a vector")


# reports

def polygon_to_doc(P: NewtonPolygon) -> dict:
    return {"kind": P.kind, "vertices": [list(v) for v in P.vertices]}


def slopes_to_doc(ss) -> list[str]:
    return [str(s) for s in sorted(ss)]


def annihilator_to_doc(ann: Annihilator) -> dict:
    R = ann.relation
    ok, bad = monomial_vertex_check(R)
    return {
        "generator": ann.generator,
        "generator_is_zero": ann.is_zero or R.is_zero_generator,
        "peripheral": peripheral_to_doc(ann.peripheral),
        "relation": relation_to_doc(R),
        "polygon": polygon_to_doc(R.polygon),
        "slopes": slopes_to_doc(R.slopes),
        "monomial_vertices": ok,
        "non_monomial_vertices": [{"p": v[0], "q": v[1], "coeff": R.field.format(c)} for v, c in bad],
    }


def filling_report_to_doc(rep: FillingReport) -> dict:
    gens = []
    for g in rep.generators:
        d: dict = {"index": g.index, "name": g.name, "generator_is_zero": g.is_zero,
                   "polygon_slopes": slopes_to_doc(g.polygon_slopes)}
        if g.bound is not None:
            d["bound"] = g.bound
            d["classes"] = [list(c) for c in g.classes]
        if g.band is not None:
            d["band"] = {"lambda": list(g.band.lam), "epsilon": list(g.band.eps), "M": g.band.M,
                         "derived_closed_form": 3 * g.band.M + 2}
        gens.append(d)
    return {
        "slope": str(rep.slope),
        "filling_direction": [rep.slope.p, rep.slope.q],
        "excluded": rep.excluded,
        "excluded_slopes": slopes_to_doc(rep.excluded_slopes),
        "generators": gens,
        "total_bound": rep.total_bound,
        "bound_kind": "upper bound on dimension (spanning set, not a basis)",
    }
