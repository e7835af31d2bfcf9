"""Command-line interface.

    python -m skeinfill mul a.json b.json
    python -m skeinfill phi skein.json
    python -m skeinfill phi-inv element.json
    python -m skeinfill annihilate presentation.json [--generator NAME]
    python -m skeinfill polygon relation.json [...]
    python -m skeinfill fill relation.json [...] --slope -1/2 [--verify] [--svg out.svg]
    python -m skeinfill report presentation.json

Exit codes: 0 success (an excluded slope is a verdict, not an error),
2 parse error, 3 precondition violation, 4 internal invariant failure.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from math import gcd
from pathlib import Path
from typing import Sequence

from . import documents as docs
from .annihilator import RelationError, compute_annihilator
from .coeff import CoeffZeroDivision, ParseError, get_field
from .filling import FillingSlope, ModuleVector, NotReducible, analyze_filling, excluded_slopes, reduce_full
from .qtorus import NotThetaInvariant, etilde_mul
from .skein_t2 import phi, phi_inv
from .svg import render_band_svg

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_INVARIANT = 0, 2, 3, 4

# slopes q/p with |q|, p <= SAMPLE_RADIUS at which report evaluates the bound
SAMPLE_RADIUS = 3


class InvariantFailure(RuntimeError):
    pass


@dataclass
class RunConfig:
    command: str
    inputs: list[Path]
    slope: FillingSlope | None = None
    coeff: str | None = None
    generator: str | None = None
    verify: bool = False
    svg: Path | None = None
    out: Path | None = None


def _read(path: Path):
    return docs.loads(path.read_text(encoding="utf-8"))


def _field_for(cfg: RunConfig, doc):
    tag = cfg.coeff or (doc.get("coeff") if isinstance(doc, dict) else None) or "QA"
    return get_field(tag)


def cmd_mul(cfg: RunConfig) -> dict:
    if len(cfg.inputs) != 2:
        raise ValueError("mul takes exactly two element documents")
    a_doc, b_doc = (_read(p) for p in cfg.inputs)
    f = _field_for(cfg, a_doc)
    x = docs.symmetric_from_doc(a_doc, f)
    y = docs.symmetric_from_doc(b_doc, f)
    return docs.element_to_doc(etilde_mul(x, y))


def cmd_phi(cfg: RunConfig) -> dict:
    d = _read(_single(cfg))
    return docs.element_to_doc(phi(docs.skein_from_doc(d, _field_for(cfg, d))))


def cmd_phi_inv(cfg: RunConfig) -> dict:
    d = _read(_single(cfg))
    return docs.skein_to_doc(phi_inv(docs.symmetric_from_doc(d, _field_for(cfg, d))))


def _single(cfg: RunConfig) -> Path:
    if len(cfg.inputs) != 1:
        raise ValueError(f"{cfg.command} takes exactly one input document")
    return cfg.inputs[0]


def _annihilators(cfg: RunConfig):
    pres, targets = docs.presentation_from_doc(_read(_single(cfg)), cfg.coeff)
    if cfg.generator is not None:
        targets = [cfg.generator]
    return pres, [compute_annihilator(pres, t) for t in targets]


def cmd_annihilate(cfg: RunConfig) -> dict:
    pres, anns = _annihilators(cfg)
    return {
        "coeff": pres.field.label,
        "annihilators": [docs.annihilator_to_doc(a) for a in anns],
        "excluded_slopes": docs.slopes_to_doc(excluded_slopes([a.relation for a in anns])),
    }


def _relations(cfg: RunConfig):
    rels = []
    f = None
    for p in cfg.inputs:
        d = _read(p)
        f = f or _field_for(cfg, d)
        rels.append(docs.relation_from_doc(d, f))
    if not rels:
        raise ValueError(f"{cfg.command} needs at least one relation document")
    return rels


def cmd_polygon(cfg: RunConfig) -> dict:
    rels = _relations(cfg)
    return {
        "relations": [{"input": p.name, "polygon": docs.polygon_to_doc(R.polygon),
                       "slopes": docs.slopes_to_doc(R.slopes)} for p, R in zip(cfg.inputs, rels)],
        "excluded_slopes": docs.slopes_to_doc(excluded_slopes(rels)),
    }


def _verify_certificates(rels, s: FillingSlope, rep) -> dict:
    """Reduce probe terms around each band and replay the certificates."""
    checked = steps = 0
    for g in rep.generators:
        if g.is_zero:
            probes = [(0, 0), (1, 0)]
        else:
            r = g.band.M + 3
            probes = [(a, b) for a in range(0, r + 1) for b in range(-r, r + 1) if a > 0 or b >= 0]
        for a, b in probes:
            v = ModuleVector.term(rels[g.index].field, g.index, a, b)
            out, cert = reduce_full(rels, s, v)
            if not cert.verify(rels, s, v.field, v, out):
                raise InvariantFailure(f"certificate replay failed for et({a},{b}) on {g.name}")
            support = set(out.component(g.index).terms)
            if not support <= set(g.classes):
                raise InvariantFailure(f"normal form of et({a},{b}) left the spanning classes")
            checked += 1
            steps += len(cert)
    return {"probes": checked, "steps": steps, "verified": True}


def cmd_fill(cfg: RunConfig) -> dict:
    if cfg.slope is None:
        raise ValueError("fill needs --slope")
    rels = _relations(cfg)
    names = [p.stem for p in cfg.inputs]
    rep = analyze_filling(rels, cfg.slope, names)
    out = docs.filling_report_to_doc(rep)
    if not rep.excluded and cfg.verify:
        out["certificates"] = _verify_certificates(rels, cfg.slope, rep)
    if cfg.svg is not None and not rep.excluded:
        g = next((g for g in rep.generators if not g.is_zero), None)
        if g is not None:
            svg = render_band_svg(rels[g.index].polygon, g.band, g.classes, f"{g.name} at slope {cfg.slope}")
            cfg.svg.write_text(svg, encoding="utf-8")
    return out


def sample_slopes(radius: int = SAMPLE_RADIUS) -> list[FillingSlope]:
    out = {FillingSlope(0, 1)}
    for p in range(1, radius + 1):
        for q in range(-radius, radius + 1):
            if gcd(p, abs(q)) == 1:
                out.add(FillingSlope(p, q))
    return sorted(out, key=lambda s: s.slope)


def cmd_report(cfg: RunConfig) -> dict:
    pres, anns = _annihilators(cfg)
    rels = [a.relation for a in anns]
    excl = excluded_slopes(rels)
    samples = []
    for s in sample_slopes():
        if s.slope in excl:
            continue
        rep = analyze_filling(rels, s, [a.generator for a in anns])
        samples.append({"slope": str(s), "total_bound": rep.total_bound,
                        "M": [g.band.M if g.band else None for g in rep.generators]})
    bounds = {d["total_bound"] for d in samples}
    support = []
    for a in anns:
        R = a.relation
        support.append({
            "generator": a.generator,
            "generator_is_zero": R.is_zero_generator,
            "vertices": [list(v) for v in R.polygon.vertices],
        })
    return {
        "coeff": pres.field.label,
        "module": "localized" if pres.field.label == "QAm2" else "standard",
        "annihilators": [docs.annihilator_to_doc(a) for a in anns],
        "excluded_slopes": docs.slopes_to_doc(excl),
        "bound_function": {
            "formula": "total(q/p) = sum over nonzero generators of 3*M_i + 2, "
                       "M_i = max over polygon vertices (x, y) of q*x - p*y",
            "formula_kind": "implementation-derived",
            "per_generator": support,
            "samples": samples,
            "constant": len(bounds) <= 1,
            "value": next(iter(bounds)) if len(bounds) == 1 else None,
            "note": ("the bound is the same at every sampled slope" if len(bounds) <= 1 else
                     "M_i is the support function of the polygon at (q, -p), so the bound varies with the slope"),
        },
    }


COMMANDS = {
    "mul": cmd_mul,
    "phi": cmd_phi,
    "phi-inv": cmd_phi_inv,
    "annihilate": cmd_annihilate,
    "polygon": cmd_polygon,
    "fill": cmd_fill,
    "report": cmd_report,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="skeinfill", description="Skein modules of Dehn fillings via the quantum torus.")
    ap.add_argument("command", choices=sorted(COMMANDS))
    ap.add_argument("inputs", nargs="*", type=Path)
    ap.add_argument("--slope", help="filling slope q/p, an integer, or inf")
    ap.add_argument("--coeff", choices=["QA", "QAm2"], help="coefficient field (default: from the document, else QA)")
    ap.add_argument("--generator", help="annihilate only this generator")
    ap.add_argument("--verify", action="store_true", help="replay reduction certificates on probe terms")
    ap.add_argument("--svg", type=Path, help="write a band diagram")
    ap.add_argument("--out", type=Path, help="write the JSON document here instead of stdout")
    return ap


def _glue_slope(argv: list[str]) -> list[str]:
    # "--slope -1/2" would otherwise be read as an unknown option
    out, i = [], 0
    while i < len(argv):
        if argv[i] == "--slope" and i + 1 < len(argv):
            out.append(f"--slope={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def parse_config(argv: Sequence[str] | None) -> RunConfig:
    argv = list(sys.argv[1:] if argv is None else argv)
    ns = build_parser().parse_args(_glue_slope(argv))
    slope = None
    if ns.slope is not None:
        try:
            slope = FillingSlope.parse(ns.slope)
        except ValueError as exc:
            raise ParseError(f"bad slope {ns.slope!r}: {exc}", ns.slope, 0) from None
    return RunConfig(ns.command, list(ns.inputs), slope, ns.coeff, ns.generator, ns.verify, ns.svg, ns.out)


def run(cfg: RunConfig) -> str:
    return docs.dumps(COMMANDS[cfg.command](cfg))


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = parse_config(argv)
        text = run(cfg)
    except (ParseError, docs.DocumentError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvariantFailure as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (NotReducible, RelationError, NotThetaInvariant, CoeffZeroDivision, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (AssertionError, ArithmeticError) as exc:
        print(f"invariant failure: {exc!r}", file=sys.stderr)
        return EXIT_INVARIANT
    if cfg.out is not None:
        cfg.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK
