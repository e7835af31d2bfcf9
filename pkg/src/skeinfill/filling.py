"""Rewriting in the skein module of a Dehn filling.

Two families of relations act on et_{a,b} . f_i:

* translates of the annihilating relation of f_i, which push terms into
  the band |lam| <= M_i, where lam vanishes on the filling direction;
* filling relations (the filling curve bounds a disk, so it acts as the
  scalar -(A^2 + A^-2)), which push terms into 0 <= eps <= 1 without
  changing lam.

Every elimination is logged in a ``ReductionCertificate`` whose replay
rebuilds ``input - output`` from the relations with the algebra product.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import gcd
from typing import Sequence

from .annihilator import AnnihilatingRelation, translate_relation
from .coeff import Field, kappa
from .lattice import BandPair, Slope, band_pair, enumerate_classes, filling_forms
from .qtorus import Pair, SymmetricElement, canonical_class, etilde_mul

TRANSLATED, DEHN = "TRANSLATED", "DEHN"


class NotReducible(ValueError):
    """The filling slope is a slope of the Newton polygon."""


@dataclass(frozen=True, order=True)
class FillingSlope:
    p: int
    q: int

    def __post_init__(self):
        if gcd(abs(self.p), abs(self.q)) != 1:
            raise ValueError(f"({self.p},{self.q}) is not a coprime pair")
        if not (self.p > 0 or (self.p == 0 and self.q == 1)):
            raise ValueError(f"({self.p},{self.q}) is not canonical (need p > 0, or p = 0 and q = 1)")

    @classmethod
    def of(cls, p: int, q: int) -> "FillingSlope":
        g = gcd(abs(p), abs(q))
        if g != 1:
            raise ValueError(f"({p},{q}) is not a coprime pair")
        if p < 0 or (p == 0 and q < 0):
            p, q = -p, -q
        return cls(p, q)

    @classmethod
    def parse(cls, text: str) -> "FillingSlope":
        """Accepts "q/p", an integer "q", or "inf" for 1/0."""
        t = text.strip().replace(" ", "")
        if t.lower() in ("inf", "infinity", "oo"):
            return cls(0, 1)
        if "/" in t:
            num, den = t.split("/", 1)
            q, p = int(num), int(den)
        else:
            q, p = int(t), 1
        if p == 0 and abs(q) != 1:
            raise ValueError(f"slope {text!r}: use inf for 1/0")
        return cls.of(p, q)

    @property
    def slope(self) -> Slope:
        return Slope.of_direction(self.p, self.q)

    def __str__(self) -> str:
        return str(self.slope)


@dataclass
class ModuleVector:
    """sum_i x_i . f_i with x_i symmetric elements."""

    field: Field
    components: dict[int, SymmetricElement] = dc_field(default_factory=dict)

    def __post_init__(self):
        self.components = {i: x for i, x in sorted(self.components.items()) if x}

    @classmethod
    def term(cls, field: Field, gen: int, a: int, b: int, coeff=1) -> "ModuleVector":
        return cls(field, {gen: SymmetricElement.basis(a, b, coeff, field)})

    def component(self, i: int) -> SymmetricElement:
        return self.components.get(i, SymmetricElement(self.field, {}))

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        out = dict(self.components)
        for i, x in other.components.items():
            out[i] = out[i] + x if i in out else x
        return ModuleVector(self.field, out)

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        return self + ModuleVector(other.field, {i: -x for i, x in other.components.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, ModuleVector) and self.components == other.components

    def __bool__(self) -> bool:
        return bool(self.components)


@dataclass(frozen=True)
class CertificateStep:
    kind: str
    generator: int
    base: Pair
    multiplier: object


@dataclass
class ReductionCertificate:
    steps: list[CertificateStep] = dc_field(default_factory=list)
    band_rounds: int = 0
    eps_rounds: int = 0

    def extend(self, other: "ReductionCertificate") -> None:
        self.steps.extend(other.steps)
        self.band_rounds += other.band_rounds
        self.eps_rounds += other.eps_rounds

    def __len__(self) -> int:
        return len(self.steps)

    def replay(self, relations: Sequence[AnnihilatingRelation], s: FillingSlope, field: Field) -> ModuleVector:
        """Rebuild sum of multiplier * relation with the algebra product only."""
        acc: dict[int, dict] = {}
        sym = {}
        filling_curve = None
        for st in self.steps:
            if st.kind == TRANSLATED:
                if st.generator not in sym:
                    sym[st.generator] = relations[st.generator].to_symmetric()
                rel = etilde_mul(SymmetricElement.basis(*st.base, field=field), sym[st.generator])
            elif st.kind == DEHN:
                if filling_curve is None:
                    filling_curve = (SymmetricElement.basis(s.p, s.q, field=field)
                                     + SymmetricElement.unit(field).scale(kappa(field)))
                rel = etilde_mul(filling_curve, SymmetricElement.basis(*st.base, field=field))
            else:
                raise ValueError(f"unknown certificate step kind {st.kind!r}")
            work = acc.setdefault(st.generator, {})
            for k, v in rel.terms.items():
                work[k] = work[k] + v * st.multiplier if k in work else v * st.multiplier
        return ModuleVector(field, {g: SymmetricElement(field, w) for g, w in acc.items()})

    def verify(self, relations, s: FillingSlope, field: Field, before: ModuleVector, after: ModuleVector) -> bool:
        return self.replay(relations, s, field) == before - after


def dehn_relation(s: FillingSlope, alpha: int, beta: int, field: Field) -> SymmetricElement:
    """A^{p b - q a} et_{a+p,b+q} + A^{q a - p b} et_{a-p,b-q} + (A^2+A^-2) et_{a,b}."""
    p, q = s.p, s.q
    w = p * beta - q * alpha
    return _sum_terms(field, [
        ((alpha + p, beta + q), field.apow(w)),
        ((alpha - p, beta - q), field.apow(-w)),
        ((alpha, beta), kappa(field)),
    ])


def _sum_terms(field: Field, items) -> SymmetricElement:
    out: dict = {}
    for pt, c in items:
        key = canonical_class(*pt)
        out[key] = out[key] + c if key in out else c
    return SymmetricElement._from_clean(field, {k: v for k, v in out.items() if v})


def _subtract_scaled(work: dict, rel: SymmetricElement, mult) -> None:
    for k, v in rel.terms.items():
        val = work.get(k)
        nv = -(v * mult) if val is None else val - v * mult
        if nv:
            work[k] = nv
        else:
            work.pop(k, None)


def _oriented(bp: BandPair, cls_: Pair, positive_lam: bool) -> Pair:
    """Representative of the class with lam >= 0 (or eps >= 0)."""
    neg = (-cls_[0], -cls_[1])
    val = bp.lam_at(cls_) if positive_lam else bp.eps_at(cls_)
    return cls_ if val >= 0 else neg


def band_reduce(R: AnnihilatingRelation, s: FillingSlope, x: SymmetricElement,
                generator: int = 0) -> tuple[SymmetricElement, ReductionCertificate]:
    """Rewrite x . f into a combination supported on |lam| <= M."""
    field = x.field
    cert = ReductionCertificate()
    if R.is_zero_generator:
        c0 = R.coefficient((0, 0))
        for k, v in sorted(x.terms.items()):
            cert.steps.append(CertificateStep(TRANSLATED, generator, k, v / c0))
        cert.band_rounds = 1 if x else 0
        return SymmetricElement(field, {}), cert
    bp, unique = band_pair(s.p, s.q, R.polygon)
    if not unique:
        raise NotReducible(f"slope {s} is a slope of the Newton polygon; it belongs to the excluded set")
    M = bp.M
    vertex = next(v for v in R.polygon.vertices if bp.lam_at(v) == M)
    work = dict(x.terms)
    level = None
    while True:
        over = [(abs(bp.lam_at(k)), k) for k in work if abs(bp.lam_at(k)) > M]
        if not over:
            break
        top_lam = max(l for l, _ in over)
        cls_ = min(k for l, k in over if l == top_lam)
        if top_lam != level:
            cert.band_rounds += 1
            level = top_lam
        t = _oriented(bp, cls_, True)
        mu, nu = t[0] - vertex[0], t[1] - vertex[1]
        rel = translate_relation(R, mu, nu)
        mult = work[cls_] / rel.terms[cls_]
        _subtract_scaled(work, rel, mult)
        cert.steps.append(CertificateStep(TRANSLATED, generator, (mu, nu), mult))
    return SymmetricElement._from_clean(field, work), cert


def epsilon_reduce(s: FillingSlope, x: SymmetricElement,
                   generator: int = 0) -> tuple[SymmetricElement, ReductionCertificate]:
    """Rewrite x . f into a combination supported on 0 <= eps <= 1, lam unchanged."""
    field = x.field
    lam, eps = filling_forms(s.p, s.q)
    bp = BandPair(lam, eps, 0)
    cert = ReductionCertificate()
    work = dict(x.terms)
    level = None
    while True:
        over = [(abs(bp.eps_at(k)), k) for k in work if abs(bp.eps_at(k)) > 1]
        if not over:
            break
        top = max(e for e, _ in over)
        cls_ = min(k for e, k in over if e == top)
        if top != level:
            cert.eps_rounds += 1
            level = top
        t = _oriented(bp, cls_, False)
        base = (t[0] - s.p, t[1] - s.q)
        rel = dehn_relation(s, base[0], base[1], field)
        mult = work[cls_] / rel.terms[cls_]
        _subtract_scaled(work, rel, mult)
        cert.steps.append(CertificateStep(DEHN, generator, base, mult))
    return SymmetricElement._from_clean(field, work), cert


def excluded_slopes(relations: Sequence[AnnihilatingRelation]) -> list[Slope]:
    out: set[Slope] = set()
    for R in relations:
        out |= R.slopes
    return sorted(out)


def reduce_full(relations: Sequence[AnnihilatingRelation], s: FillingSlope,
                v: ModuleVector) -> tuple[ModuleVector, ReductionCertificate]:
    """Band reduction followed by eps reduction, generator by generator."""
    if s.slope in excluded_slopes(relations):
        raise NotReducible(f"slope {s} is excluded")
    cert = ReductionCertificate()
    out = {}
    for i, x in v.components.items():
        y, c1 = band_reduce(relations[i], s, x, i)
        z, c2 = epsilon_reduce(s, y, i)
        cert.extend(c1)
        cert.extend(c2)
        out[i] = z
    return ModuleVector(v.field, out), cert


@dataclass
class GeneratorReport:
    index: int
    name: str
    is_zero: bool
    polygon_slopes: list[Slope]
    band: BandPair | None = None
    classes: list[Pair] | None = None
    bound: int | None = None


@dataclass
class FillingReport:
    slope: FillingSlope
    excluded: bool
    excluded_slopes: list[Slope]
    generators: list[GeneratorReport]
    total_bound: int | None


def analyze_filling(relations: Sequence[AnnihilatingRelation], s: FillingSlope,
                    names: Sequence[str] | None = None) -> FillingReport:
    names = list(names) if names is not None else [f"f{i + 1}" for i in range(len(relations))]
    excl = excluded_slopes(relations)
    excluded = s.slope in excl
    gens = []
    for i, R in enumerate(relations):
        g = GeneratorReport(i, names[i], R.is_zero_generator, sorted(R.slopes))
        if not excluded:
            if g.is_zero:
                g.classes, g.bound = [], 0
            else:
                bp, unique = band_pair(s.p, s.q, R.polygon)
                assert unique
                g.band = bp
                g.classes = enumerate_classes(bp)
                g.bound = len(g.classes)
        gens.append(g)
    total = None if excluded else sum(g.bound for g in gens)
    return FillingReport(s, excluded, excl, gens, total)


def meridian_scalar(x: SymmetricElement) -> object:
    """Value of x . f at the meridian filling, where et_{0,1} . f = -(A^2+A^-2) f.

    Only defined on combinations of et_{0,0} and et_{0,1}.
    """
    field = x.field
    extra = set(x.terms) - {(0, 0), (0, 1)}
    if extra:
        raise ValueError(f"not a meridian normal form: extra classes {sorted(extra)}")
    return x.coeff((0, 0)) * 2 - x.coeff((0, 1)) * kappa(field)

