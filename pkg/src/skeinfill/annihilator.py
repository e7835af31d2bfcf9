"""Annihilating polynomials of skein module elements and their translates.

A knot complement's skein module is modelled as a free Q(A)[m]-module with
basis f_1..f_d and a matrix for the action of the longitude l (column j
holds the coordinates of l . f_j).  For a target vector v the Krylov
sequence v, Lv, L^2 v, ... has a first linear dependence over Q(A)(m);
clearing denominators gives Q = sum a_i(m) l^i with Q . v = 0, which is
then pushed through the Frohman-Gelca map.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Callable, Mapping, Sequence

from .coeff import Field, Poly
from .coeff.bridge import coprime_parts, poly_from_multinomial
from .coeff.matrix import bareiss_det, check_square, mat_vec
from .lattice import NewtonPolygon, Slope, newton_polygon, slopes
from .qtorus import Pair, SymmetricElement, canonical_class, is_canonical
from .skein_t2 import PeripheralPoly, peripheral_to_etilde


class Cancelled(RuntimeError):
    """Raised when a cooperative cancellation check fires."""


class RelationError(ValueError):
    pass


@dataclass(frozen=True)
class KnotPresentation:
    field: Field
    generators: tuple[str, ...]
    longitude: tuple[tuple[Poly, ...], ...]

    def __post_init__(self):
        n = check_square(self.longitude)
        if n != len(self.generators):
            raise ValueError(f"{len(self.generators)} generators but a {n}x{n} longitude matrix")
        if len(set(self.generators)) != n:
            raise ValueError("generator names must be distinct")

    @property
    def dim(self) -> int:
        return len(self.generators)

    def index(self, name: str) -> int:
        try:
            return self.generators.index(name)
        except ValueError:
            raise ValueError(f"unknown generator {name!r}") from None

    def basis_vector(self, i: int) -> list[Poly]:
        f = self.field
        return [Poly.constant(f, 1 if j == i else 0) for j in range(self.dim)]

    def matrix(self) -> list[list[Poly]]:
        return [list(row) for row in self.longitude]


@dataclass
class AnnihilatingRelation:
    """sum c_{a,b} e_{a,b} with c_{a,b} = c_{-a,-b}, stored once per class.

    ``terms`` holds the e-basis coefficients, so the class (0,0) carries
    c_{0,0} and every other class stands for both of its lattice points.
    """

    field: Field
    terms: dict[Pair, object] = dc_field(default_factory=dict)

    @classmethod
    def from_symmetric(cls, x: SymmetricElement) -> "AnnihilatingRelation":
        terms = {k: (v + v if k == (0, 0) else v) for k, v in x.terms.items()}
        return cls(x.field, terms)

    def to_symmetric(self) -> SymmetricElement:
        half = self.field.coerce(1) / 2
        return SymmetricElement(self.field, {k: (v * half if k == (0, 0) else v) for k, v in self.terms.items()})

    def lattice_terms(self) -> list[tuple[Pair, object]]:
        """(point, c) for every lattice point of the support, both signs."""
        out = []
        for (a, b), c in sorted(self.terms.items()):
            out.append(((a, b), c))
            if (a, b) != (0, 0):
                out.append(((-a, -b), c))
        return out

    @cached_property
    def polygon(self) -> NewtonPolygon:
        return newton_polygon(pt for pt, _ in self.lattice_terms())

    @property
    def slopes(self) -> set[Slope]:
        return slopes(self.polygon)

    def coefficient(self, pt: Pair):
        return self.terms.get(canonical_class(*pt), self.field.zero)

    def vertex_coefficients(self) -> list[tuple[Pair, object]]:
        return [(v, self.coefficient(v)) for v in self.polygon.vertices]

    @property
    def is_zero_generator(self) -> bool:
        """Polygon is the origin: 2 c_{0,0} f = 0 forces f = 0."""
        return self.polygon.is_origin_point()


def validate_relation(field: Field, raw: Mapping[Pair, object] | Sequence[tuple[int, int, object]]) -> AnnihilatingRelation:
    items = raw.items() if isinstance(raw, Mapping) else [((p, q), c) for p, q, c in raw]
    terms: dict = {}
    for (p, q), c in items:
        p, q = int(p), int(q)
        if not is_canonical(p, q):
            raise RelationError(f"non-canonical class index ({p},{q}); use {canonical_class(p, q)}")
        if (p, q) in terms:
            raise RelationError(f"class ({p},{q}) listed twice")
        terms[(p, q)] = field.coerce(c)
    terms = {k: v for k, v in terms.items() if v}
    if not terms:
        raise RelationError("the zero relation carries no information")
    return AnnihilatingRelation(field, terms)


def translate_relation(R: AnnihilatingRelation, mu: int, nu: int) -> SymmetricElement:
    """sum over lattice points c_{a,b} A^{b mu - a nu} et_{a+mu, b+nu}."""
    out: dict = {}
    for (a, b), c in R.lattice_terms():
        key = canonical_class(a + mu, b + nu)
        val = c.mul_apow(b * mu - a * nu)
        out[key] = out[key] + val if key in out else val
    return SymmetricElement._from_clean(R.field, {k: v for k, v in out.items() if v})


def monomial_vertex_check(R: AnnihilatingRelation) -> tuple[bool, list[tuple[Pair, object]]]:
    """Are all vertex coefficients +-A^k?  Returns the failing vertices as witness."""
    bad = [(v, c) for v, c in R.vertex_coefficients() if not R.field.is_signed_apower(c)]
    return not bad, bad


@dataclass
class Annihilator:
    generator: str
    peripheral: PeripheralPoly
    relation: AnnihilatingRelation
    is_zero: bool = False

    def __iter__(self):
        yield self.peripheral
        yield self.relation


def _vec_is_zero(v: Sequence[Poly]) -> bool:
    return all(not x for x in v)


def _det(rows: list[list[Poly]], field: Field) -> Poly:
    zero = Poly.constant(field, 0)
    one = Poly.constant(field, 1)
    return bareiss_det(rows, zero, one, lambda a, b: a.exact_div(b))


def _cramer_kernel(W: list[list[Poly]], rows: list[int], k: int, field: Field) -> list[Poly]:
    """Kernel of the k x (k+1) matrix W[rows, 0..k] by signed maximal minors."""
    out = []
    for j in range(k + 1):
        cols = [c for c in range(k + 1) if c != j]
        minor = [[W[r][c] for c in cols] for r in rows]
        d = _det(minor, field)
        out.append(-d if j % 2 else d)
    return out


def krylov_dependence(L: list[list[Poly]], v: list[Poly], field: Field,
                      cancel: Callable[[], bool] | None = None) -> list[Poly]:
    """Coefficients a_0..a_k of the first dependence sum a_j L^j v = 0 (a_k != 0)."""
    zero = Poly.constant(field, 0)
    if _vec_is_zero(v):
        return [Poly.constant(field, 1)]
    d = len(v)
    cols = [list(v)]
    rows = [next(i for i, x in enumerate(v) if x)]
    while True:
        if cancel is not None and cancel():
            raise Cancelled("annihilator computation cancelled")
        k = len(cols)
        cols.append(mat_vec(L, cols[-1], zero))
        W = [[cols[j][i] for j in range(k + 1)] for i in range(d)]
        a = _cramer_kernel(W, rows, k, field)
        residual = [sum((W[i][j] * a[j] for j in range(k + 1) if W[i][j] and a[j]), zero) for i in range(d)]
        fresh = [i for i, x in enumerate(residual) if x and i not in rows]
        if not fresh:
            assert _vec_is_zero(residual)
            return a
        # residual[i] is +- the (k+1)-minor on rows + [i], so that row extends the independent set
        rows.append(fresh[0])


def primitive_form(a: list[Poly], field: Field) -> list[Poly]:
    """Remove every common factor in field[m], then fix the scalar by the field's primitive form."""
    idx = [j for j, x in enumerate(a) if x]
    if not idx:
        return a
    nums, dens = zip(*(field.poly_multinomials(a[j]) for j in idx))
    parts = coprime_parts(nums, dens)
    out = [Poly.constant(field, 0)] * len(a)
    for j, t in zip(idx, parts):
        out[j] = poly_from_multinomial(field, t, a[j].var)
    flat = [c for x in out for c in x.c if c]
    s = field.primitive_scale(flat)
    return [x.scale(s) for x in out]


def compute_annihilator(pres: KnotPresentation, target: int | str | Sequence[Poly],
                        cancel: Callable[[], bool] | None = None) -> Annihilator:
    field = pres.field
    if isinstance(target, str):
        name, v = target, pres.basis_vector(pres.index(target))
    elif isinstance(target, int):
        name, v = pres.generators[target], pres.basis_vector(target)
    else:
        name, v = "vector", [field_poly(field, x) for x in target]
        if len(v) != pres.dim:
            raise ValueError(f"target vector has length {len(v)}, expected {pres.dim}")
    a = krylov_dependence(pres.matrix(), v, field, cancel)
    a = primitive_form(a, field)
    Q = PeripheralPoly(field, dict(enumerate(a)))
    S = peripheral_to_etilde(Q)
    R = AnnihilatingRelation.from_symmetric(S)
    return Annihilator(name, Q, R, is_zero=_vec_is_zero(v))


def field_poly(field: Field, x) -> Poly:
    return x if isinstance(x, Poly) else Poly.constant(field, x)


def apply_peripheral(Q: PeripheralPoly, L: list[list[Poly]], v: list[Poly]) -> list[Poly]:
    """sum_i a_i(m) L^i v, treating m as a scalar of the module."""
    zero = Poly.constant(Q.field, 0)
    out = [zero] * len(v)
    w = list(v)
    top = Q.degree or 0
    for i in range(top + 1):
        a = Q.coefficients.get(i)
        if a is not None:
            out = [o + a * x for o, x in zip(out, w)]
        if i < top:
            w = mat_vec(L, w, zero)
    return out
