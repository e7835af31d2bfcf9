"""Canonical text form for coefficient values.

Every printable value is first flattened to a multinomial: a map from
exponent triples ``(a, m2, m)`` to nonzero rationals.  Terms are written in
ascending order of ``(m, m2, a)`` so that Laurent polynomials in A read
with exponents ascending.
"""

from __future__ import annotations

from fractions import Fraction

_VARS = ("A", "m2", "m")


def _format_power(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"


def _format_monomial(exps: tuple[int, int, int], c: Fraction) -> str:
    """Format |c| * vars; the sign is handled by the caller."""
    c = abs(c)
    factors = [_format_power(n, e) for n, e in zip(_VARS, exps) if e]
    if not factors:
        return str(c)
    if c != 1:
        factors.insert(0, str(c))
    return "*".join(factors)


def format_multinomial(terms: dict[tuple[int, int, int], Fraction]) -> str:
    if not terms:
        return "0"
    keys = sorted(terms, key=lambda k: (k[2], k[1], k[0]))
    parts = []
    for i, k in enumerate(keys):
        c = Fraction(terms[k])
        body = _format_monomial(k, c)
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


def format_quotient(num: dict, den: dict) -> str:
    if den == {(0, 0, 0): Fraction(1)}:
        return format_multinomial(num)
    return f"({format_multinomial(num)})/({format_multinomial(den)})"
