"""Generic symbolic expansions and their canonical text form."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .core import W0, C, GenericCoefficients, Poly, Symbol
from .errors import DomainError, ResourceError
from .recurrence import eval_homogeneous_shifted

SYMBOLIC_CAP = 16


def _check(n: int, cap: int) -> None:
    if n < 1:
        raise DomainError("n must be at least 1")
    if n > cap:
        raise ResourceError(f"n = {n} exceeds the symbolic cap {cap}")


def expand_v(n: int, *, cap: int = SYMBOLIC_CAP) -> Poly:
    """The homogeneous solution v_n over generic a[n,j]; 2^(n-1) monomials."""
    _check(n, cap)
    return eval_homogeneous_shifted(GenericCoefficients(), 0, n)[n]


@dataclass(frozen=True)
class GroupedExpansion:
    """w_n written as carrier * polynomial, carriers c_n, ..., c_1, w0."""

    groups: Tuple[Tuple[Symbol, Poly], ...]

    def group(self, carrier: Symbol) -> Poly:
        for sym, poly in self.groups:
            if sym == carrier:
                return poly
        raise KeyError(carrier)

    def reassemble(self) -> Poly:
        total = Poly()
        for sym, poly in self.groups:
            total = total + Poly.symbol(sym) * poly
        return total


def expand_w_grouped(n: int, *, cap: int = SYMBOLIC_CAP) -> GroupedExpansion:
    _check(n, cap)
    generic = GenericCoefficients()
    groups: List[Tuple[Symbol, Poly]] = []
    for shift in range(n, 0, -1):
        v = eval_homogeneous_shifted(generic, shift, n - shift)
        groups.append((C(shift), v[-1]))
    groups.append((W0, expand_v(n, cap=cap)))
    return GroupedExpansion(tuple(groups))


def _monomial_key(mono):
    return (len(mono), tuple((s.kind,) + s.indices for s in mono))


def _coefficient_text(coef) -> str:
    if coef.denominator == 1:
        return str(coef.numerator)
    return f"{coef.numerator}/{coef.denominator}"


def render(poly: Poly) -> str:
    """Deterministic text: degree ascending, then lexicographic by symbol indices.

    >>> render(expand_v(2))
    'a[2,0] + a[1,0]*a[2,1]'
    """
    if poly.is_zero():
        return "0"
    parts = []
    terms = poly.terms
    for mono in sorted(terms, key=_monomial_key):
        coef = terms[mono]
        sign = "-" if coef < 0 else "+"
        mag = -coef if coef < 0 else coef
        factors = [str(s) for s in mono]
        if mag != 1 or not factors:
            factors.insert(0, _coefficient_text(mag))
        parts.append((sign, "*".join(factors)))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def render_grouped(expansion: GroupedExpansion) -> List[str]:
    """One line per group: ``<carrier>: <polynomial>``."""
    return [f"{sym}: {render(poly)}" for sym, poly in expansion.groups]
