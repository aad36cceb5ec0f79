"""Sparse multivariate polynomials over the symbols a[n,j], c[l] and w0.

A monomial is a sorted tuple of :class:`Symbol` (a multiset); a polynomial
maps monomials to nonzero exact rational coefficients.
"""

from __future__ import annotations

from typing import Dict, Iterator, NamedTuple, Tuple

from gmpy2 import mpq

from ..errors import DomainError, RealizationMismatch

KIND_A = 0
KIND_C = 1
KIND_W0 = 2


class Symbol(NamedTuple):
    """One generic quantity; tuple order gives the canonical sort order."""

    kind: int
    first: int = 0
    second: int = 0

    def __str__(self) -> str:
        if self.kind == KIND_A:
            return f"a[{self.first},{self.second}]"
        if self.kind == KIND_C:
            return f"c[{self.first}]"
        return "w0"

    @property
    def indices(self) -> Tuple[int, ...]:
        if self.kind == KIND_A:
            return (self.first, self.second)
        if self.kind == KIND_C:
            return (self.first,)
        return ()


def A(n: int, j: int) -> Symbol:
    if not 0 <= j < n:
        raise DomainError(f"a[{n},{j}] requires 0 <= j < n")
    return Symbol(KIND_A, n, j)


def C(l: int) -> Symbol:
    if l < 1:
        raise DomainError(f"c[{l}] requires l >= 1")
    return Symbol(KIND_C, l)


W0 = Symbol(KIND_W0)

Monomial = Tuple[Symbol, ...]


def monomial(*symbols: Symbol) -> Monomial:
    return tuple(sorted(symbols))


class Poly:
    """Immutable sparse polynomial with rational coefficients.

    Zero coefficients are never stored, so the zero polynomial is the empty
    map and structural equality is polynomial equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Dict[Monomial, object] | None = None):
        clean: Dict[Monomial, mpq] = {}
        for mono, coef in (terms or {}).items():
            key = tuple(sorted(mono))
            clean[key] = clean.get(key, 0) + mpq(coef)
        self._terms = {m: c for m, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, mpq]) -> "Poly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, value) -> "Poly":
        return cls({(): value})

    @classmethod
    def symbol(cls, sym: Symbol) -> "Poly":
        return cls._raw({(sym,): mpq(1)})

    @property
    def terms(self) -> Dict[Monomial, mpq]:
        return dict(self._terms)

    def monomials(self) -> Iterator[Monomial]:
        return iter(self._terms)

    def coefficient(self, mono: Monomial) -> mpq:
        return self._terms.get(tuple(sorted(mono)), mpq(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not m for m in self._terms)

    def constant_value(self) -> mpq:
        return self._terms.get((), mpq(0))

    def __len__(self) -> int:
        return len(self._terms)

    def _check(self, other) -> "Poly":
        if not isinstance(other, Poly):
            raise RealizationMismatch(
                f"cannot combine symbolic polynomial with {type(other).__name__}"
            )
        return other

    def __add__(self, other: "Poly") -> "Poly":
        other = self._check(other)
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for mono, coef in small.items():
            total = out.get(mono, 0) + coef
            if total:
                out[mono] = total
            else:
                out.pop(mono, None)
        return Poly._raw(out)

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-self._check(other))

    def __mul__(self, other: "Poly") -> "Poly":
        other = self._check(other)
        out: Dict[Monomial, mpq] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = tuple(sorted(m1 + m2)) if m1 and m2 else (m1 or m2)
                total = out.get(mono, 0) + c1 * c2
                if total:
                    out[mono] = total
                else:
                    out.pop(mono, None)
        return Poly._raw(out)

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative exponent")
        result = Poly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __truediv__(self, other: "Poly") -> "Poly":
        other = self._check(other)
        if not other.is_constant():
            raise ValueError("division by a non-constant polynomial")
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        inv = 1 / other.constant_value()
        return Poly._raw({m: c * inv for m, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        inner = ", ".join(
            f"{'*'.join(map(str, m)) or '1'}: {c}" for m, c in sorted(self._terms.items())
        )
        return f"Poly({{{inner}}})"

    def __reduce__(self):
        return (Poly, (self._terms,))
