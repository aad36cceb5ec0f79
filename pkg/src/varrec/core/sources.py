"""Coefficient sources a(n, j) and forcing sources c(n).

A coefficient source carries an index shift: with shift ``l`` a query at
``(n, j)`` reads the unshifted backing at ``(n + l, j + l)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Mapping, Tuple

from ..errors import DomainError, EvaluationError
from .expr import Expr, evaluate, parse_expr
from .poly import A, C, Poly
from .scalars import SYMBOLIC, CountingRealization, Realization


@dataclass(frozen=True)
class CoefficientSource:
    """Base class; subclasses implement :meth:`_value` on unshifted indices."""

    def at(self, n: int, j: int):
        if n < 1 or not 0 <= j < n:
            raise DomainError(f"coefficient queried at ({n}, {j}); need n >= 1, 0 <= j < n")
        s = self.shift
        return self.ring.check(self._value(n + s, j + s))

    def shifted(self, by: int) -> "CoefficientSource":
        if by < 0:
            raise DomainError("shift must be nonnegative")
        return replace(self, shift=self.shift + by)

    def _value(self, n: int, j: int):
        raise NotImplementedError


@dataclass(frozen=True)
class TableCoefficients(CoefficientSource):
    """Sparse table; absent entries read as zero."""

    entries: Mapping[Tuple[int, int], object]
    ring: Realization
    shift: int = 0

    def _value(self, n, j):
        value = self.entries.get((n, j))
        return self.ring.zero() if value is None else value

    def __hash__(self):
        return hash((tuple(sorted(self.entries.items())), self.ring.name, self.shift))


@dataclass(frozen=True)
class ExprCoefficients(CoefficientSource):
    expr: Expr
    ring: Realization
    shift: int = 0

    @classmethod
    def parse(cls, text: str, ring: Realization) -> "ExprCoefficients":
        return cls(parse_expr(text, ("n", "j")), ring)

    def _value(self, n, j):
        try:
            return evaluate(self.expr, {"n": n, "j": j}, self.ring)
        except EvaluationError as exc:
            raise EvaluationError(f"coefficient at ({n}, {j}): {exc}") from exc


@dataclass(frozen=True)
class FunctionCoefficients(CoefficientSource):
    """Backed by a Python callable ``func(n, j)`` returning ring values."""

    func: Callable[[int, int], object]
    ring: Realization
    shift: int = 0

    def _value(self, n, j):
        return self.func(n, j)


@dataclass(frozen=True)
class GenericCoefficients(CoefficientSource):
    """Yields the symbol a[n, j] itself."""

    shift: int = 0
    ring: Realization = field(default=SYMBOLIC, init=False)

    def _value(self, n, j):
        return Poly.symbol(A(n, j))


@dataclass(frozen=True)
class CountedCoefficients(CoefficientSource):
    """Re-expresses another source's values in a counting realization."""

    inner: CoefficientSource
    ring: CountingRealization
    shift: int = 0

    def _value(self, n, j):
        return self.ring.wrap(self.inner.at(n, j))


def source_at(src: CoefficientSource, n: int, j: int):
    return src.at(n, j)


@dataclass(frozen=True)
class ForcingSource:
    def at(self, n: int):
        if n < 1:
            raise DomainError(f"forcing queried at n = {n}; need n >= 1")
        return self.ring.check(self._value(n))

    def _value(self, n: int):
        raise NotImplementedError


@dataclass(frozen=True)
class TableForcing(ForcingSource):
    entries: Mapping[int, object]
    ring: Realization

    def _value(self, n):
        value = self.entries.get(n)
        return self.ring.zero() if value is None else value

    def __hash__(self):
        return hash((tuple(sorted(self.entries.items())), self.ring.name))


def zero_forcing(ring: Realization) -> TableForcing:
    return TableForcing({}, ring)


@dataclass(frozen=True)
class ExprForcing(ForcingSource):
    expr: Expr
    ring: Realization

    @classmethod
    def parse(cls, text: str, ring: Realization) -> "ExprForcing":
        return cls(parse_expr(text, ("n",)), ring)

    def _value(self, n):
        try:
            return evaluate(self.expr, {"n": n}, self.ring)
        except EvaluationError as exc:
            raise EvaluationError(f"forcing at {n}: {exc}") from exc


@dataclass(frozen=True)
class FunctionForcing(ForcingSource):
    func: Callable[[int], object]
    ring: Realization

    def _value(self, n):
        return self.func(n)


@dataclass(frozen=True)
class GenericForcing(ForcingSource):
    """Yields the symbol c[n] itself."""

    ring: Realization = field(default=SYMBOLIC, init=False)

    def _value(self, n):
        return Poly.symbol(C(n))


@dataclass(frozen=True)
class CountedForcing(ForcingSource):
    inner: ForcingSource
    ring: CountingRealization

    def _value(self, n):
        return self.ring.wrap(self.inner.at(n))
