"""Scalar realizations.

Every value flowing through an evaluator belongs to exactly one
realization: exact rationals (``gmpy2.mpq``), IEEE doubles (``float``) or
symbolic polynomials (:class:`Poly`). Values are native objects and are
combined with ordinary operators; the realization object supplies the
constants and guards the boundaries where foreign values enter.
"""

from __future__ import annotations

from fractions import Fraction

from gmpy2 import mpq

from ..errors import EvaluationError, RealizationMismatch
from .poly import Poly


class Realization:
    """A ring of scalars with a single concrete value type."""

    name = "abstract"
    value_type: type = object

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, value: int):
        raise NotImplementedError

    def from_literal(self, text: str):
        """Convert a numeric literal such as ``"3"``, ``"-2/7"`` or ``"0.25"``."""
        raise NotImplementedError

    def check(self, value):
        if type(value) is not self.value_type:
            raise RealizationMismatch(
                f"expected a {self.name} scalar, got {type(value).__name__}"
            )
        return value

    def divide(self, lhs, rhs):
        try:
            return lhs / rhs
        except ZeroDivisionError as exc:
            raise EvaluationError("division by zero") from exc

    def __repr__(self) -> str:
        return f"<{self.name} realization>"

    def __reduce__(self):
        return (by_name, (self.name,))


class RationalRealization(Realization):
    name = "rational"
    value_type = type(mpq(0))

    def zero(self):
        return mpq(0)

    def one(self):
        return mpq(1)

    def from_int(self, value):
        return mpq(value)

    def from_literal(self, text):
        try:
            return mpq(Fraction(str(text).strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {text!r}") from exc


class FloatRealization(Realization):
    name = "float"
    value_type = float

    def zero(self):
        return 0.0

    def one(self):
        return 1.0

    def from_int(self, value):
        return float(value)

    def from_literal(self, text):
        try:
            return float(Fraction(str(text).strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a numeric literal: {text!r}") from exc


class SymbolicRealization(Realization):
    name = "symbolic"
    value_type = Poly

    def zero(self):
        return Poly()

    def one(self):
        return Poly.constant(1)

    def from_int(self, value):
        return Poly.constant(value)

    def from_literal(self, text):
        return Poly.constant(RATIONAL.from_literal(text))

    def divide(self, lhs, rhs):
        try:
            return lhs / rhs
        except ZeroDivisionError as exc:
            raise EvaluationError("division by zero") from exc
        except ValueError as exc:
            raise EvaluationError(str(exc)) from exc


RATIONAL = RationalRealization()
FLOAT = FloatRealization()
SYMBOLIC = SymbolicRealization()

_BY_NAME = {r.name: r for r in (RATIONAL, FLOAT, SYMBOLIC)}


def by_name(name: str) -> Realization:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise ValueError(f"unknown scalar realization {name!r}") from None


def realization_of(value) -> Realization:
    if isinstance(value, Counted):
        return value.counter.realization
    for r in (RATIONAL, FLOAT, SYMBOLIC):
        if type(value) is r.value_type:
            return r
    raise RealizationMismatch(f"{type(value).__name__} is not a scalar")


def _same(lhs, rhs) -> Realization:
    left, right = realization_of(lhs), realization_of(rhs)
    if left is not right:
        raise RealizationMismatch(f"cannot combine {left.name} with {right.name}")
    return left


def scalar_add(lhs, rhs):
    _same(lhs, rhs)
    return lhs + rhs


def scalar_mul(lhs, rhs):
    _same(lhs, rhs)
    return lhs * rhs


def scalar_neg(value):
    realization_of(value)
    return -value


# -- operation counting -------------------------------------------------------


class OpCounter:
    """Tally of ring operations performed on :class:`Counted` values."""

    def __init__(self, realization: "CountingRealization"):
        self.realization = realization
        self.adds = 0
        self.muls = 0

    @property
    def total(self) -> int:
        return self.adds + self.muls

    def reset(self) -> None:
        self.adds = self.muls = 0


class Counted:
    """A scalar that records every add/sub/neg/mul it takes part in."""

    __slots__ = ("value", "counter")

    def __init__(self, value, counter: OpCounter):
        self.value = value
        self.counter = counter

    def _other(self, other):
        if not isinstance(other, Counted) or other.counter is not self.counter:
            raise RealizationMismatch("counted scalars must share one counter")
        return other.value

    def __add__(self, other):
        v = self._other(other)
        self.counter.adds += 1
        return Counted(self.value + v, self.counter)

    def __sub__(self, other):
        v = self._other(other)
        self.counter.adds += 1
        return Counted(self.value - v, self.counter)

    def __neg__(self):
        self.counter.adds += 1
        return Counted(-self.value, self.counter)

    def __mul__(self, other):
        v = self._other(other)
        self.counter.muls += 1
        return Counted(self.value * v, self.counter)

    def __truediv__(self, other):
        v = self._other(other)
        self.counter.muls += 1
        return Counted(self.value / v, self.counter)

    def __eq__(self, other):
        if isinstance(other, Counted):
            return self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return f"Counted({self.value!r})"


class CountingRealization(Realization):
    """Wraps a base realization so that arithmetic is tallied.

    Each instance owns one :class:`OpCounter`; values from two different
    counting realizations do not mix.
    """

    value_type = Counted

    def __init__(self, base: Realization):
        self.base = base
        self.name = f"counted-{base.name}"
        self.counter = OpCounter(self)

    def wrap(self, value):
        return Counted(self.base.check(value), self.counter)

    def zero(self):
        return self.wrap(self.base.zero())

    def one(self):
        return self.wrap(self.base.one())

    def from_int(self, value):
        return self.wrap(self.base.from_int(value))

    def from_literal(self, text):
        return self.wrap(self.base.from_literal(text))

    def check(self, value):
        if not isinstance(value, Counted) or value.counter is not self.counter:
            raise RealizationMismatch(f"expected a {self.name} scalar")
        return value

    def divide(self, lhs, rhs):
        try:
            return lhs / rhs
        except ZeroDivisionError as exc:
            raise EvaluationError("division by zero") from exc

    def __reduce__(self):
        raise TypeError("counting realizations are process-local")
