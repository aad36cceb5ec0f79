"""JSON problem specifications.

Numbers may be JSON integers, JSON decimals, or strings such as ``"-3/7"``;
they are kept as literal text until a scalar realization is chosen.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Tuple

import jsonschema

from ..core import (
    W0,
    ExprCoefficients,
    ExprForcing,
    ExprSyntaxError,
    GenericCoefficients,
    GenericForcing,
    Poly,
    Problem,
    TableCoefficients,
    TableForcing,
    by_name,
    parse_expr,
)

SCALARS = ("rational", "float", "symbolic")

_NUMBER = {"anyOf": [{"type": "integer"}, {"type": "string"}]}

SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["w0", "coefficients", "forcing", "horizon", "scalar"],
    "properties": {
        "w0": _NUMBER,
        "horizon": {"type": "integer", "minimum": 0},
        "scalar": {"enum": list(SCALARS)},
        "coefficients": {
            "type": "object",
            "additionalProperties": False,
            "required": ["kind"],
            "properties": {
                "kind": {"enum": ["table", "expr", "symbolic"]},
                "table": {
                    "type": "array",
                    "items": {
                        "type": "array",
                        "prefixItems": [{"type": "integer"}, {"type": "integer"}, _NUMBER],
                        "minItems": 3,
                        "maxItems": 3,
                    },
                },
                "expr": {"type": "string"},
            },
        },
        "forcing": {
            "type": "object",
            "additionalProperties": False,
            "required": ["kind"],
            "properties": {
                "kind": {"enum": ["table", "expr", "symbolic", "zero"]},
                "table": {
                    "type": "array",
                    "items": {
                        "type": "array",
                        "prefixItems": [{"type": "integer"}, _NUMBER],
                        "minItems": 2,
                        "maxItems": 2,
                    },
                },
                "expr": {"type": "string"},
            },
        },
    },
}


class SpecError(ValueError):
    """Invalid problem specification; ``path`` names the offending field."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path or '<root>'}: {message}")
        self.path = path


@dataclass(frozen=True)
class SourceSpec:
    kind: str
    table: Optional[Tuple[tuple, ...]] = None
    expr: Optional[str] = None

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.table is not None:
            out["table"] = [list(row) for row in self.table]
        if self.expr is not None:
            out["expr"] = self.expr
        return out


@dataclass(frozen=True)
class ProblemSpec:
    w0: str
    coefficients: SourceSpec
    forcing: SourceSpec
    horizon: int
    scalar: str

    def to_json(self) -> dict:
        return {
            "w0": self.w0,
            "coefficients": self.coefficients.to_json(),
            "forcing": self.forcing.to_json(),
            "horizon": self.horizon,
            "scalar": self.scalar,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    def with_scalar(self, scalar: str) -> "ProblemSpec":
        spec = ProblemSpec(self.w0, self.coefficients, self.forcing, self.horizon, scalar)
        _validate(spec)
        return spec

    def with_horizon(self, horizon: int) -> "ProblemSpec":
        if horizon < 0:
            raise SpecError("horizon", "must be nonnegative")
        return ProblemSpec(self.w0, self.coefficients, self.forcing, horizon, self.scalar)

    def build(self) -> Problem:
        """Instantiate the :class:`Problem` in this spec's scalar realization."""
        ring = by_name(self.scalar)
        if self.w0 == "w0":
            w0 = Poly.symbol(W0)
        else:
            w0 = ring.from_literal(self.w0)

        co = self.coefficients
        if co.kind == "symbolic":
            coefficients = GenericCoefficients()
        elif co.kind == "expr":
            coefficients = ExprCoefficients.parse(co.expr, ring)
        else:
            coefficients = TableCoefficients(
                {(n, j): ring.from_literal(v) for n, j, v in co.table or ()}, ring
            )

        fo = self.forcing
        if fo.kind == "symbolic":
            forcing = GenericForcing()
        elif fo.kind == "expr":
            forcing = ExprForcing.parse(fo.expr, ring)
        else:
            forcing = TableForcing({n: ring.from_literal(v) for n, v in fo.table or ()}, ring)
        return Problem(w0, coefficients, forcing, self.horizon)


def _literal(value, path: str, scalar: str) -> str:
    text = str(value).strip()
    try:
        by_name("rational" if scalar == "symbolic" else scalar).from_literal(text)
    except ValueError:
        raise SpecError(path, f"not a number: {value!r}") from None
    return text


def _source(raw: dict, path: str, scalar: str, forcing: bool) -> SourceSpec:
    kind = raw["kind"]
    table = raw.get("table")
    expr = raw.get("expr")
    if kind == "table" and table is None:
        raise SpecError(f"{path}.table", "required when kind is 'table'")
    if kind == "expr" and expr is None:
        raise SpecError(f"{path}.expr", "required when kind is 'expr'")
    if kind != "table" and table is not None:
        raise SpecError(f"{path}.table", f"not allowed when kind is {kind!r}")
    if kind != "expr" and expr is not None:
        raise SpecError(f"{path}.expr", f"not allowed when kind is {kind!r}")

    rows = None
    if table is not None:
        seen = set()
        rows = []
        for i, row in enumerate(table):
            where = f"{path}.table[{i}]"
            *idx, value = row
            if forcing:
                if idx[0] < 1:
                    raise SpecError(where, "forcing index must be >= 1")
            elif idx[0] < 1 or not 0 <= idx[1] < idx[0]:
                raise SpecError(where, "coefficient index needs n >= 1 and 0 <= j < n")
            if tuple(idx) in seen:
                raise SpecError(where, f"duplicate entry for {tuple(idx)}")
            seen.add(tuple(idx))
            rows.append((*idx, _literal(value, f"{where}[{len(idx)}]", scalar)))
        rows = tuple(rows)
    if expr is not None:
        try:
            parse_expr(expr, ("n",) if forcing else ("n", "j"))
        except ExprSyntaxError as exc:
            raise SpecError(f"{path}.expr", str(exc)) from None
    return SourceSpec(kind, rows, expr)


def _validate(spec: ProblemSpec) -> None:
    symbolic = spec.scalar == "symbolic"
    if symbolic:
        if spec.coefficients.kind not in ("symbolic",) and not (
            spec.coefficients.kind == "table" and not spec.coefficients.table
        ):
            raise SpecError(
                "coefficients.kind",
                f"scalar 'symbolic' requires symbolic sources, got {spec.coefficients.kind!r}",
            )
        if spec.forcing.kind not in ("symbolic", "zero") and not (
            spec.forcing.kind == "table" and not spec.forcing.table
        ):
            raise SpecError(
                "forcing.kind",
                f"scalar 'symbolic' requires symbolic or zero forcing, got {spec.forcing.kind!r}",
            )
    else:
        if spec.coefficients.kind == "symbolic":
            raise SpecError("coefficients.kind", f"scalar {spec.scalar!r} forbids symbolic sources")
        if spec.forcing.kind == "symbolic":
            raise SpecError("forcing.kind", f"scalar {spec.scalar!r} forbids symbolic sources")
        if spec.w0 == "w0":
            raise SpecError("w0", f"symbolic marker 'w0' needs scalar 'symbolic', not {spec.scalar!r}")


def from_json(doc) -> ProblemSpec:
    errors = sorted(
        jsonschema.Draft202012Validator(SCHEMA).iter_errors(doc),
        key=lambda e: list(e.absolute_path),
    )
    if errors:
        err = errors[0]
        path = ".".join(
            f"[{p}]" if isinstance(p, int) else str(p) for p in err.absolute_path
        ).replace(".[", "[")
        raise SpecError(path, err.message)
    scalar = doc["scalar"]
    w0 = doc["w0"]
    w0 = "w0" if w0 == "w0" else _literal(w0, "w0", scalar)
    spec = ProblemSpec(
        w0,
        _source(doc["coefficients"], "coefficients", scalar, forcing=False),
        _source(doc["forcing"], "forcing", scalar, forcing=True),
        doc["horizon"],
        scalar,
    )
    _validate(spec)
    return spec


def parse_spec(text) -> ProblemSpec:
    """Parse and validate a UTF-8 JSON problem specification."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SpecError("", f"not UTF-8: {exc}") from None
    try:
        doc = json.loads(text, parse_float=str)
    except json.JSONDecodeError as exc:
        raise SpecError("", f"malformed JSON: {exc}") from None
    return from_json(doc)


__all__ = ["ProblemSpec", "SourceSpec", "SpecError", "from_json", "parse_spec"]
