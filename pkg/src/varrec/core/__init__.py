"""Scalars, sources and the problem model shared by every evaluator."""

from .expr import ExprSyntaxError, evaluate, parse_expr
from .poly import KIND_A, KIND_C, KIND_W0, W0, A, C, Monomial, Poly, Symbol, monomial
from .problem import Problem
from .scalars import (
    FLOAT,
    RATIONAL,
    SYMBOLIC,
    Counted,
    CountingRealization,
    OpCounter,
    Realization,
    by_name,
    realization_of,
    scalar_add,
    scalar_mul,
    scalar_neg,
)
from .sources import (
    CoefficientSource,
    CountedCoefficients,
    CountedForcing,
    ExprCoefficients,
    ExprForcing,
    ForcingSource,
    FunctionCoefficients,
    FunctionForcing,
    GenericCoefficients,
    GenericForcing,
    TableCoefficients,
    TableForcing,
    source_at,
    zero_forcing,
)
