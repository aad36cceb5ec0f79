"""Direct evaluation of the variable-coefficient recurrence.

This is the ground-truth path every closed form is checked against. It is
O(N^2) in ring operations. Over generic symbols the n-th homogeneous
solution has 2^(n-1) monomials, so symbolic horizons beyond ~20 are
impractical.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .core import CoefficientSource, Problem
from .errors import DomainError


@dataclass(frozen=True)
class SequenceResult:
    terms: Tuple
    prefix: Tuple

    def __len__(self) -> int:
        return len(self.terms)


def prefix_sums(terms) -> Tuple:
    out = []
    running = None
    for t in terms:
        running = t if running is None else running + t
        out.append(running)
    return tuple(out)


def eval_direct(problem: Problem) -> SequenceResult:
    a, c = problem.coefficients, problem.forcing
    terms = [problem.w0]
    for n in range(1, problem.horizon + 1):
        acc = c.at(n)
        for j in range(n):
            acc = acc + a.at(n, j) * terms[j]
        terms.append(acc)
    return SequenceResult(tuple(terms), prefix_sums(terms))


def eval_homogeneous_shifted(coeffs: CoefficientSource, shift: int, length: int) -> List:
    """Return v_0..v_length of v_0 = 1, v_n = sum_{j<n} a(n+shift, j+shift) v_j."""
    if shift < 0 or length < 0:
        raise DomainError("shift and length must be nonnegative")
    src = coeffs.shifted(shift) if shift else coeffs
    v = [src.ring.one()]
    for n in range(1, length + 1):
        acc = src.at(n, 0) * v[0]
        for j in range(1, n):
            acc = acc + src.at(n, j) * v[j]
        v.append(acc)
    return v
