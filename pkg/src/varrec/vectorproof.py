"""Dense state vectors whose entry sum is the prefix sum w_0 + ... + w_n.

The level-n vector has length 2^n and a block structure: block 0 is
position 1, block j (1 <= j <= n) is positions 2^(j-1)+1 .. 2^j, and block j
sums to w_j. Vectors are numpy object arrays so any scalar realization
works; positions are 1-based in docstrings and 0-based in code.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chainsum import DEFAULT_CAP, ceil_log2
from .core import CoefficientSource, ForcingSource, Problem, Realization
from .errors import DimensionError, DomainError, ResourceError


def ones(m: int, ring: Realization) -> np.ndarray:
    if m < 1:
        raise DomainError("vector length must be positive")
    return vector([ring.one() for _ in range(m)])


def zeros(m: int, ring: Realization) -> np.ndarray:
    if m < 1:
        raise DomainError("vector length must be positive")
    return vector([ring.zero() for _ in range(m)])


def vector(values) -> np.ndarray:
    out = np.empty(len(values), dtype=object)
    out[:] = list(values)
    return out


def kron(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Kronecker product of two vectors (block i is u[i] * v)."""
    return vector([ui * x for ui in u for x in v])


def replicate(times: int, v: np.ndarray) -> np.ndarray:
    """kron(ones(times), v) without the multiplications by one."""
    return np.tile(v, times)


def concat(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    return np.concatenate([u, v])


def elemwise_mul(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    if len(u) != len(v):
        raise DimensionError(f"length mismatch: {len(u)} vs {len(v)}")
    return u * v


def elemwise_add(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    if len(u) != len(v):
        raise DimensionError(f"length mismatch: {len(u)} vs {len(v)}")
    return u + v


def l1(v: np.ndarray):
    """Plain entry sum (signed, no absolute values), left to right."""
    total = v[0]
    for x in v[1:]:
        total = total + x
    return total


@dataclass(frozen=True, eq=False)
class StateVector:
    level: int
    entries: np.ndarray

    def __post_init__(self):
        if len(self.entries) != 1 << self.level:
            raise DimensionError(
                f"level {self.level} needs {1 << self.level} entries, got {len(self.entries)}"
            )

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        if not isinstance(other, StateVector):
            return NotImplemented
        return self.level == other.level and all(
            x == y for x, y in zip(self.entries, other.entries)
        )


def build_u(k: int, coeffs: CoefficientSource) -> np.ndarray:
    """2^(k-1) ones followed by a(k, ceil(log2 i)) for i = 1..2^(k-1)."""
    if k < 1:
        raise DomainError("k must be positive")
    half = 1 << (k - 1)
    tail = vector([coeffs.at(k, ceil_log2(i)) for i in range(1, half + 1)])
    return concat(ones(half, coeffs.ring), tail)


def build_c(i: int, forcing: ForcingSource) -> np.ndarray:
    """Length 2^i, c_i in the last position and zeros elsewhere."""
    if i < 1:
        raise DomainError("i must be positive")
    ring = forcing.ring
    return concat(zeros((1 << i) - 1, ring), vector([forcing.at(i)]))


def _first(p: Problem) -> np.ndarray:
    return vector([p.w0, p.forcing.at(1) + p.coefficients.at(1, 0) * p.w0])


def _check(n: int, cap: int) -> None:
    if n < 1:
        raise DomainError("level must be at least 1")
    if n > cap:
        raise ResourceError(f"level {n} exceeds the exponential cap {cap}")


def build_w(p: Problem, n: int, *, cap: int = DEFAULT_CAP) -> StateVector:
    """Level-n state vector via w_n = u_n * (1_2 x w_{n-1}) + c_n."""
    _check(n, cap)
    w = _first(p)
    for k in range(2, n + 1):
        w = elemwise_add(
            elemwise_mul(build_u(k, p.coefficients), replicate(2, w)),
            build_c(k, p.forcing),
        )
    return StateVector(n, w)


def build_w_expanded(p: Problem, n: int, *, cap: int = DEFAULT_CAP) -> StateVector:
    """Level-n state vector from the unrolled product form.

    (1_{2^(n-1)} x w_1) * prod_{k=2}^n U_k + sum_{i=2}^n (1_{2^(n-i)} x c_i) * prod_{k=i+1}^n U_k
    with U_k = 1_{2^(n-k)} x u_k. The suffix products are accumulated from
    k = n downwards so each is formed once.
    """
    _check(n, cap)
    ring = p.ring
    size = 1 << n
    suffix = ones(size, ring)  # prod_{k=i+1}^n U_k, starting at i = n
    total = None
    for i in range(n, 1, -1):
        term = elemwise_mul(replicate(1 << (n - i), build_c(i, p.forcing)), suffix)
        total = term if total is None else elemwise_add(total, term)
        suffix = elemwise_mul(replicate(1 << (n - i), build_u(i, p.coefficients)), suffix)
    head = elemwise_mul(replicate(1 << (n - 1), _first(p)), suffix)
    total = head if total is None else elemwise_add(head, total)
    return StateVector(n, total)


def block_bounds(j: int) -> tuple:
    """0-based half-open range of block j."""
    return (0, 1) if j == 0 else (1 << (j - 1), 1 << j)


def block_sum(v: StateVector, j: int):
    if not 0 <= j <= v.level:
        raise DomainError(f"block {j} outside 0..{v.level}")
    lo, hi = block_bounds(j)
    return l1(v.entries[lo:hi])
