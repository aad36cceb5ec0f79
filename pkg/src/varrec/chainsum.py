"""The chain-sum operator Phi and the closed forms built from it.

Phi_n(f) is 1 plus the sum, over every chain 0 = k_0 < k_1 < ... < k_m <= n,
of the edge product f(k_1, k_0) f(k_2, k_1) ... f(k_m, k_{m-1}). It has three
implementations here:

* :func:`phi_binary` walks j = 1..2^n and builds each chain from the binary
  digits of j - 1 via the periodic indicator :func:`bracket`;
* :func:`phi_chain` enumerates subsets of {1..n} as bitmasks (bit k is index
  k + 1) and multiplies the edges of each chain;
* :func:`phi_dp` sums the homogeneous solutions v_0..v_n, which is O(n^2).

The first two are exponential and capped; ``phi_dp`` is the production path.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, List, Sequence, Tuple

from .core import CoefficientSource, Problem
from .errors import DomainError, ResourceError
from .recurrence import SequenceResult, eval_homogeneous_shifted

DEFAULT_CAP = 20

# Masks are reduced in fixed-size chunks, chunk partials combined in index
# order, so the result does not depend on the number of workers.
CHUNK_BITS = 12

Chain = Tuple[int, ...]


def bracket(p: int, q: int, j: int) -> int:
    """Periodic indicator: p zeros then q ones, repeating, indexed from j = 1."""
    if j < 1:
        raise DomainError("bracket index starts at 1")
    return 0 if (j - 1) % (p + q) < p else 1


def ceil_log2(x: int) -> int:
    if x < 1:
        raise DomainError("ceil_log2 needs a positive integer")
    return (x - 1).bit_length()


def chain_of(mask: int) -> Chain:
    """Indices of the set bits of ``mask``, 1-based and increasing."""
    out = []
    k = 1
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return tuple(out)


def chains(n: int) -> Iterator[Chain]:
    """All 2^n chains inside {1..n}, the empty chain first."""
    for mask in range(1 << n):
        yield chain_of(mask)


def chain_weight(chain: Sequence[int], source: CoefficientSource):
    """Product of f(k_i, k_{i-1}) along ``chain`` with k_0 = 0."""
    weight = source.ring.one()
    prev = 0
    for k in chain:
        weight = weight * source.at(k, prev)
        prev = k
    return weight


def _check_cap(n: int, cap: int) -> None:
    if n < 0:
        raise DomainError("operator order must be nonnegative")
    if n > cap:
        raise ResourceError(f"order {n} exceeds the exponential cap {cap}")


def _coefficient_table(n: int, source: CoefficientSource) -> List[List]:
    # table[k][i] = f(k, i) for 1 <= k <= n, 0 <= i < k
    return [[]] + [[source.at(k, i) for i in range(k)] for k in range(1, n + 1)]


def _reduce_chunks(worker, args, count: int, zero, workers: int):
    step = 1 << CHUNK_BITS
    bounds = [(lo, min(lo + step, count)) for lo in range(0, count, step)]
    if workers > 1 and len(bounds) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(worker, *zip(*[args + b for b in bounds])))
    else:
        partials = [worker(*args, lo, hi) for lo, hi in bounds]
    total = zero
    for part in partials:
        total = total + part
    return total


def _binary_chunk(n, fm1, one, zero, lo, hi):
    total = zero
    for j in range(lo + 1, hi + 1):
        term = one
        for k in range(n):
            width = 1 << k
            if bracket(width, width, j):
                idx = ceil_log2(1 + (j - 1) % width)
                term = term * (one + fm1[k][idx])
        total = total + term
    return total


def phi_binary(n: int, source: CoefficientSource, *, cap: int = DEFAULT_CAP, workers: int = 1):
    """Phi_n(f) as sum over j <= 2^n of prod_k (1 + [2^k,2^k]_j (f(k+1, idx) - 1)).

    ``idx`` is ceil(log2(1 + (j-1) mod 2^k)). A factor whose bracket is 0 is
    exactly 1 and is skipped. Cost is O(n 2^n).
    """
    _check_cap(n, cap)
    ring = source.ring
    one = ring.one()
    table = _coefficient_table(n, source)
    fm1 = [[f - one for f in table[k + 1]] for k in range(n)]
    return _reduce_chunks(_binary_chunk, (n, fm1, one, ring.zero()), 1 << n, ring.zero(), workers)


def _chain_chunk(table, one, zero, lo, hi):
    total = zero
    for mask in range(lo, hi):
        weight = one
        prev = 0
        m = mask
        while m:
            low = m & -m
            k = low.bit_length()
            weight = table[k][prev] if prev == 0 else weight * table[k][prev]
            prev = k
            m ^= low
        total = total + weight
    return total


def phi_chain(n: int, source: CoefficientSource, *, cap: int = DEFAULT_CAP, workers: int = 1):
    """Phi_n(f) as 1 plus the sum of edge products over nonempty chains.

    One factor per chain edge, starting with f(k_1, 0).
    """
    _check_cap(n, cap)
    ring = source.ring
    table = _coefficient_table(n, source)
    return _reduce_chunks(_chain_chunk, (table, ring.one(), ring.zero()), 1 << n, ring.zero(), workers)


def chain_sums_by_end(n: int, source: CoefficientSource, *, cap: int = DEFAULT_CAP) -> List:
    """psi_0..psi_n, where psi_m sums the chains whose last index is exactly m.

    Uses the mask recursion weight(S) = weight(S minus top) * f(top, next
    below top), one multiplication per mask and O(2^n) memory.
    """
    _check_cap(n, cap)
    ring = source.ring
    table = _coefficient_table(n, source)
    psi = [ring.one()] + [ring.zero() for _ in range(n)]
    weights = [ring.one()]
    for mask in range(1, 1 << n):
        top = mask.bit_length()
        rest = mask ^ (1 << (top - 1))
        w = weights[rest] * table[top][rest.bit_length()]
        weights.append(w)
        psi[top] = psi[top] + w
    return psi


def phi_sequence(source: CoefficientSource, n: int) -> List:
    """Phi_0..Phi_n of ``source`` as running sums of the homogeneous solutions."""
    v = eval_homogeneous_shifted(source, 0, n)
    out = [v[0]]
    for value in v[1:]:
        out.append(out[-1] + value)
    return out


def phi_dp(n: int, source: CoefficientSource):
    """Phi_n(f) = v_0 + ... + v_n, O(n^2) ring operations."""
    if n < 0:
        raise DomainError("operator order must be nonnegative")
    return phi_sequence(source, n)[-1]


def _psi(phis: List, m: int):
    return phis[m] - phis[m - 1] if m else phis[0]


def _check_index(p: Problem, n: int) -> None:
    if not 1 <= n <= p.horizon:
        raise DomainError(f"closed form defined for 1 <= n <= {p.horizon}, got {n}")


def prefix_sum_closed_form(p: Problem, n: int):
    """w_0 + ... + w_n = c_n + w0 Phi_n(a) + sum_{l=1}^{n-1} c_l Phi_{n-l}(a shifted by l)."""
    _check_index(p, n)
    a, c = p.coefficients, p.forcing
    total = p.w0 * phi_dp(n, a)
    for shift in range(1, n + 1):
        total = total + c.at(shift) * phi_dp(n - shift, a.shifted(shift))
    return total


def term_closed_form(p: Problem, n: int):
    """w_n alone, using psi_m = Phi_m - Phi_{m-1} in place of Phi."""
    _check_index(p, n)
    a, c = p.coefficients, p.forcing
    total = p.w0 * _psi(phi_sequence(a, n), n)
    for shift in range(1, n + 1):
        m = n - shift
        total = total + c.at(shift) * _psi(phi_sequence(a.shifted(shift), m), m)
    return total


def eval_closed(p: Problem) -> SequenceResult:
    """All terms and prefix sums from the closed forms.

    Equivalent to calling :func:`term_closed_form` and
    :func:`prefix_sum_closed_form` for every n, but each shifted Phi
    sequence is computed once, for O(N^3) work overall.
    """
    a, c = p.coefficients, p.forcing
    N = p.horizon
    phis = [phi_sequence(a.shifted(l) if l else a, N - l) for l in range(N)]
    forcing = [None] + [c.at(l) for l in range(1, N + 1)]
    one = p.ring.one()
    terms, prefix = [p.w0], [p.w0]
    for n in range(1, N + 1):
        total = p.w0 * phis[0][n]
        term = p.w0 * _psi(phis[0], n)
        for l in range(1, n):
            total = total + forcing[l] * phis[l][n - l]
            term = term + forcing[l] * _psi(phis[l], n - l)
        terms.append(term + forcing[n] * one)
        prefix.append(total + forcing[n] * one)
    return SequenceResult(tuple(terms), tuple(prefix))
