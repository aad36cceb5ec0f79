"""Cross-checks every evaluator against the direct recursion.

Each identity is checked exactly on the supplied problem (if any) and on
seeded random rational problems. The first counterexample per identity is
kept for the report.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import List, Optional

from gmpy2 import mpq

from .. import chainsum, recurrence, vectorproof
from ..core import RATIONAL, Problem, TableCoefficients, TableForcing
from ..errors import ResourceError

IDENTITIES = (
    "proposition-prefix",
    "closed-term",
    "closed-differencing",
    "vector-l1",
    "vector-blocks",
    "vector-expanded",
    "phi-triple-equivalence",
    "remark-identity",
)

# Exponential checks never go beyond this order, whatever --max-n says.
EXP_LIMIT = 14


@dataclass
class IdentityResult:
    name: str
    checks: int = 0
    failure: Optional[str] = None
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failure is None

    def record(self, ok: bool, describe) -> None:
        self.checks += 1
        if not ok and self.failure is None:
            self.failure = describe()


@dataclass
class Report:
    results: List[IdentityResult]
    seed: int
    trials: int
    max_n: int

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def lines(self) -> List[str]:
        out = [f"verify: seed={self.seed} trials={self.trials} max-n={self.max_n}"]
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status} {r.name} ({r.checks} checks)"
            if r.failure:
                line += f": first counterexample: {r.failure}"
            out.append(line)
            out.extend(f"  note: {note}" for note in r.notes)
        held = sum(r.passed for r in self.results)
        out.append(f"{held}/{len(self.results)} identities hold")
        return out


def random_rational(rng: random.Random) -> mpq:
    return mpq(rng.randint(-9, 9), rng.randint(1, 9))


def random_problem(rng: random.Random, horizon: int) -> Problem:
    """Rationals p/q with p in [-9, 9] and q in [1, 9] for every entry."""
    w0 = random_rational(rng)
    coeffs = {(n, j): random_rational(rng) for n in range(1, horizon + 1) for j in range(n)}
    forcing = {n: random_rational(rng) for n in range(1, horizon + 1)}
    return Problem(w0, TableCoefficients(coeffs, RATIONAL), TableForcing(forcing, RATIONAL), horizon)


def _check_problem(p: Problem, label: str, max_n: int, results: dict) -> None:
    direct = recurrence.eval_direct(p)
    H = p.horizon

    r = results["proposition-prefix"]
    for n in range(1, H + 1):
        got = chainsum.prefix_sum_closed_form(p, n)
        r.record(got == direct.prefix[n],
                 lambda: f"{label} n={n}: closed={got} direct={direct.prefix[n]}")

    r = results["closed-term"]
    for n in range(1, H + 1):
        got = chainsum.term_closed_form(p, n)
        r.record(got == direct.terms[n],
                 lambda: f"{label} n={n}: closed={got} direct={direct.terms[n]}")

    r = results["closed-differencing"]
    for n in range(1, H + 1):
        lhs = chainsum.term_closed_form(p, n)
        prev = chainsum.prefix_sum_closed_form(p, n - 1) if n > 1 else p.w0
        rhs = chainsum.prefix_sum_closed_form(p, n) - prev
        r.record(lhs == rhs, lambda: f"{label} n={n}: term={lhs} prefix-difference={rhs}")

    top = min(H, max_n, EXP_LIMIT)
    for n in range(1, top + 1):
        w = vectorproof.build_w(p, n)
        total = vectorproof.l1(w.entries)
        results["vector-l1"].record(
            total == direct.prefix[n],
            lambda: f"{label} n={n}: l1={total} prefix={direct.prefix[n]}")
        r = results["vector-blocks"]
        for j in range(n + 1):
            b = vectorproof.block_sum(w, j)
            r.record(b == direct.terms[j],
                     lambda: f"{label} n={n} block {j}: {b} vs w_{j}={direct.terms[j]}")
        results["vector-expanded"].record(
            w == vectorproof.build_w_expanded(p, n),
            lambda: f"{label} n={n}: recursive and expanded vectors differ")

    r = results["phi-triple-equivalence"]
    for shift in (0, 1):
        src = p.coefficients.shifted(shift)
        for n in range(0, min(H - shift, max_n, EXP_LIMIT) + 1):
            b = chainsum.phi_binary(n, src)
            c = chainsum.phi_chain(n, src)
            d = chainsum.phi_dp(n, src)
            r.record(b == c == d,
                     lambda: f"{label} shift={shift} n={n}: binary={b} chain={c} dp={d}")

    r = results["remark-identity"]
    top = min(H, max_n, EXP_LIMIT)
    for shift in range(0, top + 1):
        m = top - shift
        psi = chainsum.chain_sums_by_end(m, p.coefficients.shifted(shift))
        v = recurrence.eval_homogeneous_shifted(p.coefficients, shift, m)
        phi = chainsum.phi_chain(m, p.coefficients.shifted(shift)) if m <= 10 else None
        r.record(psi == v, lambda: f"{label} shift={shift}: chain psi differs from shifted v")
        if phi is not None:
            total = recurrence.prefix_sums(v)[-1]
            r.record(phi == total,
                     lambda: f"{label} shift={shift} m={m}: Phi={phi} sum v={total}")


def run_suite(problem: Optional[Problem] = None, *, trials: int = 20, max_n: int = 10,
              seed: int = 0) -> Report:
    results = {name: IdentityResult(name) for name in IDENTITIES}
    if problem is not None:
        try:
            _check_problem(problem, "spec", max_n, results)
        except ResourceError as exc:
            for r in results.values():
                r.notes.append(f"spec problem: {exc}")
    rng = random.Random(seed)
    for t in range(trials):
        _check_problem(random_problem(rng, max_n), f"trial {t}", max_n, results)
    return Report([results[name] for name in IDENTITIES], seed, trials, max_n)
