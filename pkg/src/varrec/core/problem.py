from __future__ import annotations

from dataclasses import dataclass

from ..errors import DomainError, RealizationMismatch
from .scalars import CountingRealization, Realization
from .sources import CoefficientSource, CountedCoefficients, CountedForcing, ForcingSource


@dataclass(frozen=True)
class Problem:
    """One instance of w_n = c_n + sum_{j<n} a(n, j) w_j with horizon N."""

    w0: object
    coefficients: CoefficientSource
    forcing: ForcingSource
    horizon: int

    def __post_init__(self):
        if self.horizon < 0:
            raise DomainError("horizon must be nonnegative")
        if self.coefficients.shift != 0:
            raise DomainError("a problem's coefficient source must be unshifted")
        ring = self.coefficients.ring
        if self.forcing.ring is not ring:
            raise RealizationMismatch(
                f"coefficients are {ring.name} but forcing is {self.forcing.ring.name}"
            )
        ring.check(self.w0)

    @property
    def ring(self) -> Realization:
        return self.coefficients.ring

    def counted(self) -> "Problem":
        """Same problem with every value tallied by a fresh op counter."""
        ring = CountingRealization(self.ring)
        return Problem(
            ring.wrap(self.w0),
            CountedCoefficients(self.coefficients, ring),
            CountedForcing(self.forcing, ring),
            self.horizon,
        )
