"""Parameter sweeps and sampled curves for tabulation, plotting, and export."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .demand import (
    LogitParams,
    demand,
    demand_d1,
    demand_d2,
    elasticity,
    revenue,
    revenue_derivatives,
    validate_params,
)
from .errors import DomainError
from .solver import solve

# Guard against range typos expanding into absurd grids.
MAX_RANGE_VALUES = 1_000_000
_END_SNAP = 1e-9


@dataclass(frozen=True)
class RangeSpec:
    """A set of parameter values: an explicit list or an inclusive range.

    Build with ``from_values`` or ``from_range``; ``expand`` yields the
    concrete values. Range expansion steps from start toward end and
    includes end when it lands on the grid (within 1e-9 relative snap).
    """

    values: tuple[float, ...] | None = None
    start: float | None = None
    end: float | None = None
    step: float | None = None

    @classmethod
    def from_values(cls, values) -> RangeSpec:
        vals = tuple(float(v) for v in values)
        if not vals:
            raise DomainError("value list must be non-empty")
        for v in vals:
            if not math.isfinite(v):
                raise DomainError(f"values must be finite, got {v}")
        return cls(values=vals)

    @classmethod
    def from_range(cls, start: float, end: float, step: float) -> RangeSpec:
        start, end, step = float(start), float(end), float(step)
        for name, v in (("start", start), ("end", end), ("step", step)):
            if not math.isfinite(v):
                raise DomainError(f"range {name} must be finite, got {v}")
        if step == 0.0:
            raise DomainError("range step must be nonzero")
        if end != start and (end - start) * step < 0.0:
            raise DomainError(
                f"range step {step:g} walks away from end (start {start:g}, end {end:g})"
            )
        if abs((end - start) / step) >= MAX_RANGE_VALUES:
            raise DomainError(f"range expands to more than {MAX_RANGE_VALUES} values")
        return cls(start=start, end=end, step=step)

    def expand(self) -> list[float]:
        """Concrete values, in the order given (list) or generated (range)."""
        if self.values is not None:
            return list(self.values)
        span = self.end - self.start
        count = int(math.floor(span / self.step + _END_SNAP)) + 1
        out = [self.start + i * self.step for i in range(count)]
        if abs(out[-1] - self.end) <= _END_SNAP * max(1.0, abs(self.end)):
            out[-1] = self.end
        return out


@dataclass(frozen=True)
class SweepRow:
    """One solved case of a parameter sweep."""

    case_index: int
    alpha: float
    theta: float
    mu: float
    p_star: float
    d_star: float
    r_star: float
    p_inf: float
    d_inf: float
    r_inf: float
    revenue_ratio: float
    price_ratio: float


@dataclass(frozen=True)
class CurveSample:
    """Demand, revenue, their derivatives, and elasticity at one price."""

    p: float
    demand: float
    d1: float
    d2: float
    revenue: float
    r1: float
    r2: float
    elasticity: float


def sweep(alphas: RangeSpec, thetas: RangeSpec, mu: float, *, strict: bool = True) -> list[SweepRow]:
    """Solve the cross product of parameter values.

    Rows are ordered by theta ascending, then alpha ascending, and
    case_index counts from 1 in that order. Every pair is validated
    before any solving; an invalid pair aborts the sweep naming it.
    """
    alpha_values = sorted(alphas.expand())
    theta_values = sorted(thetas.expand())
    pairs = [(t, a) for t in theta_values for a in alpha_values]
    validated = []
    for theta, alpha in pairs:
        try:
            validated.append(validate_params(mu, alpha, theta, strict=strict))
        except DomainError as exc:
            raise DomainError(f"sweep aborted at alpha={alpha:g}, theta={theta:g}: {exc}") from exc
    rows = []
    for index, params in enumerate(validated, start=1):
        sol = solve(params)
        rows.append(
            SweepRow(
                case_index=index,
                alpha=params.alpha,
                theta=params.theta,
                mu=params.mu,
                p_star=sol.p_star,
                d_star=sol.d_star,
                r_star=sol.r_star,
                p_inf=sol.p_inf,
                d_inf=sol.d_inf,
                r_inf=sol.r_inf,
                revenue_ratio=sol.revenue_ratio,
                price_ratio=sol.price_ratio,
            )
        )
    return rows


def sample_curves(params: LogitParams, p_min: float, p_max: float, n: int) -> list[CurveSample]:
    """n uniformly spaced samples of the demand system on [p_min, p_max].

    Endpoints are included exactly. Every row satisfies
    revenue = p * demand and r1 = demand + p * d1 by construction.

    Raises:
        DomainError: if p_min < 0, p_min >= p_max, bounds are not finite,
            or n < 2.
    """
    if not (math.isfinite(p_min) and math.isfinite(p_max)):
        raise DomainError("price bounds must be finite")
    if p_min < 0.0:
        raise DomainError(f"p_min must be nonnegative, got {p_min}")
    if not p_min < p_max:
        raise DomainError(f"need p_min < p_max, got [{p_min!r}, {p_max!r}]")
    if n < 2:
        raise DomainError(f"need at least 2 samples, got {n}")
    last = n - 1
    rows = []
    for i in range(n):
        p = (p_min * (last - i) + p_max * i) / last
        r1, r2 = revenue_derivatives(params, p)
        rows.append(
            CurveSample(
                p=p,
                demand=demand(params, p),
                d1=demand_d1(params, p),
                d2=demand_d2(params, p),
                revenue=revenue(params, p),
                r1=r1,
                r2=r2,
                elasticity=elasticity(params, p),
            )
        )
    return rows
