"""Estimate logit demand parameters from observed price/quantity pairs.

With the market size mu known, the curve linearizes: log(mu/q - 1) is
exactly alpha + theta * p, so ordinary least squares on the transformed
quantities recovers (alpha, theta), exactly on noise-free data. When mu
is unknown it is found by golden-section search on the sum of squared
errors of the fixed-mu fit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .demand import STRICT_ALPHA_MAX, LogitParams, demand
from .errors import (
    DegenerateFitError,
    DomainError,
    InsufficientDataError,
    SearchFailureError,
)
from .oracle import INV_PHI

# Quantities closer to mu than this (relative) make the transform blow
# up; they are rejected, never clamped.
MU_MARGIN = 1e-9
# Lower edge of the market-size search bracket, as a multiple of the
# largest observed quantity.
MU_LO_FACTOR = 1.0001
# Geometric pre-scan resolution used to localize the feasible region
# before golden-section refinement.
_BRACKET_SCAN = 48


@dataclass(frozen=True)
class Observation:
    """One observed point: nonnegative price, positive quantity sold."""

    price: float
    quantity: float

    def __post_init__(self) -> None:
        for name in ("price", "quantity"):
            raw = getattr(self, name)
            try:
                value = float(raw)
            except (TypeError, ValueError):
                raise DomainError(f"{name} must be a real number, got {raw!r}") from None
            if not math.isfinite(value):
                raise DomainError(f"{name} must be finite, got {value}")
            object.__setattr__(self, name, value)
        if self.price < 0.0:
            raise DomainError(f"price must be nonnegative, got {self.price}")
        if self.quantity <= 0.0:
            raise DomainError(f"quantity must be positive, got {self.quantity}")


@dataclass(frozen=True)
class CalibrationFit:
    """Fitted parameters with the squared error achieved on the data.

    ``params`` always satisfies the relaxed validity envelope
    (mu > 0, theta > 0, alpha < 0); whether it also clears the strict
    alpha < -2 bound is reported by ``strict``, not enforced.
    """

    params: LogitParams
    sse: float
    n_obs: int

    @property
    def strict(self) -> bool:
        return self.params.alpha < STRICT_ALPHA_MAX


def fit_fixed_mu(observations: Iterable[Observation], mu: float) -> CalibrationFit:
    """Least-squares fit of (alpha, theta) with the market size held fixed.

    Args:
        observations: At least two, with at least two distinct prices.
        mu: Known market size; every quantity must stay below
            mu * (1 - 1e-9).

    Raises:
        InsufficientDataError: fewer than two observations, or all at one price.
        DomainError: invalid mu, or a quantity at/above the mu margin.
        DegenerateFitError: transformed regression slope not positive, or
            intercept not negative (no valid parameters exist for the data).
    """
    obs = list(observations)
    if len(obs) < 2:
        raise InsufficientDataError(f"need at least 2 observations, got {len(obs)}")
    mu = float(mu)
    if not math.isfinite(mu) or mu <= 0.0:
        raise DomainError(f"mu must be positive and finite, got {mu}")
    prices = [o.price for o in obs]
    if max(prices) == min(prices):
        raise InsufficientDataError("need at least two distinct prices")
    for o in obs:
        if o.quantity >= mu * (1.0 - MU_MARGIN):
            raise DomainError(
                f"quantity {o.quantity:g} is within {MU_MARGIN:g} (relative) of mu={mu:g}; "
                "the transform log(mu/q - 1) is degenerate there"
            )

    z = [math.log(mu / o.quantity - 1.0) for o in obs]
    theta, alpha = np.polyfit(np.asarray(prices), np.asarray(z), 1)
    theta, alpha = float(theta), float(alpha)
    if theta <= 0.0:
        raise DegenerateFitError(
            f"fitted theta={theta:g} is not positive; demand does not slope down in price"
        )
    if alpha >= 0.0:
        raise DegenerateFitError(f"fitted alpha={alpha:g} is not negative")
    params = LogitParams(mu, alpha, theta)
    sse = math.fsum((o.quantity - demand(params, o.price)) ** 2 for o in obs)
    return CalibrationFit(params=params, sse=sse, n_obs=len(obs))


def fit(
    observations: Iterable[Observation],
    *,
    mu_hi_factor: float = 100.0,
    max_iter: int = 60,
) -> CalibrationFit:
    """Fit all three parameters, searching the market size by golden section.

    Candidate market sizes are scored by the sum of squared errors of
    their fixed-mu fit over the bracket
    (1.0001 * max quantity, mu_hi_factor * max quantity]. A coarse
    geometric scan localizes the feasible region first (far too large a
    mu drives the fitted intercept nonnegative, which scores as
    infinity, and golden section cannot recover from a bracket whose
    probes both land there); golden-section then refines around the
    best scan point. The best candidate evaluated anywhere is returned,
    so the achieved sse is non-increasing in max_iter. If the true mu
    lies outside the bracket the fit lands at the nearest boundary with
    an honestly nonzero sse.

    Raises:
        InsufficientDataError: fewer than two observations.
        DomainError: mu_hi_factor not above the bracket's lower factor.
        SearchFailureError: every candidate market size was infeasible.
    """
    obs = list(observations)
    if len(obs) < 2:
        raise InsufficientDataError(f"need at least 2 observations, got {len(obs)}")
    mu_hi_factor = float(mu_hi_factor)
    if not math.isfinite(mu_hi_factor) or mu_hi_factor <= MU_LO_FACTOR:
        raise DomainError(f"mu_hi_factor must exceed {MU_LO_FACTOR}, got {mu_hi_factor}")
    if max_iter < 1:
        raise DomainError(f"max_iter must be at least 1, got {max_iter}")

    q_max = max(o.quantity for o in obs)
    best: CalibrationFit | None = None

    def score(mu: float) -> float:
        nonlocal best
        try:
            candidate = fit_fixed_mu(obs, mu)
        except (DegenerateFitError, InsufficientDataError, DomainError):
            return math.inf
        if best is None or candidate.sse < best.sse:
            best = candidate
        return candidate.sse

    lo = MU_LO_FACTOR * q_max
    hi = mu_hi_factor * q_max
    ratio = hi / lo
    last = _BRACKET_SCAN - 1
    grid = [lo * ratio ** (i / last) for i in range(_BRACKET_SCAN)]
    scores = [score(mu) for mu in grid]
    if best is None:
        raise SearchFailureError(
            "no feasible market size in the search bracket; the transformed "
            "regression is degenerate for every candidate"
        )
    k = min(range(_BRACKET_SCAN), key=lambda i: scores[i])
    a = grid[max(k - 1, 0)]
    b = grid[min(k + 1, last)]
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = score(c), score(d)
    for _ in range(max_iter):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = score(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = score(d)
    return best
