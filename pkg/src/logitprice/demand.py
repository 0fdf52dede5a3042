"""Logit demand primitives: share, demand, derivatives, elasticity, revenue.

The demand curve is d(p) = mu / (1 + exp(alpha + theta * p)). Everything
here is a scalar function of one price; the exponent alpha + theta * p is
formed once per evaluation and the sigmoid is split into its two stable
branches so no input within double range produces NaN or infinity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

# Exclusive upper bound on alpha under the default (strict) policy. The
# qualitative pricing structure (interior optimum strictly below the
# inflection price) is only guaranteed on this range.
STRICT_ALPHA_MAX = -2.0


@dataclass(frozen=True)
class LogitParams:
    """Market parameters of a single-product logit demand curve.

    ``mu`` is the market size (demand ceiling), ``alpha`` the baseline
    utility offset, ``theta`` the price sensitivity. The constructor
    enforces the envelope every routine relies on: all finite, mu > 0,
    theta > 0, alpha < 0. ``validate_params`` layers the stricter default
    policy alpha < -2 on top.
    """

    mu: float
    alpha: float
    theta: float

    def __post_init__(self) -> None:
        for name in ("mu", "alpha", "theta"):
            raw = getattr(self, name)
            try:
                value = float(raw)
            except (TypeError, ValueError):
                raise DomainError(f"{name} must be a real number, got {raw!r}") from None
            if not math.isfinite(value):
                raise DomainError(f"{name} must be finite, got {value}")
            object.__setattr__(self, name, value)
        if self.mu <= 0.0:
            raise DomainError(f"mu must be positive, got {self.mu}")
        if self.theta <= 0.0:
            raise DomainError(f"theta must be positive, got {self.theta}")
        if self.alpha >= 0.0:
            raise DomainError(f"alpha must be negative, got {self.alpha}")


def validate_params(mu: float, alpha: float, theta: float, *, strict: bool = True) -> LogitParams:
    """Build LogitParams, applying the strict alpha < -2 policy by default.

    Args:
        mu: Market size, finite and positive.
        alpha: Baseline utility offset, finite; < -2 when strict, < 0 otherwise.
        theta: Price sensitivity, finite and positive.
        strict: When False, relax the alpha bound to alpha < 0.

    Raises:
        DomainError: naming the offending field.
    """
    params = LogitParams(mu, alpha, theta)
    if strict and not params.alpha < STRICT_ALPHA_MAX:
        raise DomainError(
            f"alpha must be < {STRICT_ALPHA_MAX:g} (got {params.alpha:g}); "
            "pass strict=False to allow -2 <= alpha < 0"
        )
    return params


def _share_parts(params: LogitParams, p: float) -> tuple[float, float]:
    """Share s = 1 / (1 + exp(x)) and complement 1 - s, x = alpha + theta p.

    Each component is computed on the branch where the exponential cannot
    overflow, so the pair is finite for any representable exponent. Note
    the true share is never exactly 0 or 1, but it rounds to them once
    |x| passes roughly 745 (double underflow).
    """
    x = params.alpha + params.theta * p
    if x >= 0.0:
        e = math.exp(-x)
        return e / (1.0 + e), 1.0 / (1.0 + e)
    e = math.exp(x)
    return 1.0 / (1.0 + e), e / (1.0 + e)


def share(params: LogitParams, p: float) -> float:
    """Fraction of the market buying at price p, in (0, 1)."""
    return _share_parts(params, p)[0]


def demand(params: LogitParams, p: float) -> float:
    """Demand mu * share(p). Exactly linear in mu."""
    return params.mu * _share_parts(params, p)[0]


def demand_d1(params: LogitParams, p: float) -> float:
    """First derivative of demand: -mu * theta * s * (1 - s). Always negative."""
    s, c = _share_parts(params, p)
    return -params.mu * params.theta * s * c


def demand_d2(params: LogitParams, p: float) -> float:
    """Second derivative of demand: mu * theta^2 * s * (1 - s) * (1 - 2 s).

    Negative below the inflection price (demand concave), zero there,
    positive above (demand convex).
    """
    s, c = _share_parts(params, p)
    return params.mu * params.theta**2 * s * c * (c - s)


def elasticity(params: LogitParams, p: float) -> float:
    """Price elasticity of demand at p: -p * theta * (1 - share(p)).

    Zero at p = 0, strictly decreasing, and bounded below by -p * theta.
    """
    _, c = _share_parts(params, p)
    return -p * params.theta * c


def inflection_price(params: LogitParams) -> float:
    """Price -alpha / theta where demand switches from concave to convex.

    Demand there is exactly mu / 2.
    """
    return -params.alpha / params.theta


def revenue(params: LogitParams, p: float) -> float:
    """Revenue p * demand(p)."""
    return p * demand(params, p)


def revenue_derivatives(params: LogitParams, p: float) -> tuple[float, float]:
    """First and second derivative of revenue at p.

    R'(p) = d(p) + p d'(p) and R''(p) = 2 d'(p) + p d''(p), assembled from
    one shared share evaluation.
    """
    s, c = _share_parts(params, p)
    d = params.mu * s
    d1 = -params.mu * params.theta * s * c
    d2 = params.mu * params.theta**2 * s * c * (c - s)
    return d + p * d1, 2.0 * d1 + p * d2
