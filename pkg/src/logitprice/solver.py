"""Closed-form revenue maximization for logit demand.

The stationarity condition (theta p - 1) exp(alpha + theta p) = 1 is
solved exactly by p* = (1 + W(exp(-(alpha + 1)))) / theta with W the
principal Lambert branch. The solver evaluates W through its log-domain
form, so deeply negative alpha never forms the huge exponential.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .demand import LogitParams, demand, elasticity, inflection_price, share
from .lambertw import w0_of_exp

# Band of the exponent alpha + theta p inside which the stationarity
# residual is formed directly; beyond it the comparison moves to logs.
_FOC_EXP_BAND = 30.0
_LOG_OVERFLOW = 709.0


@dataclass(frozen=True)
class PricingSolution:
    """Everything the closed form yields for one parameter set.

    ``p_star``/``d_star``/``r_star`` describe the revenue maximizer,
    ``p_inf``/``d_inf``/``r_inf`` the inflection point of demand, the two
    ratios compare them, and the last two fields are optimality
    certificates (elasticity at p* is -1, the stationarity residual is 0,
    both up to rounding).
    """

    params: LogitParams
    p_star: float
    d_star: float
    r_star: float
    p_inf: float
    d_inf: float
    r_inf: float
    revenue_ratio: float
    price_ratio: float
    elasticity_at_star: float
    foc_residual: float


def optimal_price(params: LogitParams) -> float:
    """Revenue-maximizing price (1 + W(exp(-(alpha + 1)))) / theta.

    Raises:
        DomainError: if -(alpha + 1) falls outside the supported log-form
            range [-700, 700] (alpha < -701).
    """
    w = w0_of_exp(-(params.alpha + 1.0)).w
    return (1.0 + w) / params.theta


def foc_residual(params: LogitParams, p: float) -> float:
    """Residual of the stationarity condition (theta p - 1) e^(alpha + theta p) - 1.

    Zero exactly at the optimal price. Once the exponent leaves
    [-30, 30] the product is formed in the log domain, so the result
    stays sign-correct without overflow (saturating at +/-inf when even
    the logarithm of the residual exceeds double range).
    """
    x = params.alpha + params.theta * p
    lead = params.theta * p - 1.0
    if x <= _FOC_EXP_BAND:
        # exp(x) is small or moderate here; for very negative x it
        # underflows harmlessly toward -1.
        return lead * math.exp(x) - 1.0
    if lead > 0.0:
        g = math.log(lead) + x
        return math.expm1(g) if g < _LOG_OVERFLOW else math.inf
    if lead == 0.0:
        return -1.0
    g = math.log(-lead) + x
    return -math.exp(g) - 1.0 if g < _LOG_OVERFLOW else -math.inf


def solve(params: LogitParams) -> PricingSolution:
    """Solve the pricing problem and package every derived quantity.

    The revenue and price ratios are computed from shares rather than
    from r_star / r_inf, which makes them (and p_star) bitwise
    independent of mu.
    """
    p_star = optimal_price(params)
    s_star = share(params, p_star)
    d_star = params.mu * s_star
    r_star = p_star * d_star
    p_inf = inflection_price(params)
    d_inf = demand(params, p_inf)
    r_inf = p_inf * d_inf
    return PricingSolution(
        params=params,
        p_star=p_star,
        d_star=d_star,
        r_star=r_star,
        p_inf=p_inf,
        d_inf=d_inf,
        r_inf=r_inf,
        revenue_ratio=(p_star * s_star) / (p_inf * 0.5),
        price_ratio=p_star / p_inf,
        elasticity_at_star=elasticity(params, p_star),
        foc_residual=foc_residual(params, p_star),
    )


def ratios_closed_form(params: LogitParams) -> tuple[float, float]:
    """Revenue and price ratios of the optimum to the inflection point.

    Evaluated literally from the closed-form expressions

        price_ratio   = (1 + W(exp(-(alpha + 1)))) / (-alpha)
        revenue_ratio = price_ratio * exp(-theta (p* - p_inf))
                        * (1 + exp(-(alpha + theta p_inf)))
                        / (1 + exp(-(alpha + theta p*)))

    rather than via any simplification. Both depend on alpha alone; the
    theta factors cancel to rounding.

    Returns:
        (revenue_ratio, price_ratio)
    """
    alpha, theta = params.alpha, params.theta
    w = w0_of_exp(-(alpha + 1.0)).w
    price_ratio = (1.0 + w) / (-alpha)
    p_star = (1.0 + w) / theta
    p_inf = -alpha / theta
    revenue_ratio = (
        price_ratio
        * math.exp(-theta * (p_star - p_inf))
        * (1.0 + math.exp(-(alpha + theta * p_inf)))
        / (1.0 + math.exp(-(alpha + theta * p_star)))
    )
    return revenue_ratio, price_ratio
