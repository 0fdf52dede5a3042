"""Independent numerical checks for the closed-form solution.

Everything here deliberately avoids the Lambert route: the maximizer is
re-located by derivative-free golden-section search, derivatives are
re-derived by central differences, and unimodality is checked by a plain
grid scan. ``verify`` bundles the gaps between the two routes into one
report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .demand import LogitParams, demand, demand_d1, demand_d2, inflection_price, revenue
from .errors import DomainError, InvalidBracketError
from .lambertw import w0_of_exp
from .solver import ratios_closed_form, solve

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_MAX_BRACKET_ITER = 256

# Absolute step used by the difference quotients, scaled by max(1, |p|).
FD_STEP = float(2.0**-52) ** (1.0 / 3.0)
# Relative floor protecting difference quotients near a derivative's
# isolated zeros, as a fraction of the derivative's scale on the grid.
FD_REL_FLOOR = 1e-6

# Pass thresholds applied by VerificationReport.passed and the CLI.
FOC_GAP_MAX = 1e-10
ELASTICITY_GAP_MAX = 1e-10
ORACLE_GAP_MAX = 1e-6
W_IDENTITY_GAP_MAX = 1e-12
RATIO_GAP_MAX = 1e-12
FD_D1_GAP_MAX = 1e-6
FD_D2_GAP_MAX = 1e-5


@dataclass(frozen=True)
class VerificationReport:
    """Gap sizes between the closed form and independent recomputations.

    ``foc_gap`` is |stationarity residual at p*|, ``elasticity_gap`` is
    |elasticity(p*) + 1|, ``oracle_gap`` the relative distance between
    the golden-section maximizer and the closed-form p*, and
    ``w_identity_gap`` the Lambert residual normalized by (1 + |y|).
    ``ratio_gap`` compares the two ratio computation paths,
    ``fd_d1_gap``/``fd_d2_gap`` are the worst relative disagreements of
    the difference quotients with the analytic derivatives, and the scan
    results say whether revenue rose and fell exactly once.
    """

    foc_gap: float
    elasticity_gap: float
    oracle_gap: float
    w_identity_gap: float
    ratio_gap: float
    fd_d1_gap: float
    fd_d2_gap: float
    unimodal: bool
    sign_changes: int

    def passed(self) -> bool:
        """True when every gap is below its threshold and revenue is unimodal."""
        return (
            self.foc_gap <= FOC_GAP_MAX
            and self.elasticity_gap <= ELASTICITY_GAP_MAX
            and self.oracle_gap <= ORACLE_GAP_MAX
            and self.w_identity_gap <= W_IDENTITY_GAP_MAX
            and self.ratio_gap <= RATIO_GAP_MAX
            and self.fd_d1_gap <= FD_D1_GAP_MAX
            and self.fd_d2_gap <= FD_D2_GAP_MAX
            and self.unimodal
        )


def golden_section_max(
    f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-10
) -> float:
    """Locate the maximizer of a unimodal f on [lo, hi] by golden-section search.

    Derivative-free and fully deterministic: identical inputs give a
    bitwise identical result. When f is unimodal on the bracket the
    returned point is within tol * max(1, |argmax|) of the true maximizer.

    Raises:
        InvalidBracketError: if lo >= hi or tol <= 0.
    """
    if not lo < hi:
        raise InvalidBracketError(f"bracket requires lo < hi, got [{lo!r}, {hi!r}]")
    if not tol > 0.0:
        raise InvalidBracketError(f"tol must be positive, got {tol!r}")
    a, b = lo, hi
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(_MAX_BRACKET_ITER):
        if (b - a) <= tol * max(1.0, 0.5 * (abs(a) + abs(b))):
            break
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def scan_sign_changes(f: Callable[[float], float], lo: float, hi: float, n: int) -> int:
    """Count strict sign changes of successive differences of f on a uniform grid.

    A zero difference inherits the preceding sign, so flat shoulders and
    exact plateau samples do not add changes.
    """
    if not lo < hi:
        raise InvalidBracketError(f"grid requires lo < hi, got [{lo!r}, {hi!r}]")
    if n < 2:
        raise DomainError(f"need at least 2 grid points, got {n}")
    last = n - 1
    prev = f(lo)
    sign = 0
    changes = 0
    for i in range(1, n):
        p = (lo * (last - i) + hi * i) / last
        cur = f(p)
        if cur > prev:
            s = 1
        elif cur < prev:
            s = -1
        else:
            s = sign
        if sign != 0 and s != 0 and s != sign:
            changes += 1
        if s != 0:
            sign = s
        prev = cur
    return changes


def unimodality_scan(params: LogitParams, n: int, hi: float) -> int:
    """Sign changes of revenue differences on an n-point grid over [0, hi].

    Exactly 1 for a revenue curve that rises to a single peak and then
    falls.

    Raises:
        DomainError: if n < 1000 or hi is not above the inflection price.
    """
    if n < 1000:
        raise DomainError(f"scan needs n >= 1000 points, got {n}")
    p_inf = inflection_price(params)
    if not hi > p_inf:
        raise DomainError(f"scan ceiling hi={hi!r} must exceed the inflection price {p_inf!r}")
    return scan_sign_changes(lambda p: revenue(params, p), 0.0, hi, n)


def central_difference(f: Callable[[float], float], p: float) -> float:
    """Symmetric difference quotient with step cbrt(eps) * max(1, |p|)."""
    h = FD_STEP * max(1.0, abs(p))
    return (f(p + h) - f(p - h)) / (2.0 * h)


def _fd_gap(
    f: Callable[[float], float],
    analytic: Callable[[float], float],
    grid: list[float],
) -> float:
    """Worst relative gap between difference quotients of f and the analytic derivative.

    The denominator is floored at FD_REL_FLOOR times the derivative's
    scale on the grid, so isolated zeros of the derivative (where any
    difference quotient is pure cancellation noise) do not dominate.
    """
    values = [analytic(p) for p in grid]
    floor = FD_REL_FLOOR * max(abs(v) for v in values)
    worst = 0.0
    for p, v in zip(grid, values):
        gap = abs(central_difference(f, p) - v) / max(abs(v), floor)
        if gap > worst:
            worst = gap
    return worst


def verify(params: LogitParams, *, scan_points: int = 2001) -> VerificationReport:
    """Cross-examine the closed form against every independent route.

    Runs the solve, re-locates the maximizer by golden-section search on
    [0, max(3 p_inf, 10 / theta)], re-derives first and second
    derivatives by central differences on [0, 3 p_inf], checks the
    Lambert identity, compares the two ratio paths, and scans revenue
    for unimodality. Deterministic: repeated calls return equal reports.
    """
    sol = solve(params)
    hi = max(3.0 * sol.p_inf, 10.0 / params.theta)

    p_oracle = golden_section_max(lambda p: revenue(params, p), 0.0, hi, tol=1e-10)
    oracle_gap = abs(p_oracle - sol.p_star) / sol.p_star

    y = -(params.alpha + 1.0)
    w_res = w0_of_exp(y)
    w_identity_gap = w_res.residual / (1.0 + abs(y))

    rr_cf, pr_cf = ratios_closed_form(params)
    ratio_gap = max(
        abs(rr_cf - sol.revenue_ratio) / sol.revenue_ratio,
        abs(pr_cf - sol.price_ratio) / sol.price_ratio,
    )

    last = 100
    grid = [3.0 * sol.p_inf * i / last for i in range(last + 1)]
    fd_d1_gap = _fd_gap(
        lambda p: demand(params, p), lambda p: demand_d1(params, p), grid
    )
    fd_d2_gap = _fd_gap(
        lambda p: demand_d1(params, p), lambda p: demand_d2(params, p), grid
    )

    sign_changes = unimodality_scan(params, scan_points, hi)
    return VerificationReport(
        foc_gap=abs(sol.foc_residual),
        elasticity_gap=abs(sol.elasticity_at_star + 1.0),
        oracle_gap=oracle_gap,
        w_identity_gap=w_identity_gap,
        ratio_gap=ratio_gap,
        fd_d1_gap=fd_d1_gap,
        fd_d2_gap=fd_d2_gap,
        unimodal=sign_changes == 1,
        sign_changes=sign_changes,
    )
