"""Principal-branch Lambert W, evaluated with Halley's iteration.

Two entry points cover the two ways the argument shows up. ``w0`` solves
w * exp(w) = x for x >= -1/e. ``w0_of_exp`` solves w + log(w) = y, which
equals W(exp(y)) without ever forming exp(y), so arguments like y = 700
stay representable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError

BRANCH_POINT = -math.exp(-1.0)
# Inputs this far below -1/e are treated as rounding noise and clamped.
DOMAIN_SLACK = 1e-12
REL_TOL = 1e-14
MAX_ITER = 64
EXP_ARG_MIN = -700.0
EXP_ARG_MAX = 700.0


@dataclass(frozen=True)
class WResult:
    """A converged W evaluation.

    ``w`` is the principal-branch value, ``iterations`` the number of
    Halley steps taken, and ``residual`` the defining identity's gap at
    the returned point: |w * exp(w) - x| for the direct form,
    |w + log(w) - y| for the log form.
    """

    w: float
    iterations: int
    residual: float


def _initial_guess(x: float) -> float:
    if x < 0.0:
        # Series around the branch point in q = sqrt(2 (e x + 1)).
        q_sq = 2.0 * (math.e * x + 1.0)
        if q_sq <= 0.0:
            return -1.0
        q = math.sqrt(q_sq)
        return -1.0 + q * (1.0 + q * (-1.0 / 3.0 + q * (11.0 / 72.0)))
    if x <= math.e:
        return x / (1.0 + x)
    log_x = math.log(x)
    return log_x - math.log(log_x)


def w0(x: float) -> WResult:
    """Principal branch W0(x), the real solution of w * exp(w) = x.

    Args:
        x: Argument, x >= -1/e (values within ``DOMAIN_SLACK`` below the
            branch point are clamped to it).

    Returns:
        WResult with w in [-1, inf).

    Raises:
        DomainError: if x is NaN or lies below -1/e - DOMAIN_SLACK.
        ConvergenceError: if Halley's iteration fails to settle within
            MAX_ITER steps (does not occur on the valid domain).
    """
    if math.isnan(x):
        raise DomainError("x must not be NaN")
    if x < BRANCH_POINT - DOMAIN_SLACK:
        raise DomainError(f"x={x!r} is below -1/e, outside the real domain of W0")
    x = max(x, BRANCH_POINT)
    if x == 0.0:
        return WResult(0.0, 0, 0.0)

    w = _initial_guess(x)
    if w == -1.0:
        # Exactly at the branch point the derivative vanishes; the series
        # value is already the answer.
        return WResult(-1.0, 0, abs(BRANCH_POINT - x))
    for iteration in range(1, MAX_ITER + 1):
        exp_w = math.exp(w)
        f = w * exp_w - x
        if f == 0.0:
            return WResult(w, iteration, 0.0)
        f1 = exp_w * (w + 1.0)
        # Halley step, written to stay finite as w approaches -1.
        denom = f1 - (w + 2.0) * f / (2.0 * (w + 1.0)) if w != -1.0 else f1
        if denom == 0.0:
            denom = f1
        step = f / denom
        new_w = w - step
        if new_w < -1.0:
            new_w = 0.5 * (w - 1.0)  # halve the distance to the branch point
        step = w - new_w
        w = new_w
        if abs(step) <= REL_TOL * (1.0 + abs(w)):
            return WResult(w, iteration, abs(w * math.exp(w) - x))
    raise ConvergenceError(f"w0({x!r}) did not converge in {MAX_ITER} iterations")


def w0_of_exp(y: float) -> WResult:
    """W0(exp(y)), computed as the root of w + log(w) = y.

    Works directly in the log domain so y far beyond the overflow point
    of exp (up to +/- 700) is fine.

    Args:
        y: Exponent, in [-700, 700].

    Returns:
        WResult with w > 0.

    Raises:
        DomainError: if y is NaN or outside [-700, 700].
        ConvergenceError: if Halley's iteration fails to settle within
            MAX_ITER steps (does not occur on the valid domain).
    """
    if math.isnan(y):
        raise DomainError("y must not be NaN")
    if y < EXP_ARG_MIN or y > EXP_ARG_MAX:
        raise DomainError(f"y={y!r} outside [{EXP_ARG_MIN:g}, {EXP_ARG_MAX:g}]")

    if y > 1.0:
        w = y - math.log(y)
    else:
        exp_y = math.exp(y)  # y <= 1, cannot overflow
        w = exp_y / (1.0 + exp_y)
    for iteration in range(1, MAX_ITER + 1):
        g = w + math.log(w) - y
        if g == 0.0:
            return WResult(w, iteration, 0.0)
        # Halley step for g(w) = w + log w - y, arranged so that no
        # intermediate forms 1/w**2 (w can be as small as exp(-700)).
        step = (g * w / (w + 1.0)) / (1.0 + g / (2.0 * (w + 1.0) ** 2))
        new_w = w - step
        if new_w <= 0.0:
            new_w = 0.5 * w  # keep the iterate in the domain of log
        step = w - new_w
        w = new_w
        if abs(step) <= REL_TOL * (1.0 + abs(w)):
            return WResult(w, iteration, abs(w + math.log(w) - y))
    raise ConvergenceError(f"w0_of_exp({y!r}) did not converge in {MAX_ITER} iterations")
