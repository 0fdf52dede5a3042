"""Scikit-learn estimator facade over calibration and pricing."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin
from sklearn.utils.validation import check_array, check_is_fitted

from . import calibration, solver
from .demand import demand
from .errors import DomainError


def _as_prices(X) -> np.ndarray:
    """Accept a 1-D price vector or a single-column 2-D design matrix."""
    arr = check_array(X, ensure_2d=False, dtype=np.float64)
    if arr.ndim == 2:
        if arr.shape[1] != 1:
            raise DomainError(f"expected a single price feature, got {arr.shape[1]} columns")
        arr = arr[:, 0]
    return arr


class LogitDemandRegressor(RegressorMixin, BaseEstimator):
    """Predict demand from price with a calibrated logit curve.

    Parameters
    ----------
    mu : float or None, default=None
        Known market size. When None, ``fit`` searches for it by golden
        section over (1.0001 qmax, mu_hi_factor qmax].
    mu_hi_factor : float, default=100.0
        Upper bracket of the market-size search, as a multiple of the
        largest observed quantity. Ignored when ``mu`` is given.

    Attributes
    ----------
    params_ : LogitParams
        The fitted parameter triple.
    mu_, alpha_, theta_ : float
        Convenience copies of the fitted parameters.
    sse_ : float
        Sum of squared quantity errors on the training data.
    n_obs_ : int
        Number of training observations.

    Examples
    --------
    >>> reg = LogitDemandRegressor(mu=1000.0)
    >>> reg = reg.fit([[1.0], [10.0], [20.0]], [996.7, 952.6, 500.0])
    >>> round(reg.optimal_price(), 2)
    15.64
    """

    def __init__(self, mu: float | None = None, mu_hi_factor: float = 100.0):
        self.mu = mu
        self.mu_hi_factor = mu_hi_factor

    def fit(self, X, y) -> "LogitDemandRegressor":
        """Calibrate the demand curve on prices X and quantities y."""
        prices = _as_prices(X)
        quantities = check_array(y, ensure_2d=False, dtype=np.float64)
        if quantities.ndim != 1 or quantities.shape[0] != prices.shape[0]:
            raise DomainError(
                f"y must be a vector matching X, got shapes {prices.shape} and {quantities.shape}"
            )
        obs = [
            calibration.Observation(float(p), float(q))
            for p, q in zip(prices, quantities, strict=True)
        ]
        if self.mu is not None:
            result = calibration.fit_fixed_mu(obs, self.mu)
        else:
            result = calibration.fit(obs, mu_hi_factor=self.mu_hi_factor)
        self.params_ = result.params
        self.mu_ = result.params.mu
        self.alpha_ = result.params.alpha
        self.theta_ = result.params.theta
        self.sse_ = result.sse
        self.n_obs_ = result.n_obs
        return self

    def predict(self, X) -> np.ndarray:
        """Predicted demand at each price in X."""
        check_is_fitted(self, "params_")
        prices = _as_prices(X)
        return np.array([demand(self.params_, float(p)) for p in prices])

    def optimal_price(self) -> float:
        """Revenue-maximizing price for the fitted curve."""
        check_is_fitted(self, "params_")
        return solver.optimal_price(self.params_)

    def pricing_solution(self) -> solver.PricingSolution:
        """Full closed-form solution bundle for the fitted curve."""
        check_is_fitted(self, "params_")
        return solver.solve(self.params_)
