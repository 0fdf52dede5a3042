import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from logitprice.demand import (
    LogitParams,
    demand,
    demand_d1,
    demand_d2,
    elasticity,
    inflection_price,
    revenue,
    revenue_derivatives,
    share,
    validate_params,
)
from logitprice.errors import DomainError

from golden import (
    BASE_D1_AT_0,
    BASE_D1_AT_15_6448,
    BASE_D2_AT_10,
    BASE_D_AT_0,
    BASE_R1_AT_100,
    BASE_SHARE_AT_15_6448,
)

BASE = validate_params(1000.0, -6.0, 0.3)


class TestValidation:
    def test_baseline_accepted(self):
        p = validate_params(1000, -6, 0.3)
        assert (p.mu, p.alpha, p.theta) == (1000.0, -6.0, 0.3)

    @pytest.mark.parametrize(
        "mu, alpha, theta, field",
        [
            (0.0, -6.0, 0.3, "mu"),
            (-5.0, -6.0, 0.3, "mu"),
            (math.inf, -6.0, 0.3, "mu"),
            (1000.0, -6.0, 0.0, "theta"),
            (1000.0, -6.0, -0.3, "theta"),
            (1000.0, math.nan, 0.3, "alpha"),
            (1000.0, 0.5, 0.3, "alpha"),
        ],
    )
    def test_errors_name_the_field(self, mu, alpha, theta, field):
        with pytest.raises(DomainError, match=field):
            validate_params(mu, alpha, theta)

    def test_strict_alpha_boundary(self):
        with pytest.raises(DomainError, match="alpha"):
            validate_params(1000, -2, 0.3)
        relaxed = validate_params(1000, -2, 0.3, strict=False)
        assert relaxed.alpha == -2.0
        assert validate_params(1000, -1.5, 0.3, strict=False).alpha == -1.5
        with pytest.raises(DomainError, match="alpha"):
            validate_params(1000, -1.5, 0.3, strict=True)
        # alpha >= 0 fails even relaxed
        with pytest.raises(DomainError, match="alpha"):
            validate_params(1000, 0.0, 0.3, strict=False)

    def test_params_frozen_and_coerced(self):
        p = LogitParams("1000", "-6", "0.3")
        assert p.mu == 1000.0 and isinstance(p.mu, float)
        with pytest.raises(Exception):
            p.mu = 5.0
        with pytest.raises(DomainError):
            LogitParams(1000.0, "abc", 0.3)


class TestPointValues:
    def test_share_at_inflection_is_half(self):
        assert share(BASE, 20.0) == 0.5

    def test_share_near_optimum(self):
        assert share(BASE, 15.6448) == pytest.approx(BASE_SHARE_AT_15_6448, rel=1e-13)
        assert share(BASE, 15.6448) == pytest.approx(0.78694, abs=5e-6)

    def test_share_saturates(self):
        assert share(BASE, 1e6) == 0.0

    def test_demand_points(self):
        assert demand(BASE, 20.0) == 500.0
        assert demand(BASE, 0.0) == pytest.approx(BASE_D_AT_0, rel=1e-13)
        assert demand(BASE, 0.0) == pytest.approx(997.527, abs=5e-4)
        assert demand(BASE, 15.6448) == pytest.approx(786.94, abs=5e-3)

    def test_first_derivative_points(self):
        assert demand_d1(BASE, 20.0) == -75.0
        assert demand_d1(BASE, 0.0) == pytest.approx(BASE_D1_AT_0, rel=1e-13)
        assert demand_d1(BASE, 0.0) == pytest.approx(-0.7400, abs=5e-5)
        assert demand_d1(BASE, 15.6448) == pytest.approx(BASE_D1_AT_15_6448, rel=1e-13)
        assert demand_d1(BASE, 15.6448) == pytest.approx(-50.3002, abs=5e-5)

    def test_second_derivative_points(self):
        assert demand_d2(BASE, 20.0) == 0.0
        assert demand_d2(BASE, 10.0) == pytest.approx(BASE_D2_AT_10, rel=1e-13)
        assert demand_d2(BASE, 10.0) == pytest.approx(-3.680, abs=5e-4)
        assert 0.0 < demand_d2(BASE, 200.0) < 1e-20

    def test_elasticity_points(self):
        assert elasticity(BASE, 20.0) == -3.0
        assert elasticity(BASE, 0.0) == 0.0
        assert elasticity(BASE, 15.6448) == pytest.approx(-1.0, abs=1e-4)

    def test_inflection_price(self):
        assert inflection_price(BASE) == 20.0
        assert inflection_price(validate_params(1000, -7, 0.1)) == 70.0
        assert inflection_price(validate_params(1, -2, 1.0, strict=False)) == 2.0

    def test_revenue_points(self):
        assert revenue(BASE, 20.0) == 10000.0
        assert revenue(BASE, 0.0) == 0.0
        assert revenue(BASE, 15.6448) == pytest.approx(12311.47, abs=1e-2)

    def test_revenue_derivatives_points(self):
        r1, r2 = revenue_derivatives(BASE, 20.0)
        assert r1 == -1000.0
        assert r2 == pytest.approx(-150.0, rel=1e-12)
        r1_far, _ = revenue_derivatives(BASE, 100.0)
        assert r1_far == pytest.approx(BASE_R1_AT_100, rel=1e-12)
        assert r1_far == pytest.approx(-1.095e-6, abs=5e-10)

    def test_first_revenue_derivative_at_inflection(self):
        # R'(p_inf) = mu * (1/2 + alpha/4), exact for these two cases
        assert revenue_derivatives(BASE, inflection_price(BASE))[0] == -1000.0
        p = validate_params(1000, -4, 0.5)
        assert revenue_derivatives(p, inflection_price(p))[0] == -500.0


class TestShapeProperties:
    def test_share_strictly_interior(self):
        for x in np.linspace(-700.0, 700.0, 1_401):
            p = (float(x) - BASE.alpha) / BASE.theta
            s = share(BASE, p)
            assert 0.0 <= s <= 1.0
            if abs(x) <= 30:
                assert 0.0 < s < 1.0

    def test_no_nan_for_huge_exponents(self):
        for x in (-1e4, -37.0, 0.0, 37.0, 1e4):
            p = (x - BASE.alpha) / BASE.theta
            values = [
                share(BASE, p),
                demand(BASE, p),
                demand_d1(BASE, p),
                demand_d2(BASE, p),
                elasticity(BASE, p),
                *revenue_derivatives(BASE, p),
            ]
            assert all(math.isfinite(v) for v in values)

    def test_demand_linear_in_mu(self):
        prices = [0.0, 5.0, 15.6448, 20.0, 33.3]
        for k in (2.0, 10.0, 1000.0):
            scaled = LogitParams(k, BASE.alpha, BASE.theta)
            unit = LogitParams(1.0, BASE.alpha, BASE.theta)
            for p in prices:
                assert demand(scaled, p) == k * demand(unit, p)
        doubled = LogitParams(2 * BASE.mu, BASE.alpha, BASE.theta)
        for p in prices:
            assert demand(doubled, p) == 2.0 * demand(BASE, p)

    def test_elasticity_strictly_decreasing(self):
        grid = np.linspace(0.0, 100.0, 10_000)
        values = [elasticity(BASE, float(p)) for p in grid]
        assert all(a > b for a, b in zip(values, values[1:]))
        for p, e in zip(grid[1:], values[1:]):
            assert -p * BASE.theta < e < 0.0

    def test_elasticity_at_inflection_is_half_alpha(self):
        rng = np.random.default_rng(42)
        for _ in range(1000):
            alpha = float(rng.uniform(-12.0, -2.001))
            theta = float(rng.uniform(0.01, 5.0))
            params = validate_params(1000.0, alpha, theta)
            eps = elasticity(params, inflection_price(params))
            assert eps == pytest.approx(alpha / 2.0, rel=1e-12)

    def test_second_derivative_sign_change(self):
        for params in (BASE, validate_params(1000, -7, 0.1)):
            p_inf = inflection_price(params)
            assert demand_d2(params, p_inf * (1.0 - 1e-9)) < 0.0
            assert demand_d2(params, p_inf * (1.0 + 1e-9)) > 0.0
            signs = [demand_d2(params, float(p)) < 0.0 for p in np.linspace(0.0, 3 * p_inf, 2001) if demand_d2(params, float(p)) != 0.0]
            flips = sum(1 for a, b in zip(signs, signs[1:]) if a != b)
            assert flips == 1

    def test_first_derivative_negative(self):
        for p in np.linspace(0.0, 120.0, 601):
            assert demand_d1(BASE, float(p)) < 0.0


@given(
    st.floats(min_value=-12.0, max_value=-2.001),
    st.floats(min_value=0.01, max_value=5.0),
    st.floats(min_value=0.0, max_value=200.0),
)
def test_identities_property(alpha, theta, p):
    params = validate_params(1000.0, alpha, theta)
    s = share(params, p)
    assert demand(params, p) == params.mu * s
    assert revenue(params, p) == p * demand(params, p)
    r1, _ = revenue_derivatives(params, p)
    assert r1 == pytest.approx(demand(params, p) + p * demand_d1(params, p), rel=1e-12, abs=1e-12)
