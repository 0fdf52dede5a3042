import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from logitprice.errors import DomainError
from logitprice.lambertw import BRANCH_POINT, WResult, w0, w0_of_exp

from golden import OMEGA, W_EXP_5, W_EXP_700, W_HALF, W_NEG_QUARTER


def test_known_values():
    assert w0(0.0).w == 0.0
    assert w0(math.e).w == pytest.approx(1.0, abs=2e-15)
    assert w0(1.0).w == pytest.approx(OMEGA, rel=5e-15)
    assert w0(0.5).w == pytest.approx(W_HALF, rel=5e-15)
    assert w0(-0.25).w == pytest.approx(W_NEG_QUARTER, rel=5e-15)
    assert w0_of_exp(5.0).w == pytest.approx(W_EXP_5, rel=5e-15)
    assert w0_of_exp(700.0).w == pytest.approx(W_EXP_700, rel=5e-15)


def test_branch_point():
    res = w0(BRANCH_POINT)
    assert res.w == -1.0
    assert res.iterations == 0
    # Slightly below the branch point is clamped, further below rejected.
    assert w0(BRANCH_POINT - 1e-13).w == -1.0
    with pytest.raises(DomainError):
        w0(BRANCH_POINT - 1e-9)


def test_domain_errors():
    with pytest.raises(DomainError):
        w0(math.nan)
    with pytest.raises(DomainError):
        w0_of_exp(math.nan)
    with pytest.raises(DomainError):
        w0_of_exp(700.0000001)
    with pytest.raises(DomainError):
        w0_of_exp(-701.0)
    # Both ends of the supported exponent range still converge.
    assert w0_of_exp(-700.0).w > 0.0
    assert w0_of_exp(700.0).w == pytest.approx(W_EXP_700, rel=5e-15)


def test_identity_positive_grid():
    # w * exp(w) = x across twelve decades.
    for x in np.geomspace(1e-6, 1e6, 10_000):
        res = w0(float(x))
        assert res.residual <= 1e-12 * (1.0 + x)
        assert res.iterations <= 64


def test_identity_negative_interval():
    for x in np.linspace(BRANCH_POINT, 0.0, 1_000):
        res = w0(float(x))
        assert res.residual <= 1e-12 * (1.0 + abs(x))
        assert -1.0 <= res.w <= 0.0


def test_log_form_identity():
    for y in np.linspace(-1.0, 700.0, 5_000):
        res = w0_of_exp(float(y))
        assert res.residual <= 1e-12 * (1.0 + abs(y))
        assert res.w > 0.0


def test_log_form_agrees_with_direct_form():
    for y in np.linspace(-1.0, 30.0, 400):
        direct = w0(math.exp(float(y))).w
        logged = w0_of_exp(float(y)).w
        assert logged == pytest.approx(direct, rel=1e-10)


def test_monotone_increasing():
    xs = np.concatenate([np.linspace(BRANCH_POINT, 0.0, 200), np.geomspace(1e-9, 1e9, 200)])
    ws = [w0(float(x)).w for x in sorted(xs)]
    assert all(a <= b for a, b in zip(ws, ws[1:]))


def test_tiny_log_argument():
    # w ~ exp(-700); the Halley step must not overflow on 1/w^2.
    res = w0_of_exp(-700.0)
    assert 0.0 < res.w < 1e-300
    assert res.residual <= 1e-12 * 701.0


def test_result_type():
    res = w0(2.0)
    assert isinstance(res, WResult)
    assert res.w * math.exp(res.w) == pytest.approx(2.0, rel=1e-14)


@given(st.floats(min_value=0.9999 * BRANCH_POINT, max_value=1e6))
def test_identity_property(x):
    res = w0(x)
    assert res.residual <= 1e-12 * (1.0 + abs(x))


@given(st.floats(min_value=-700.0, max_value=700.0))
def test_log_identity_property(y):
    res = w0_of_exp(y)
    assert res.residual <= 1e-12 * (1.0 + abs(y))
