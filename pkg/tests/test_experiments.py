import math

import pytest

from logitprice.demand import validate_params
from logitprice.errors import DomainError
from logitprice.experiments import MAX_RANGE_VALUES, RangeSpec, sample_curves, sweep

from golden import SENSITIVITY_ROWS, grid_rounds_to

BASE = validate_params(1000.0, -6.0, 0.3)


class TestRangeSpec:
    def test_explicit_values_kept_in_order(self):
        spec = RangeSpec.from_values([0.5, 0.1, 0.3])
        assert spec.expand() == [0.5, 0.1, 0.3]

    def test_duplicates_preserved(self):
        assert RangeSpec.from_values([-5.0, -5.0]).expand() == [-5.0, -5.0]

    def test_empty_rejected(self):
        with pytest.raises(DomainError):
            RangeSpec.from_values([])

    def test_nonfinite_rejected(self):
        with pytest.raises(DomainError):
            RangeSpec.from_values([1.0, math.inf])
        with pytest.raises(DomainError):
            RangeSpec.from_range(0.0, math.nan, 1.0)

    def test_inclusive_range(self):
        values = RangeSpec.from_range(0.1, 0.5, 0.2).expand()
        assert len(values) == 3
        assert values[0] == 0.1
        assert values[1] == pytest.approx(0.3, rel=1e-12)
        assert values[2] == 0.5  # snapped onto the stated end

    def test_descending_range(self):
        assert RangeSpec.from_range(-3.0, -7.0, -1.0).expand() == [-3.0, -4.0, -5.0, -6.0, -7.0]

    def test_end_not_on_grid(self):
        values = RangeSpec.from_range(0.0, 1.0, 0.3).expand()
        assert len(values) == 4
        assert values[-1] == pytest.approx(0.9, rel=1e-12)

    def test_step_validation(self):
        with pytest.raises(DomainError):
            RangeSpec.from_range(0.0, 1.0, 0.0)
        with pytest.raises(DomainError):
            RangeSpec.from_range(0.0, 1.0, -0.1)
        with pytest.raises(DomainError):
            RangeSpec.from_range(1.0, 0.0, 0.1)

    def test_expansion_cap(self):
        with pytest.raises(DomainError):
            RangeSpec.from_range(0.0, float(MAX_RANGE_VALUES), 0.5)


class TestSweep:
    def test_case_order_matches_reference_grid(self):
        rows = sweep(
            RangeSpec.from_values([-7, -5, -4, -3]),
            RangeSpec.from_values([0.1, 0.3, 0.5]),
            1000.0,
        )
        assert [r.case_index for r in rows] == list(range(1, 13))
        assert [(r.alpha, r.theta) for r in rows] == [
            (alpha, theta) for _, alpha, theta, *_ in SENSITIVITY_ROWS
        ]

    def test_rows_match_reference_grid(self):
        rows = sweep(
            RangeSpec.from_values([-3, -4, -5, -7]),  # order is normalized
            RangeSpec.from_values([0.5, 0.1, 0.3]),
            1000.0,
        )
        for row, expected in zip(rows, SENSITIVITY_ROWS):
            _, alpha, theta, p_s, d_s, r_s, p_i, d_i, r_i = expected
            assert row.mu == 1000.0
            assert grid_rounds_to(row.p_star, p_s, 2)
            assert grid_rounds_to(row.d_star, d_s, 1)
            assert grid_rounds_to(row.r_star, r_s, 1, slack=0.1)
            assert grid_rounds_to(row.p_inf, p_i, 2)
            assert grid_rounds_to(row.d_inf, d_i, 1)
            assert grid_rounds_to(row.r_inf, r_i, 1, slack=0.1)

    def test_abort_names_the_pair(self):
        with pytest.raises(DomainError, match=r"alpha=-1.*theta=0\.1"):
            sweep(
                RangeSpec.from_values([-7, -1]),
                RangeSpec.from_values([0.1, 0.3]),
                1000.0,
            )

    def test_relaxed_mode_propagates(self):
        rows = sweep(
            RangeSpec.from_values([-1.5]),
            RangeSpec.from_values([0.3]),
            1000.0,
            strict=False,
        )
        assert len(rows) == 1
        assert rows[0].alpha == -1.5

    def test_duplicate_values_yield_duplicate_rows(self):
        rows = sweep(
            RangeSpec.from_values([-5, -5]),
            RangeSpec.from_values([0.3]),
            1000.0,
        )
        assert len(rows) == 2
        assert rows[0].p_star == rows[1].p_star


class TestSampleCurves:
    def test_endpoints_exact(self):
        samples = sample_curves(BASE, 0.25, 59.75, 100)
        assert samples[0].p == 0.25
        assert samples[-1].p == 59.75
        assert len(samples) == 100

    def test_inflection_row(self):
        samples = sample_curves(BASE, 0.0, 60.0, 601)
        row = samples[200]
        assert row.p == 20.0
        assert row.demand == 500.0
        assert row.d1 == -75.0
        assert row.d2 == 0.0
        assert row.revenue == 10000.0
        assert row.r1 == -1000.0
        assert row.elasticity == -3.0

    def test_row_identities(self):
        for row in sample_curves(BASE, 0.0, 60.0, 97):
            assert row.revenue == row.p * row.demand
            assert row.r1 == row.demand + row.p * row.d1

    def test_two_point_sampling(self):
        samples = sample_curves(BASE, 1.0, 2.0, 2)
        assert [s.p for s in samples] == [1.0, 2.0]

    def test_validation(self):
        with pytest.raises(DomainError):
            sample_curves(BASE, -1.0, 10.0, 10)
        with pytest.raises(DomainError):
            sample_curves(BASE, 10.0, 10.0, 10)
        with pytest.raises(DomainError):
            sample_curves(BASE, 0.0, 10.0, 1)
        with pytest.raises(DomainError):
            sample_curves(BASE, 0.0, math.inf, 10)
