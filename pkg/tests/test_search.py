"""Tests for body searches, family sweeps, and randomized scans."""

import math

import numpy as np
import pytest

from logcoef.bounds import bound_delta, m_upper_bound
from logcoef.catalog import g_quadratic
from logcoef.classes import ClassSpec
from logcoef.functional import delta
from logcoef.search import (
    BODY_NOTE,
    BOUND_CLASS,
    SCAN_TOLERANCE,
    SWEEPABLE,
    ScanResult,
    SearchResult,
    SweepRow,
    body_delta,
    body_search,
    bound_violation_scan,
    family_sweep,
)


class TestBodyDelta:
    def test_u_lower_extreme_point(self):
        # |a_2| = sqrt 2 with the free part of a_3 cancelling gamma_2
        got = body_delta(ClassSpec("S"), math.sqrt(2.0), 1.0, math.pi)
        assert got == pytest.approx(-math.sqrt(2.0) / 2.0, abs=1e-15)

    def test_u_upper_extreme_point(self):
        got = body_delta(ClassSpec("U", lam=0.5), 0.0, 0.5, 0.0)
        assert got == pytest.approx(0.25, abs=1e-15)

    def test_m_upper_extreme_point(self):
        got = body_delta(ClassSpec("M", alpha=1.0), 0.0, 1.0, math.pi)
        assert got == pytest.approx(m_upper_bound(1.0), abs=1e-15)

    def test_g_upper_extreme_point(self):
        got = body_delta(ClassSpec("G", alpha=1.0), 0.0, 1.0, math.pi)
        assert got == pytest.approx(1.0 / 12.0, abs=1e-15)

    def test_broadcasts(self):
        m1 = np.array([0.0, 0.5, 1.0])
        out = body_delta(ClassSpec("U", lam=1.0), m1, 0.5, 0.0)
        assert out.shape == (3,)
        assert out[0] == pytest.approx(0.25, abs=1e-15)


class TestBodySearch:
    def test_reaches_bounds_at_modest_resolution(self):
        for spec in [
            ClassSpec("U", lam=0.5),
            ClassSpec("M", alpha=1.0),
            ClassSpec("G", alpha=1.0),
        ]:
            res = body_search(spec, resolution=60)
            pair = bound_delta(spec)
            assert res.min_delta == pytest.approx(pair.lower, abs=5e-3)
            assert res.max_delta == pytest.approx(pair.upper, abs=5e-3)

    def test_extremes_reproducible_from_reported_args(self):
        res = body_search(ClassSpec("M", alpha=2.0), resolution=50)
        for value, arg in [(res.min_delta, res.argmin), (res.max_delta, res.argmax)]:
            again = body_delta(
                res.spec, arg["m1"], arg["m2"], arg["phase"]
            )
            assert float(again) == pytest.approx(value, abs=1e-12)

    def test_args_stay_inside_body(self):
        spec = ClassSpec("U", lam=0.8)
        res = body_search(spec, resolution=40)
        for arg in (res.argmin, res.argmax):
            assert 0.0 <= arg["m1"] <= 1.8 + 1e-12
            assert 0.0 <= arg["m2"] <= 0.8 + 1e-9
            assert 0.0 <= arg["phase"] < 2.0 * math.pi

    def test_deterministic_and_parallel_identical(self):
        spec = ClassSpec("G", alpha=0.5)
        a = body_search(spec, resolution=40)
        b = body_search(spec, resolution=40)
        c = body_search(spec, resolution=40, parallel=True)
        for other in (b, c):
            assert a.min_delta == other.min_delta
            assert a.max_delta == other.max_delta
            assert a.argmin == other.argmin
            assert a.argmax == other.argmax

    def test_result_metadata(self):
        res = body_search(ClassSpec("U", lam=1.0), resolution=30)
        assert isinstance(res, SearchResult)
        assert res.refined
        assert res.resolution == 30
        assert res.note == BODY_NOTE
        assert res.as_dict()["note"] == BODY_NOTE
        assert res.as_dict()["class"] == "U(1)"

    def test_resolution_validated(self):
        with pytest.raises(ValueError, match="resolution"):
            body_search(ClassSpec("S"), resolution=1)

    def test_phase_grid_doubling_barely_moves_extremes(self):
        # Only the relative phase enters delta, so refining the phase grid
        # past the default density changes the extremes at second order.
        spec = ClassSpec("M", alpha=1.0)
        m1 = np.linspace(0.0, 1.0, 21)[:, None, None]
        m2 = (np.linspace(0.0, 1.0, 21)[None, :, None]) * (1.0 - m1 * m1)
        coarse = body_delta(spec, m1, m2, np.linspace(0, 2 * math.pi, 200, endpoint=False))
        fine = body_delta(spec, m1, m2, np.linspace(0, 2 * math.pi, 400, endpoint=False))
        assert abs(coarse.min() - fine.min()) < 1e-4
        assert abs(coarse.max() - fine.max()) < 1e-4


class TestFamilySweep:
    def test_f3_attains_upper_bound_curve(self):
        rows = family_sweep("f3", [0.2, 0.5, 1.0])
        for row in rows:
            assert isinstance(row, SweepRow)
            assert row.delta_min == pytest.approx(row.param / 2.0, abs=1e-15)
            assert row.delta_max == pytest.approx(row.param / 2.0, abs=1e-15)

    def test_f3_rotation_spread_is_zero(self):
        rows = family_sweep("f3", [0.7], theta_grid=(0.0, 1.0, 2.5))
        assert rows[0].delta_max - rows[0].delta_min < 1e-12

    def test_f4_attains_lower_bound_curve(self):
        for row in family_sweep("f4", [0.5, 0.75, 1.0]):
            assert row.delta_min == pytest.approx(
                -math.sqrt(2.0 * row.param) / 2.0, abs=1e-12
            )

    def test_f5_attains_lower_bound_curve(self):
        for row in family_sweep("f5", [0.1, 0.3, 0.5]):
            assert row.delta_min == pytest.approx(
                -(2.0 * row.param + 1.0) / 4.0, abs=1e-12
            )

    def test_koebe_sweep_is_constant(self):
        for row in family_sweep("koebe", [0.0, 1.0, 2.5]):
            assert row.delta_min == pytest.approx(-0.5, abs=1e-12)
            assert row.delta_max == pytest.approx(-0.5, abs=1e-12)

    def test_k_family_theta_invariant(self):
        rows = family_sweep("k_theta_alpha", [0.0, 1.0], theta_grid=(0.0, 1.3), order=64)
        for row in rows:
            assert row.delta_max - row.delta_min < 1e-12
        assert rows[0].delta_min == pytest.approx(-0.5, abs=1e-12)
        assert rows[1].delta_min == pytest.approx(-0.25, abs=1e-12)

    def test_m_upper_family_attains_bound(self):
        for row in family_sweep("m_alpha_upper", [0.0, 0.5, 2.0], order=64):
            assert row.delta_max == pytest.approx(
                0.5 / (1.0 + 2.0 * row.param), abs=1e-9
            )

    def test_g_upper_family_attains_bound(self):
        for row in family_sweep("g_alpha_upper", [0.25, 1.0], order=64):
            assert row.delta_max == pytest.approx(row.param / 12.0, abs=1e-9)

    def test_not_sweepable(self):
        with pytest.raises(ValueError, match="not sweepable"):
            family_sweep("g_quadratic", [0.0])
        with pytest.raises(ValueError, match="not sweepable"):
            family_sweep("nope", [0.0])

    def test_sweepable_tables_consistent(self):
        assert set(BOUND_CLASS) <= set(SWEEPABLE)
        assert set(SWEEPABLE.values()) == {"theta", "lam", "alpha"}
        assert set(BOUND_CLASS.values()) == {"U", "M", "G"}


class TestViolationScan:
    def test_u_scan_clean_and_frozen(self):
        res = bound_violation_scan(ClassSpec("U", lam=1.0), samples=100_000, seed=0)
        assert isinstance(res, ScanResult)
        assert res.violations == 0
        assert res.passed
        # Frozen values for the fixed generator stream.
        assert res.min_delta == pytest.approx(-0.6907675765, abs=1e-6)
        assert res.max_delta == pytest.approx(0.4983413813, abs=1e-6)

    def test_scan_respects_bounds_with_tolerance(self):
        for spec in [
            ClassSpec("U", lam=0.3),
            ClassSpec("M", alpha=1.5),
            ClassSpec("G", alpha=0.6),
            ClassSpec("S"),
        ]:
            res = bound_violation_scan(spec, samples=20_000, seed=5)
            pair = bound_delta(spec)
            assert res.violations == 0
            assert res.min_delta >= pair.lower - SCAN_TOLERANCE
            assert res.max_delta <= pair.upper + SCAN_TOLERANCE

    def test_same_seed_reproduces(self):
        a = bound_violation_scan(ClassSpec("M", alpha=1.0), samples=5_000, seed=42)
        b = bound_violation_scan(ClassSpec("M", alpha=1.0), samples=5_000, seed=42)
        assert a.min_delta == b.min_delta
        assert a.max_delta == b.max_delta

    def test_different_seed_differs(self):
        a = bound_violation_scan(ClassSpec("M", alpha=1.0), samples=5_000, seed=0)
        b = bound_violation_scan(ClassSpec("M", alpha=1.0), samples=5_000, seed=1)
        assert a.min_delta != b.min_delta

    def test_as_dict(self):
        d = bound_violation_scan(ClassSpec("G", alpha=1.0), samples=1_000, seed=0).as_dict()
        assert d["class"] == "G(1)"
        assert d["samples"] == 1000
        assert d["passed"] is True

    def test_sample_count_validated(self):
        with pytest.raises(ValueError, match="samples"):
            bound_violation_scan(ClassSpec("S"), samples=0)


def test_g_quadratic_sits_strictly_inside_interval():
    # The quadratic member does not attain the G(1) lower bound; the gap
    # 4/21 - 3/16 = 1/336 is genuine.
    d = delta(g_quadratic())
    pair = bound_delta(ClassSpec("G", alpha=1.0))
    assert d == pytest.approx(-3.0 / 16.0, abs=1e-14)
    assert pair.lower < d < pair.upper
    assert d - pair.lower == pytest.approx(1.0 / 336.0, abs=1e-12)
