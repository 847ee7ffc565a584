from fractions import Fraction

import pytest

from leapers.estimators import (
    Normalizer,
    UnreachableCellError,
    empirical_cdf,
    empirical_velocity,
    khovanskii_fit,
    small_box_constant,
    relative_velocity,
    residual_report,
)
from leapers.formulas import RatioCdf, king_mean_distance, knight_velocity
from leapers.pieces import king, knight, taxicab
from leapers.reach import compute_field, shells


class TestEmpiricalVelocity:
    def test_king_punctured_mean_is_exact(self):
        for h in (1, 2, 3, 7, 20):
            est = empirical_velocity(king(), h, Normalizer.PUNCTURED)
            assert est.mean_distance == king_mean_distance(h)

    def test_king_box_velocity_closed_form(self):
        # box mean includes the origin, so the velocity is (2h+1)/(2h+2)
        for h in (5, 50):
            est = empirical_velocity(king(), h, Normalizer.BOX)
            assert est.velocity_exact == Fraction(2 * h + 1, 2 * h + 2)

    def test_king_velocity_tends_to_one(self, king_1000):
        field, _ = king_1000
        v100 = empirical_velocity(king(), 100, Normalizer.BOX, field=field)
        v1000 = empirical_velocity(king(), 1000, Normalizer.BOX, field=field)
        assert abs(v1000.velocity_exact - 1) < abs(v100.velocity_exact - 1)
        assert abs(v1000.velocity - 1.0) < 1e-3

    def test_normalizer_gap_shrinks(self, king_1000):
        field, _ = king_1000
        def gap(h):
            vb = empirical_velocity(king(), h, Normalizer.BOX, field=field).velocity_exact
            vp = empirical_velocity(king(), h, Normalizer.PUNCTURED, field=field).velocity_exact
            return abs(vb - vp)
        assert gap(1000) < gap(100)

    def test_knight_velocity_near_limit(self, knight12_1000):
        field, _ = knight12_1000
        est = empirical_velocity(knight(1, 2), 200, field=field)
        assert abs(est.velocity_exact - knight_velocity(1, 2)) < Fraction(3, 100)

    def test_unreachable_square_is_an_error(self):
        with pytest.raises(UnreachableCellError):
            empirical_velocity(knight(1, 3), 3)

    def test_field_reuse_validation(self):
        field = compute_field(taxicab(), 4)
        with pytest.raises(ValueError):
            empirical_velocity(king(), 3, field=field)
        with pytest.raises(ValueError):
            empirical_velocity(taxicab(), 5, field=field)


class TestRelativeVelocity:
    def test_king_reference_equals_box_estimate(self):
        dec = shells(king(), 30)
        field = compute_field(knight(1, 2), 30)
        for h in (1, 7, 30):
            rel = relative_velocity(king(), knight(1, 2), h,
                                    reference_decomposition=dec, target_field=field)
            box = empirical_velocity(knight(1, 2), h, Normalizer.BOX, field=field)
            assert rel.mean_distance == box.mean_distance
            assert rel.velocity == box.velocity
            assert rel.region_size == (2 * h + 1) ** 2

    def test_self_velocity_tends_to_one(self):
        r50 = relative_velocity(king(), king(), 50)
        r100 = relative_velocity(king(), king(), 100)
        assert abs(r100.velocity_exact - 1) < abs(r50.velocity_exact - 1)
        assert abs(r100.velocity - 1.0) < 0.01

    def test_taxicab_reference_reports_a_number(self):
        # no closed form asserted for this one, only that it is measurable
        r = relative_velocity(taxicab(), knight(1, 2), 60)
        assert r.region_size == 2 * 60 * 60 + 2 * 60 + 1
        assert 1.0 < r.velocity < 4.0

    def test_unreachable_target_square_is_an_error(self):
        with pytest.raises(UnreachableCellError):
            relative_velocity(king(), knight(1, 3), 4)

    def test_validation(self):
        dec = shells(king(), 5)
        with pytest.raises(ValueError):
            relative_velocity(taxicab(), king(), 3, reference_decomposition=dec)
        with pytest.raises(ValueError):
            relative_velocity(king(), king(), 9, reference_decomposition=dec)


class TestResidualReport:
    def test_small_box_peak(self):
        field = compute_field(knight(1, 2), 3)
        report = residual_report(1, 2, 3, field=field)
        assert report.max_abs_residual == Fraction(8, 3)
        assert tuple(map(abs, report.argmax)) == (2, 2)
        # the peak is the 4-move square two diagonal steps out
        assert field.distance((2, 2)) == 4
        assert abs(4 - Fraction(2 + 2, 1 + 2)) == Fraction(8, 3)

    def test_stable_under_box_growth(self):
        field = compute_field(knight(1, 2), 40)
        small = residual_report(1, 2, 10, field=field)
        large = residual_report(1, 2, 40, field=field)
        assert small.max_abs_residual == large.max_abs_residual == Fraction(8, 3)

    def test_rejects_nonprimitive(self):
        with pytest.raises(ValueError):
            residual_report(1, 3, 5)


class TestLemmaConstant:
    def test_standard_knight_anchor(self):
        # max move count over the radius-3 box is 4, at the diagonal corners
        assert small_box_constant(1, 2) == 2
        field = compute_field(knight(1, 2), 3)
        assert field.box(3).max() == 4
        assert field.distance((1, 0)) == 3 <= 2 * 2

    def test_other_pairs_stay_bounded(self):
        for a, b in [(2, 5), (3, 4), (4, 5)]:
            assert small_box_constant(a, b) <= 2

    def test_rejects_nonprimitive(self):
        with pytest.raises(ValueError):
            small_box_constant(2, 4)


class TestEmpiricalCdf:
    def test_sample_size_is_punctured_box(self):
        est = empirical_cdf(1, 2, 16)
        assert est.sample_size == 4 * 16 * 17

    def test_no_mass_below_lower_breakpoint(self):
        # a move changes each coordinate by at most b, so every ratio >= 1/b
        est = empirical_cdf(1, 2, 64)
        assert est.query(0.49) == 0.0
        assert est.ratios[0] >= 0.5

    def test_mass_beyond_upper_breakpoint_vanishes(self, knight12_1000):
        field, _ = knight12_1000
        t = 2 / 3 + 1e-9
        q250 = empirical_cdf(1, 2, 250, field=field).query(t)
        q1000 = empirical_cdf(1, 2, 1000, field=field).query(t)
        assert q250 > 0.97
        assert 1 - q1000 < 1 - q250

    def test_query_monotone(self):
        # ratios run up to 3 (the square one step sideways costs 3 moves)
        est = empirical_cdf(1, 2, 32)
        values = [est.query(t / 40) for t in range(121)]
        assert values == sorted(values)
        assert values[-1] == 1.0

    def test_grid_sup_gap_shrinks(self, knight12_1000):
        field, _ = knight12_1000
        closed = RatioCdf(1, 2)
        ts = [i * (2 / 3 + 0.1) / 100 for i in range(101)]
        g250 = empirical_cdf(1, 2, 250, field=field).sup_gap(closed, ts)
        g500 = empirical_cdf(1, 2, 500, field=field).sup_gap(closed, ts)
        assert g500 < g250

    def test_exact_sup_saturates_near_jump_mass(self, knight12_1000):
        # the limit law has an atom of mass a/b at t_low; finite samples put
        # about (a/b)/4 exactly on the breakpoint and spread the rest above,
        # so the exact Kolmogorov gap hovers near a/b - (a/b)/4 = 3/8 here
        field, _ = knight12_1000
        est = empirical_cdf(1, 2, 500, field=field)
        gap = est.sup_gap_exact(RatioCdf(1, 2))
        assert 0.3 < gap < 0.45

    def test_rejects_nonprimitive(self):
        with pytest.raises(ValueError):
            empirical_cdf(1, 3, 8)


class TestKhovanskiiFit:
    def test_king_is_exact(self):
        h = 40
        assert khovanskii_fit(king(), h) == (2 * h + 1) ** 2 / h**2

    def test_knight_approaches_hull_area(self):
        fit = khovanskii_fit(knight(1, 2), 60)
        assert abs(fit - 14) / 14 < 0.015

    def test_taxicab_approaches_hull_area(self):
        fit = khovanskii_fit(taxicab(), 60)
        assert abs(fit - 2) / 2 < 0.02

    def test_needs_enough_folds(self):
        with pytest.raises(ValueError):
            khovanskii_fit(king(), 10)

    def test_decomposition_reuse(self):
        dec = shells(taxicab(), 30)
        assert khovanskii_fit(taxicab(), 30, decomposition=dec) == khovanskii_fit(taxicab(), 30)
        with pytest.raises(ValueError):
            khovanskii_fit(taxicab(), 31, decomposition=dec)
