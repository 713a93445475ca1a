import math
import random
from fractions import Fraction

import pytest

from tiltwalls.chern import ChernCharacter, HalfPlanePoint, SPoint, q_tilt
from tiltwalls.exactpoly import (RationalPoly, cubic_discriminant, real_roots,
                                 refine)
from tiltwalls.geometry import (INFINITY, GammaBranch, Region, ThetaBranch,
                                gamma_alpha_sq, gamma_beta_poly,
                                gamma_branches_at_height, gamma_discriminant,
                                gamma_theta_intersections, lambda_bar_numerator,
                                lambda_slope, left_cap_inequality, nu_slope,
                                region_of, rho, sample_gamma, tau,
                                theta_a_poly, theta_alpha_sq, tau_poly)

F = Fraction


def C(*vals):
    return ChernCharacter(*[F(x) for x in vals])


IDEAL_LINE = C(1, 0, -1, 1)
IDEAL_POINT = C(1, 0, 0, -1)
O_MINUS_1 = C(1, -1, F(1, 2), F(-1, 6))
NULL_CORR = C(2, 0, -1, 0)
TANGENT = C(3, 4, 2, F(2, 3))


class TestSlopes:
    def test_rho_on_hyperbola(self):
        assert rho(IDEAL_LINE, HalfPlanePoint(F(-3, 2), F(1, 4))) == 0

    def test_rho_null_correlation(self):
        assert rho(NULL_CORR, HalfPlanePoint(F(-2), F(1, 3))) == F(8, 3)

    def test_rho_rank_zero(self):
        p = HalfPlanePoint(F(7, 3), F(2, 5))
        assert rho(C(0, 0, 5, -1), p) == 5

    def test_tau_on_curve_for_each_s(self):
        for s in (F(1, 6), F(1, 3), F(1)):
            p = HalfPlanePoint(F(-2), F(1, 6 * s + 1))
            assert tau(IDEAL_LINE, SPoint(p, s)) == 0

    def test_tau_vertical_axis_family(self):
        for m, n in [(1, 1), (2, 3), (5, 2)]:
            v = C(m, 0, -n, 0)
            for a in (F(0), F(1, 2), F(3)):
                assert tau(v, SPoint(HalfPlanePoint(F(0), a), F(2, 5))) == 0

    def test_tau_at_origin(self):
        v = C(4, -3, 2, F(7, 6))
        assert tau(v, SPoint(HalfPlanePoint(F(0), F(0)), F(9, 2))) == v.v3

    def test_nu_slope_values(self):
        assert nu_slope(O_MINUS_1, HalfPlanePoint(F(-3, 2), F(1, 4))) == 0
        assert nu_slope(C(0, 0, 1, 0), HalfPlanePoint(F(1), F(2))) == INFINITY
        assert nu_slope(C(1, 0, 0, 0), HalfPlanePoint(F(-1), F(1))) == 0

    def test_lambda_slope_values(self):
        sp = SPoint(HalfPlanePoint(F(-2), F(1, 3)), F(1, 3))
        assert lambda_slope(IDEAL_LINE, sp) == 0
        on_theta = SPoint(HalfPlanePoint(F(-3, 2), F(1, 4)), F(1, 3))
        assert lambda_slope(IDEAL_LINE, on_theta) == INFINITY
        # point class: rho vanishes identically, slope is infinite
        assert lambda_slope(C(0, 0, 0, 1), sp) == INFINITY

    def test_infinity_orders_above_rationals(self):
        assert INFINITY > F(10**12)
        assert F(-5) < INFINITY


class TestRegions:
    def test_examples(self):
        assert region_of(IDEAL_LINE, HalfPlanePoint(F(-3), F(1))) == Region.R_MINUS
        assert region_of(IDEAL_LINE, HalfPlanePoint(F(0), F(1))) == Region.ON_MU
        assert region_of(IDEAL_LINE, HalfPlanePoint(F(-3, 2), F(1, 4))) == Region.ON_THETA_LEFT

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError, match="region"):
            region_of(C(0, 1, 0, 0), HalfPlanePoint(F(0), F(1)))
        with pytest.raises(ValueError, match="region"):
            region_of(C(1, 0, 1, 0), HalfPlanePoint(F(0), F(1)))

    def test_partition_and_signs(self):
        rng = random.Random(37)
        v = C(2, -1, F(-5, 2), 0)
        for _ in range(1000):
            p = HalfPlanePoint(F(rng.randint(-40, 40), rng.randint(1, 5)),
                               F(rng.randint(0, 60), rng.randint(1, 5)))
            tag = region_of(v, p)
            r, m = rho(v, p), v.mu()
            if tag == Region.R_MINUS:
                assert r > 0 and p.beta < m
            elif tag == Region.R_PLUS:
                assert r > 0 and p.beta > m
            elif tag == Region.ON_MU:
                assert p.beta == m
            elif tag in (Region.ON_THETA_LEFT, Region.ON_THETA_RIGHT):
                assert r == 0
            else:
                assert r < 0

    def test_theta_membership_equation(self):
        rng = random.Random(41)
        for _ in range(200):
            v = C(rng.choice([1, 2, 3, -2]), rng.randint(-4, 4),
                  F(rng.randint(-8, 8), 2), 0)
            if v.v0 == 0 or q_tilt(v) < 0:
                continue
            p = HalfPlanePoint(F(rng.randint(-10, 10), 3), F(rng.randint(0, 10), 3))
            lhs = (p.beta - v.mu()) ** 2 - p.a
            assert (rho(v, p) == 0) == (lhs == q_tilt(v) / v.v0**2)


class TestGammaCurve:
    def test_family_with_axis_branch(self):
        for m, n in [(1, 1), (3, 2)]:
            v = C(m, 0, -n, 0)
            s, a = F(1, 2), F(1, 3)
            poly = gamma_beta_poly(v, s, a)
            roots = real_roots(poly)
            assert len(roots) == 3
            assert any(r.is_exact and r.lo == 0 for r in roots)
            target = (6 * s + 1) * a + F(6 * n, m)
            for r in roots:
                if not (r.is_exact and r.lo == 0):
                    sq = RationalPoly([-target, 0, 1])
                    assert sq(r.lo) * sq(r.hi) <= 0 or (r.is_exact and sq(r.lo) == 0)

    def test_point_on_curve_is_root(self):
        poly = gamma_beta_poly(IDEAL_LINE, F(1, 3), F(1, 3))
        assert poly(F(-2)) == 0

    def test_axis_section(self):
        poly = gamma_beta_poly(IDEAL_POINT, F(5, 7), F(0))
        assert poly == RationalPoly([6, 0, 0, 1])  # beta^3 + 6

    def test_alpha_sq_values(self):
        assert gamma_alpha_sq(IDEAL_LINE, F(1, 3), F(-2)) == F(1, 3)
        assert gamma_alpha_sq(IDEAL_POINT, F(1, 3), F(-2)) == F(1, 3)
        # hand substitution: ch3^(-1) = 1/6, ch1^(-1) = 1, so a = (1/6)/(1/2)
        assert gamma_alpha_sq(IDEAL_LINE, F(1, 3), F(-1)) == F(1, 3)

    def test_alpha_sq_none_when_negative(self):
        assert gamma_alpha_sq(IDEAL_LINE, F(1, 3), F(2)) is None

    def test_alpha_sq_pole(self):
        with pytest.raises(ZeroDivisionError):
            gamma_alpha_sq(IDEAL_LINE, F(1, 3), F(0))

    def test_parametrization_consistency(self):
        rng = random.Random(43)
        for _ in range(200):
            v = C(rng.randint(1, 4), rng.randint(-4, 4),
                  F(rng.randint(-8, 8), 2), F(rng.randint(-12, 12), 6))
            s = F(rng.randint(0, 9), rng.randint(1, 3))
            b = F(rng.randint(-9, 9), rng.randint(1, 4))
            try:
                a = gamma_alpha_sq(v, s, b)
            except ZeroDivisionError:
                continue
            if a is None or a == 0:
                continue
            assert tau(v, SPoint(HalfPlanePoint(b, a), s)) == 0


class TestGammaDiscriminant:
    def test_axis_values(self):
        assert gamma_discriminant(IDEAL_LINE, F(1, 3), 0) == -27
        assert gamma_discriminant(NULL_CORR, F(1, 3), 0) == 27 * 16

    def test_equals_quarter_cubic_discriminant(self):
        rng = random.Random(47)
        for _ in range(150):
            v = C(rng.choice([1, 2, 3]), rng.randint(-4, 4),
                  F(rng.randint(-8, 8), 2), F(rng.randint(-12, 12), 6))
            s = F(rng.randint(0, 8), rng.randint(1, 4))
            a = F(rng.randint(0, 10), rng.randint(1, 4))
            poly = gamma_beta_poly(v, s, a)
            assert cubic_discriminant(poly) == 4 * gamma_discriminant(v, s, a)

    def test_sign_matches_root_count(self):
        rng = random.Random(53)
        for _ in range(120):
            v = C(rng.choice([1, 2, 3]), rng.randint(-3, 3),
                  F(rng.randint(-6, 6), 2), F(rng.randint(-6, 6), 6))
            s = F(rng.randint(0, 4), rng.randint(1, 3))
            a = F(rng.randint(0, 8), rng.randint(1, 3))
            disc = gamma_discriminant(v, s, a)
            n = len(real_roots(gamma_beta_poly(v, s, a)))
            if disc > 0:
                assert n == 3
            elif disc < 0:
                assert n == 1

    def test_sign_changes_at_most_once_as_a_grows(self):
        v = IDEAL_LINE
        s = F(1, 3)
        signs = []
        for k in range(0, 40):
            d = gamma_discriminant(v, s, F(k, 4))
            signs.append(1 if d > 0 else (-1 if d < 0 else 0))
        flips = sum(1 for x, y in zip(signs, signs[1:]) if x != y and 0 not in (x, y))
        assert flips <= 1


class TestGammaThetaIntersections:
    def test_ideal_line_single_left_crossing(self):
        res = gamma_theta_intersections(IDEAL_LINE, F(1, 3))
        assert len(res) == 1
        branch, root = res[0]
        assert branch == ThetaBranch.LEFT
        cubic = RationalPoly([3, 0, 0, 1])  # beta^3 + 3
        rr = refine(root, tau_poly(IDEAL_LINE, F(1, 3), theta_a_poly(IDEAL_LINE)) * 6,
                    F(1, 10**10))
        assert abs(cubic(rr.mid)) < F(1, 10**6)

    def test_tangent_bundle_crossing_location(self):
        res = gamma_theta_intersections(TANGENT, F(1, 3))
        left = [r for b, r in res if b == ThetaBranch.LEFT]
        assert len(left) == 1
        p6 = tau_poly(TANGENT, F(1, 3), theta_a_poly(TANGENT)) * 6
        rr = refine(left[0], p6, F(1, 10**12))
        beta = float(rr.mid)
        alpha = math.sqrt(float(theta_a_poly(TANGENT)(rr.mid)))
        assert abs(beta - 0.62) < 0.01
        assert abs(alpha - 0.27) < 0.01

    def test_null_correlation_no_left_crossing(self):
        res = gamma_theta_intersections(NULL_CORR, F(1, 3))
        assert [b for b, _ in res if b == ThetaBranch.LEFT] == []

    def test_left_cap_inequality_consistency(self):
        from tiltwalls.chern import q_quartic
        for v in (IDEAL_LINE, TANGENT, IDEAL_POINT, C(2, 0, -1, 1)):
            if q_quartic(v) < 0:
                has_left = any(b == ThetaBranch.LEFT
                               for b, _ in gamma_theta_intersections(v, F(1, 3)))
                assert has_left == left_cap_inequality(v)


class TestLambdaBarNumerator:
    def test_ideal_line_cubic(self):
        poly = lambda_bar_numerator(O_MINUS_1, IDEAL_LINE)
        assert poly == RationalPoly([3, F(13, 2), F(9, 2), 1])
        roots = real_roots(poly)
        assert [r.lo for r in roots] == [F(-2), F(-3, 2), F(-1)]
        assert all(r.is_exact for r in roots)

    def test_proportional_gives_zero(self):
        assert lambda_bar_numerator(IDEAL_LINE, IDEAL_LINE.scale(3)).is_zero

    def test_unbounded_pair_degree_drops(self):
        poly = lambda_bar_numerator(IDEAL_LINE, NULL_CORR)
        assert poly.degree <= 2

    def test_beta_roots_independent_of_s(self):
        # the numerator does not involve s at all; check crossings stay put by
        # verifying tau of both characters vanishes at the same beta for all s
        for s in (F(1, 6), F(1, 3), F(1), F(5, 2)):
            a = gamma_alpha_sq(IDEAL_LINE, s, F(-2))
            assert a is not None
            sp = SPoint(HalfPlanePoint(F(-2), a), s)
            assert tau(IDEAL_LINE, sp) == 0
            assert tau(O_MINUS_1, sp) == 0


class TestBranchLabels:
    def test_three_root_labels(self):
        v = C(2, 0, -3, 0)
        labels = gamma_branches_at_height(v, F(1, 3), F(4))
        assert [b for b, _ in labels] == [GammaBranch.MINUS, GammaBranch.ZERO,
                                          GammaBranch.PLUS]

    def test_single_root_fallback(self):
        # below the three-root threshold (the discriminant is negative there)
        assert gamma_discriminant(IDEAL_LINE, F(1, 3), F(1, 20)) < 0
        labels = gamma_branches_at_height(IDEAL_LINE, F(1, 3), F(1, 20))
        assert len(labels) == 1
        # the minus and zero branches have merged below the threshold; the
        # survivor sits right of the hyperbola's right branch
        assert labels[0][0] == GammaBranch.PLUS

    def test_sampling_rows(self):
        rows = sample_gamma(IDEAL_LINE, F(1, 3), F(-4), F(-1), F(1, 4))
        assert rows, "expected sampled points on the curve"
        for row in rows:
            assert row["a"] > 0
            sp = SPoint(HalfPlanePoint(row["beta"], row["a"]), F(1, 3))
            assert tau(IDEAL_LINE, sp) == 0
        exact = [r for r in rows if r["exact"]]
        # beta = -2 gives a = 1/3: irrational alpha; beta = -7/4 etc. vary
        assert {r["branch"] for r in rows} <= {GammaBranch.MINUS, GammaBranch.ZERO}
        assert isinstance(exact, list)
