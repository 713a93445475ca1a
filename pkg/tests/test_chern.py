import random
from fractions import Fraction

import pytest

from tiltwalls.chern import (ChernCharacter, HalfPlanePoint, SPoint, big_delta,
                             ch_ab, ch_beta, delta, dualize, euler_char_p3,
                             proportional, q_full, q_quartic, q_tilt,
                             twist_beta)

F = Fraction


def C(*vals):
    return ChernCharacter(*[F(x) for x in vals])


IDEAL_LINE = C(1, 0, -1, 1)
O_MINUS_1 = C(1, -1, F(1, 2), F(-1, 6))
NULL_CORR = C(2, 0, -1, 0)
P_POINT = HalfPlanePoint(F(-2), F(1, 3))


class TestTwist:
    def test_identity_at_zero(self):
        assert twist_beta(IDEAL_LINE, 0) == IDEAL_LINE

    def test_o_minus_one_untwists_to_structure_sheaf(self):
        assert twist_beta(O_MINUS_1, -1) == C(1, 0, 0, 0)

    def test_rank_two_twist(self):
        # direct evaluation of the four component formulas at beta = -2:
        # ch3^(-2) = 0 - (-2)(-1) + 0 - ((-2)^3/6)*2 = -2 + 8/3 = 2/3
        assert twist_beta(NULL_CORR, -2) == C(2, 4, 3, F(2, 3))

    def test_involution(self):
        rng = random.Random(3)
        for _ in range(25):
            v = C(*[F(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(4)])
            b = F(rng.randint(-9, 9), rng.randint(1, 6))
            assert twist_beta(twist_beta(v, b), -b) == v

    def test_additive_in_beta(self):
        v = C(3, 4, 2, F(2, 3))
        assert twist_beta(twist_beta(v, F(1, 2)), F(1, 3)) == twist_beta(v, F(5, 6))


class TestDelta:
    def test_hand_determinants(self):
        assert delta(0, 1, O_MINUS_1, IDEAL_LINE) == 1
        assert delta(0, 2, O_MINUS_1, IDEAL_LINE) == F(-3, 2)

    def test_antisymmetry(self):
        rng = random.Random(5)
        for _ in range(20):
            u = C(*[rng.randint(-5, 5) for _ in range(4)])
            v = C(*[rng.randint(-5, 5) for _ in range(4)])
            for i in range(4):
                assert delta(i, i, u, v) == 0
                for j in range(4):
                    assert delta(i, j, u, v) == -delta(j, i, u, v)
                    assert delta(i, j, u, v) == -delta(i, j, v, u)

    def test_index_range(self):
        with pytest.raises(IndexError):
            delta(0, 4, IDEAL_LINE, NULL_CORR)


class TestBigDelta:
    def test_vanishes_at_apex_point(self):
        p = HalfPlanePoint(F(-3, 2), F(1, 4))
        assert big_delta(2, 1, O_MINUS_1, IDEAL_LINE, p) == 0

    def test_delta_10_is_constant(self):
        rng = random.Random(11)
        d10 = delta(1, 0, O_MINUS_1, IDEAL_LINE)
        assert d10 == -1
        for _ in range(10):
            p = HalfPlanePoint(F(rng.randint(-8, 8), 3), F(rng.randint(0, 9), 4))
            assert big_delta(1, 0, O_MINUS_1, IDEAL_LINE, p) == d10

    def test_equal_arguments(self):
        p = HalfPlanePoint(F(1, 2), F(1, 5))
        assert big_delta(2, 3, IDEAL_LINE, IDEAL_LINE, p) == 0


class TestQuadraticForms:
    def test_q_tilt(self):
        assert q_tilt(IDEAL_LINE) == 2
        assert q_tilt(C(0, 0, 5, 7)) == 0
        assert q_tilt(C(3, 4, 2, F(2, 3))) == 4

    def test_q_full_worked_values(self):
        assert q_full(C(2, -1, F(-1, 2), F(5, 6)), P_POINT) == 1
        assert q_full(C(0, 1, F(-1, 2), F(-5, 6)), P_POINT) == F(25, 3)
        assert q_full(NULL_CORR, P_POINT) == F(64, 3)

    def test_q_quartic_values(self):
        assert q_quartic(IDEAL_LINE) == -1
        assert q_quartic(NULL_CORR) == 16
        assert q_quartic(C(3, 4, 2, F(2, 3))) == -4

    def test_q_quartic_invariance(self):
        rng = random.Random(13)
        for _ in range(30):
            v = C(rng.randint(-4, 4), rng.randint(-4, 4),
                  F(rng.randint(-8, 8), 2), F(rng.randint(-12, 12), 6))
            assert q_quartic(dualize(v)) == q_quartic(v)
            for k in range(-5, 6):
                assert q_quartic(twist_beta(v, -k)) == q_quartic(v)


class TestEulerCharacteristic:
    def test_structure_sheaf(self):
        assert euler_char_p3(C(1, 0, 0, 0)) == 1

    def test_line_twist(self):
        assert euler_char_p3(O_MINUS_1) == 0

    def test_ideal_of_line(self):
        assert euler_char_p3(IDEAL_LINE) == 0


class TestDualize:
    def test_even_components_fixed(self):
        assert dualize(NULL_CORR) == NULL_CORR

    def test_sign_flip(self):
        assert dualize(O_MINUS_1) == C(1, 1, F(1, 2), F(1, 6))

    def test_involution(self):
        v = C(3, 4, 2, F(2, 3))
        assert dualize(dualize(v)) == v


class TestLattice:
    def test_coarse_lattice(self):
        assert IDEAL_LINE.in_coarse_lattice()
        assert C(1, 0, F(1, 2), F(1, 6)).in_coarse_lattice()
        assert not C(F(1, 2), 0, 0, 0).in_coarse_lattice()

    def test_object_class_congruences(self):
        assert IDEAL_LINE.is_object_class_p3()
        assert O_MINUS_1.is_object_class_p3()
        # half-integral ch2 with even degree: c2 not integral
        assert not C(2, 0, F(-3, 2), 1).is_object_class_p3()

    def test_flag_is_advisory(self):
        a = ChernCharacter(F(1), F(0), F(-1), F(1), lattice=True)
        assert a == IDEAL_LINE

    def test_parse_round_trip(self):
        v = ChernCharacter.parse("2,0,-1/2,1/6")
        assert str(v) == "2,0,-1/2,1/6"
        with pytest.raises(ValueError, match="position 2"):
            ChernCharacter.parse("1,2,x,4")


class TestInvariantsAndProperties:
    def test_pluecker_spot_value(self):
        u, v = O_MINUS_1, IDEAL_LINE
        p = HalfPlanePoint(F(0), F(0))
        total = (big_delta(0, 1, u, v, p) * big_delta(2, 3, u, v, p)
                 + big_delta(0, 2, u, v, p) * big_delta(3, 1, u, v, p)
                 + big_delta(1, 2, u, v, p) * big_delta(0, 3, u, v, p))
        assert total == 0

    def test_pluecker_randomized(self):
        rng = random.Random(17)
        for _ in range(1000):
            u = C(*[F(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(4)])
            v = C(*[F(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(4)])
            p = HalfPlanePoint(F(rng.randint(-12, 12), rng.randint(1, 4)),
                               F(rng.randint(0, 12), rng.randint(1, 4)))
            total = (big_delta(0, 1, u, v, p) * big_delta(2, 3, u, v, p)
                     + big_delta(0, 2, u, v, p) * big_delta(3, 1, u, v, p)
                     + big_delta(1, 2, u, v, p) * big_delta(0, 3, u, v, p))
            assert total == 0

    def test_derivative_recurrences_first_order(self):
        # finite differences of ch_i against the exact recurrence values
        rng = random.Random(19)
        steps = [F(1, 1000), F(1, 10000)]
        for _ in range(100):
            v = C(*[F(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(4)])
            beta = F(rng.randint(-8, 8), rng.randint(1, 5))
            alpha = F(rng.randint(1, 8), rng.randint(1, 5))
            p = HalfPlanePoint(beta, alpha * alpha)
            for i in range(4):
                errs_beta, errs_alpha = [], []
                for h in steps:
                    pb = HalfPlanePoint(beta + h, alpha * alpha)
                    fd = (ch_ab(i, v, pb) - ch_ab(i, v, p)) / h
                    errs_beta.append(abs(fd - (-ch_ab(i - 1, v, p))))
                    pa = HalfPlanePoint(beta, (alpha + h) ** 2)
                    fd = (ch_ab(i, v, pa) - ch_ab(i, v, p)) / h
                    errs_alpha.append(abs(fd - (-alpha * ch_ab(i - 2, v, p))))
                # first order: shrinking h by 10 shrinks the error by ~10
                assert errs_beta[1] <= errs_beta[0] / 5
                assert errs_alpha[1] <= errs_alpha[0] / 5

    def test_vanishing_propagation(self):
        # two vanishing brackets sharing an index force the third
        rng = random.Random(23)
        checked = 0
        for _ in range(4000):
            u = C(*[rng.randint(-3, 3) for _ in range(4)])
            v = C(*[rng.randint(-3, 3) for _ in range(4)])
            p = HalfPlanePoint(F(rng.randint(-4, 4), 2), F(rng.randint(0, 4), 2))
            for i, j, k in [(0, 1, 2), (1, 2, 3), (0, 2, 3)]:
                if ch_ab(i, u, p) == 0 and ch_ab(i, v, p) == 0:
                    continue
                if big_delta(i, j, u, v, p) == 0 and big_delta(i, k, u, v, p) == 0:
                    checked += 1
                    assert big_delta(j, k, u, v, p) == 0
        assert checked > 0

    def test_proportionality_detection(self):
        rng = random.Random(29)
        p = HalfPlanePoint(F(1, 2), F(1, 3))
        for _ in range(200):
            u = C(*[rng.randint(-4, 4) for _ in range(4)])
            if u.is_zero():
                continue
            k = F(rng.randint(-6, 6), rng.randint(1, 4))
            v = u.scale(k)
            all_vanish = all(big_delta(i, j, u, v, p) == 0
                             for i in range(4) for j in range(4))
            assert all_vanish
            assert proportional(u, v)

    def test_ch_out_of_range_is_zero(self):
        p = HalfPlanePoint(F(1), F(1))
        assert ch_ab(-1, IDEAL_LINE, p) == 0
        assert ch_ab(4, IDEAL_LINE, p) == 0

    def test_ch_beta_matches_twist(self):
        v = C(3, 4, 2, F(2, 3))
        b = F(-7, 3)
        tw = twist_beta(v, b)
        for i in range(4):
            assert ch_beta(i, v, b) == tw[i]
