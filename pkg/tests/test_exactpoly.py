import random
from fractions import Fraction

import pytest

from tiltwalls.exactpoly import (IsolatedRoot, RationalPoly, cubic_discriminant,
                                 count_real_roots, exact_sqrt, poly_gcd,
                                 rational_sqrt, real_roots, refine,
                                 sign_a_plus_b_sqrt, sign_at_root,
                                 squarefree_decomposition, squarefree_part)


def P(*coeffs):
    """Polynomial from descending coefficients, matching handwriting order."""
    return RationalPoly(list(reversed([Fraction(c) for c in coeffs])))


def brute_force_root_count(p, lo=-100, hi=100, steps=4000):
    """Independent oracle: sign scan on a fine grid plus bisection refinement."""
    sf = squarefree_part(p)
    count = 0
    prev = sf(Fraction(lo))
    if prev == 0:
        count += 1
        prev = None
    h = Fraction(hi - lo, steps)
    for k in range(1, steps + 1):
        x = Fraction(lo) + k * h
        cur = sf(x)
        if cur == 0:
            count += 1
            prev = None
        else:
            if prev is not None and (prev > 0) != (cur > 0):
                count += 1
            prev = cur
    return count


class TestArithmetic:
    def test_normalization(self):
        assert RationalPoly([1, 2, 0, 0]).coeffs == (1, 2)
        assert RationalPoly([0, 0]).is_zero
        assert RationalPoly().degree == -1

    def test_eval_and_ops(self):
        p = P(1, -3, 2)  # x^2 - 3x + 2
        assert p(1) == 0 and p(2) == 0 and p(0) == 2
        q = P(1, -1)
        quo, rem = p.divmod(q)
        assert rem.is_zero and quo == P(1, -2)

    def test_gcd(self):
        p = P(1, -1) * P(1, -2) * P(1, -2)
        q = P(1, -2) * P(1, -3)
        assert poly_gcd(p, q) == P(1, -2).monic()

    def test_squarefree_decomposition(self):
        p = P(1, -1) * P(1, -2) * P(1, -2)
        decomp = squarefree_decomposition(p)
        assert dict((k, q) for q, k in decomp) == {1: P(1, -1), 2: P(1, -2)}


class TestRealRoots:
    def test_cube_root_of_minus_three(self):
        roots = real_roots(P(1, 0, 0, 3))  # x^3 + 3
        assert len(roots) == 1
        r = refine(roots[0], P(1, 0, 0, 3), Fraction(1, 10**10))
        assert abs(float(r.mid) - (-1.4422495703074083)) < 1e-9

    def test_no_real_roots(self):
        assert real_roots(P(1, 0, 1)) == []

    def test_rational_roots_exact_endpoints(self):
        roots = real_roots(P(2, 9, 13, 6))  # (x+1)(x+2)(2x+3)
        assert all(r.is_exact for r in roots)
        assert [r.lo for r in roots] == [Fraction(-2), Fraction(-3, 2), Fraction(-1)]

    def test_zero_polynomial_rejected(self):
        with pytest.raises(ValueError, match="indeterminate"):
            real_roots(RationalPoly())

    def test_multiplicity_hints(self):
        p = P(1, -1) * P(1, -1) * P(1, -5)
        roots = real_roots(p)
        hints = {r.lo: r.multiplicity_hint for r in roots}
        assert hints == {Fraction(1): 2, Fraction(5): 1}

    def test_counts_match_sign_scan_oracle(self):
        rng = random.Random(20240811)
        for _ in range(60):
            deg = rng.randint(1, 6)
            coeffs = [Fraction(rng.randint(-8, 8), rng.randint(1, 4))
                      for _ in range(deg + 1)]
            if all(c == 0 for c in coeffs):
                coeffs[-1] = Fraction(1)
            p = RationalPoly(coeffs)
            if p.degree < 1:
                continue
            got = len(real_roots(p))
            assert got == brute_force_root_count(p)

    def test_product_roots_are_union(self):
        p = P(1, 0, -2)          # sqrt(2)
        q = P(3, -1) * P(1, 5)   # 1/3 and -5
        roots = real_roots(p * q)
        exact = sorted(r.lo for r in roots if r.is_exact)
        assert exact == [Fraction(-5), Fraction(1, 3)]
        assert len(roots) == 4  # +-sqrt(2) as intervals

    def test_isolating_interval_sign_change(self):
        p = P(1, 0, -7, 3)
        for r in real_roots(p):
            if not r.is_exact:
                assert (p(r.lo) > 0) != (p(r.hi) > 0)


class TestRefine:
    def test_width_reached(self):
        p = P(1, 0, -2)
        root = real_roots(p)[-1]  # the positive root
        r = refine(root, p, Fraction(1, 1000))
        assert r.hi - r.lo <= Fraction(1, 1000)
        assert r.lo <= Fraction(14142, 10000) <= r.hi or abs(float(r.mid) - 1.41421) < 1e-3

    def test_exact_root_unchanged(self):
        r = IsolatedRoot(Fraction(-2), Fraction(-2))
        assert refine(r, P(1, 2), Fraction(1, 10)) == r


class TestCubicDiscriminant:
    def test_values(self):
        assert cubic_discriminant(P(1, 0, 0, 3)) == -243
        assert cubic_discriminant(P(1, 0, -1, 0)) == 4
        assert cubic_discriminant(P(1, 0, -3, 2)) == 0  # (x-1)^2 (x+2)

    def test_sign_matches_root_count(self):
        rng = random.Random(7)
        for _ in range(40):
            p = RationalPoly([Fraction(rng.randint(-6, 6)) for _ in range(3)] + [Fraction(rng.randint(1, 5))])
            disc = cubic_discriminant(p)
            n = len(real_roots(p))
            if disc > 0:
                assert n == 3
            elif disc < 0:
                assert n == 1

    def test_requires_degree_three(self):
        with pytest.raises(ValueError):
            cubic_discriminant(P(1, 1))


class TestSignHelpers:
    def test_sign_at_root_zero_certified(self):
        p = P(1, 0, -2)  # roots +-sqrt(2)
        root = real_roots(p)[-1]  # the positive root
        assert sign_at_root(P(1, 0, -2), root, p) == 0
        assert sign_at_root(P(1, -1), root, p) == 1   # x - 1 > 0 at sqrt 2
        assert sign_at_root(P(1, -2), root, p) == -1  # x - 2 < 0

    def test_sqrt_sign(self):
        two = Fraction(2)
        assert sign_a_plus_b_sqrt(Fraction(-1), Fraction(1), two) == 1
        assert sign_a_plus_b_sqrt(Fraction(-2), Fraction(1), two) == -1
        assert sign_a_plus_b_sqrt(Fraction(3), Fraction(-2), two) == 1
        assert sign_a_plus_b_sqrt(Fraction(2), Fraction(-1), Fraction(4)) == 0

    def test_exact_and_approx_sqrt(self):
        assert exact_sqrt(Fraction(9, 4)) == Fraction(3, 2)
        assert exact_sqrt(Fraction(2)) is None
        approx = rational_sqrt(Fraction(2), Fraction(1, 10**6))
        assert abs(approx * approx - 2) < Fraction(1, 10**5)

    def test_count_real_roots_interval(self):
        p = P(1, 0, -4)  # +-2
        assert count_real_roots(p) == 2
        assert count_real_roots(p, Fraction(0), Fraction(3)) == 1
