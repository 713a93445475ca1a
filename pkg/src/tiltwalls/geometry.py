"""Slope functions, the rho-vanishing hyperbola, the tau-vanishing curve, and
the region decomposition of the upper half plane.

Conventions.  For a character v with v0 != 0 and q_tilt(v) >= 0, the hyperbola
Theta_v = {rho_v = 0} satisfies (beta - mu)^2 - a = q_tilt(v) / v0^2 and splits
the half plane into R^- (rho > 0, beta < mu), R^0 (rho < 0, plus the left
branch), and R^+ (rho >= 0, beta > mu).  The curve Gamma_{v,s} = {tau_{v,s}=0}
is a graph a(beta) away from the vertical line beta = mu and has at most three
branches, labeled by the region that contains them.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction

from .chern import (ChernCharacter, HalfPlanePoint, SPoint, ch_beta, delta,
                    q_quartic, q_tilt)
from .exactpoly import (IsolatedRoot, RationalPoly, poly_gcd, real_roots,
                        sign, sign_at_root, exact_sqrt)

INFINITY = math.inf


class Region(enum.Enum):
    R_MINUS = "R-"
    R_ZERO_PLUS = "R0+"
    R_ZERO_MINUS = "R0-"
    R_PLUS = "R+"
    ON_THETA_LEFT = "Theta-"
    ON_THETA_RIGHT = "Theta+"
    ON_MU = "Mu"


class GammaBranch(enum.Enum):
    MINUS = "minus"
    ZERO = "zero"
    PLUS = "plus"


class ThetaBranch(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


def mu(v: ChernCharacter) -> Fraction:
    return v.mu()


def rho(v: ChernCharacter, p: HalfPlanePoint) -> Fraction:
    """rho_v(beta, a) = v2 - v1 beta + v0 (beta^2 - a) / 2."""
    return v.v2 - v.v1 * p.beta + v.v0 * (p.beta**2 - p.a) / 2


def tau(v: ChernCharacter, sp: SPoint) -> Fraction:
    """tau_{v,s}(beta, a) = ch3^beta(v) - (s + 1/6) a ch1^beta(v)."""
    p = sp.point
    return (ch_beta(3, v, p.beta)
            - (sp.s + Fraction(1, 6)) * p.a * ch_beta(1, v, p.beta))


def nu_slope(v: ChernCharacter, p: HalfPlanePoint):
    """rho / ch1^beta, or +infinity on the vanishing denominator."""
    den = ch_beta(1, v, p.beta)
    if den == 0:
        return INFINITY
    return rho(v, p) / den


def lambda_slope(v: ChernCharacter, sp: SPoint):
    """tau / rho, or +infinity on the rho-vanishing hyperbola."""
    den = rho(v, sp.point)
    if den == 0:
        return INFINITY
    return tau(v, sp) / den


def region_of(v: ChernCharacter, p: HalfPlanePoint) -> Region:
    """Exact region tag of a point; the left hyperbola branch belongs to R^0,
    the right one to R^+, and the vertical line beta = mu to R^{0-}'s closure.
    """
    if v.v0 == 0 or q_tilt(v) < 0:
        raise ValueError("region decomposition undefined")
    r = rho(v, p)
    m = v.mu()
    if p.beta == m:
        return Region.ON_MU
    if r == 0:
        return Region.ON_THETA_LEFT if p.beta < m else Region.ON_THETA_RIGHT
    if r > 0:
        return Region.R_MINUS if p.beta < m else Region.R_PLUS
    return Region.R_ZERO_PLUS if p.beta < m else Region.R_ZERO_MINUS


# ---------------------------------------------------------------------------
# polynomial builders (beta is the variable; a enters as a fixed rational or
# as a RationalPoly in beta for substitutions onto other curves)
# ---------------------------------------------------------------------------

def ch_beta_poly(i: int, v: ChernCharacter) -> RationalPoly:
    """ch_i^beta(v) as a polynomial in beta."""
    if i == 0:
        return RationalPoly([v.v0])
    if i == 1:
        return RationalPoly([v.v1, -v.v0])
    if i == 2:
        return RationalPoly([v.v2, -v.v1, v.v0 / 2])
    if i == 3:
        return RationalPoly([v.v3, -v.v2, v.v1 / 2, -v.v0 / 6])
    raise IndexError("twisted component index must lie in 0..3")


def rho_poly(v: ChernCharacter, a_poly: RationalPoly) -> RationalPoly:
    return ch_beta_poly(2, v) - a_poly * Fraction(v.v0, 2)


def tau_poly(v: ChernCharacter, s, a_poly: RationalPoly) -> RationalPoly:
    s = Fraction(s)
    return ch_beta_poly(3, v) - (s + Fraction(1, 6)) * a_poly * ch_beta_poly(1, v)


def theta_alpha_sq(v: ChernCharacter, beta) -> Fraction:
    """a-coordinate of the hyperbola over beta: (beta - mu)^2 - q_tilt / v0^2."""
    b = Fraction(beta)
    return (b - v.mu()) ** 2 - q_tilt(v) / v.v0**2


def theta_a_poly(v: ChernCharacter) -> RationalPoly:
    m = v.mu()
    c = q_tilt(v) / v.v0**2
    return RationalPoly([m * m - c, -2 * m, 1])


def gamma_beta_poly(v: ChernCharacter, s, a) -> RationalPoly:
    """The cubic (in beta) cutting Gamma_{v,s} at height a = alpha^2:

        v0 b^3 - 3 v1 b^2 + (6 v2 - (6s+1) v0 a) b + ((6s+1) v1 a - 6 v3).
    """
    s, a = Fraction(s), Fraction(a)
    k = 6 * s + 1
    return RationalPoly([k * v.v1 * a - 6 * v.v3,
                         6 * v.v2 - k * v.v0 * a,
                         -3 * v.v1,
                         v.v0])


def gamma_alpha_sq(v: ChernCharacter, s, beta) -> Fraction | None:
    """Unique a with (beta, a) on Gamma_{v,s}: ch3^beta / ((s + 1/6) ch1^beta).

    None when that value is negative (no real alpha); error on the vertical
    line where the parametrization degenerates.
    """
    s, b = Fraction(s), Fraction(beta)
    den = ch_beta(1, v, b)
    if den == 0:
        raise ZeroDivisionError("parametrization undefined on the mu line")
    val = ch_beta(3, v, b) / ((s + Fraction(1, 6)) * den)
    return val if val >= 0 else None


def gamma_discriminant(v: ChernCharacter, s, a) -> Fraction:
    """Discriminant-sign invariant q_alpha of the Gamma cubic:

        A^3 v0^4 + 9 A^2 v0^2 Q + 27 A Q^2 + 27 q(v),   A = (6s+1) a,

    with Q = q_tilt(v) and q the quartic form.  Positive, zero, negative match
    three / repeated / one real root of gamma_beta_poly; the exact cubic
    discriminant equals 4 * q_alpha.
    """
    if v.v0 == 0:
        raise ValueError("requires nonzero rank")
    s, a = Fraction(s), Fraction(a)
    aa = (6 * s + 1) * a
    q = q_tilt(v)
    return (aa**3 * v.v0**4 + 9 * aa**2 * v.v0**2 * q + 27 * aa * q**2
            + 27 * q_quartic(v))


def left_cap_inequality(v: ChernCharacter) -> bool:
    """v0^2 v3 > v0 v1 v2 - v1^3 / 3, deciding (for q(v) < 0) whether the
    tau-curve meets the left hyperbola branch."""
    return v.v0**2 * v.v3 > v.v0 * v.v1 * v.v2 - v.v1**3 / 3


def gamma_theta_intersections(v: ChernCharacter, s) -> list[tuple[ThetaBranch, IsolatedRoot]]:
    """Solve rho = tau = 0: substitute the hyperbola height into tau and
    isolate the beta roots with positive a, labeling the branch by the side
    of the vertical line beta = mu."""
    if v.v0 == 0 or q_tilt(v) < 0:
        raise ValueError("hyperbola undefined")
    s = Fraction(s)
    a_theta = theta_a_poly(v)
    p = tau_poly(v, s, a_theta) * 6  # clear the 1/6 denominators
    if p.is_zero:
        return []
    m = v.mu()
    out: list[tuple[ThetaBranch, IsolatedRoot]] = []
    for root in real_roots(p):
        a_sign = sign_at_root(a_theta, root, p)
        if a_sign <= 0:
            continue
        side = sign_at_root(RationalPoly([-m, 1]), root, p)
        if side == 0:
            continue  # beta = mu forces a <= 0 on the hyperbola
        branch = ThetaBranch.LEFT if side < 0 else ThetaBranch.RIGHT
        out.append((branch, root))
    return out


def lambda_bar_numerator(u: ChernCharacter, v: ChernCharacter) -> RationalPoly:
    """Numerator cubic of the restricted slope of u along Gamma_{v,s}:

        d01 b^3 - 3 d02 b^2 + 3 (d03 + d12) b - 3 d13,

    with d_ij = delta_ij(u, v), destabilizer first.  Its real roots are the
    beta-coordinates of the wall's Gamma crossings, independent of s.
    """
    d01 = delta(0, 1, u, v)
    d02 = delta(0, 2, u, v)
    d03 = delta(0, 3, u, v)
    d12 = delta(1, 2, u, v)
    d13 = delta(1, 3, u, v)
    return RationalPoly([-3 * d13, 3 * (d03 + d12), -3 * d02, d01])


def gamma_branch_of_point(v: ChernCharacter, p: HalfPlanePoint) -> GammaBranch:
    """Branch tag for a point of Gamma_{v,s}: the region containing it."""
    reg = region_of(v, p)
    if reg == Region.R_MINUS:
        return GammaBranch.MINUS
    if reg == Region.R_PLUS:
        return GammaBranch.PLUS
    return GammaBranch.ZERO


def gamma_branches_at_height(v: ChernCharacter, s, a) -> list[tuple[GammaBranch, IsolatedRoot]]:
    """Roots of the Gamma cubic at height a, labeled minus/zero/plus.

    Above the three-root threshold the sorted roots are labeled in order;
    with fewer roots each is labeled by the sign of rho and of beta - mu at
    the root (continuity fallback, since branch merging is not labeled by the
    asymptotics alone).
    """
    poly = gamma_beta_poly(v, s, a)
    if poly.is_zero:
        return []
    roots = real_roots(poly)
    if len(roots) == 3 and v.v0 != 0:
        order = [GammaBranch.MINUS, GammaBranch.ZERO, GammaBranch.PLUS]
        if v.v0 < 0:
            order.reverse()
        return list(zip(order, roots))
    out = []
    m = v.mu() if v.v0 != 0 else None
    rp = rho_poly(v, RationalPoly([Fraction(a)]))
    for root in roots:
        rs = sign_at_root(rp, root, poly)
        if rs > 0 and m is not None:
            side = sign_at_root(RationalPoly([-m, 1]), root, poly)
            out.append((GammaBranch.MINUS if side < 0 else GammaBranch.PLUS, root))
        else:
            out.append((GammaBranch.ZERO, root))
    return out


def sample_gamma(v: ChernCharacter, s, beta_min, beta_max, step,
                 a_max=None) -> list[dict]:
    """Sample Gamma_{v,s} as a graph over beta.

    Returns rows {beta, a, branch, exact} with a = alpha^2 exact and ``exact``
    flagging rational alpha.  Points on the vertical line beta = mu are
    skipped (the parametrization has a pole there).
    """
    s = Fraction(s)
    b = Fraction(beta_min)
    hi, h = Fraction(beta_max), Fraction(step)
    amax = Fraction(a_max) if a_max is not None else None
    rows = []
    while b <= hi:
        if v.v0 == 0 or b != v.mu():
            try:
                a = gamma_alpha_sq(v, s, b)
            except ZeroDivisionError:
                a = None
            if a is not None and a > 0 and (amax is None or a <= amax):
                point = HalfPlanePoint(b, a)
                branch = (gamma_branch_of_point(v, point)
                          if v.v0 != 0 and q_tilt(v) >= 0 else GammaBranch.ZERO)
                rows.append({"beta": b, "a": a, "branch": branch,
                             "exact": exact_sqrt(a) is not None})
        b += h
    return rows


def sample_theta(v: ChernCharacter, beta_min, beta_max, step,
                 a_max=None) -> list[dict]:
    """Sample the hyperbola branches as graphs over beta (rows like sample_gamma)."""
    if v.v0 == 0:
        raise ValueError("hyperbola undefined for rank 0")
    b = Fraction(beta_min)
    hi, h = Fraction(beta_max), Fraction(step)
    amax = Fraction(a_max) if a_max is not None else None
    m = v.mu()
    rows = []
    while b <= hi:
        a = theta_alpha_sq(v, b)
        if a > 0 and (amax is None or a <= amax):
            branch = ThetaBranch.LEFT if b < m else ThetaBranch.RIGHT
            rows.append({"beta": b, "a": a, "branch": branch,
                         "exact": exact_sqrt(a) is not None})
        b += h
    return rows
