"""Numerical walls: construction, classification, tracing, and the
differential geometry of the associated surface in (alpha, beta, s) space.

A pair of characters (u, v) defines

* the nu-wall  {Delta_21 = 0}, a semicircle when delta_01(u, v) != 0;
* the lambda-wall  {f = 0},  f = Delta_32 - a (s - 1/3) Delta_12,

with Delta_ij built from the evaluation family of chern.ch_ab and a = alpha^2.
f agrees with tau_u rho_v - tau_v rho_u and with its expansion grouped by
powers of alpha, which is quadratic in a; wall tracing exploits that to solve
each vertical section exactly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import sqrt as _fsqrt

from .chern import (ChernCharacter, HalfPlanePoint, SPoint, big_delta,
                    ch_beta, delta, proportional, q_tilt)
from .exactpoly import (IsolatedRoot, RationalPoly, poly_gcd, rational_sqrt,
                        real_roots, refine, sign, sign_a_plus_b_sqrt,
                        sign_at_root, squarefree_part)
from .geometry import (GammaBranch, Region, ch_beta_poly, gamma_alpha_sq,
                       gamma_theta_intersections, lambda_bar_numerator,
                       region_of, rho, rho_poly, tau, tau_poly, theta_a_poly)

THIRD = Fraction(1, 3)


def _deltas(u: ChernCharacter, v: ChernCharacter) -> dict[tuple[int, int], Fraction]:
    return {(i, j): delta(i, j, u, v) for i in range(4) for j in range(4)}


# ---------------------------------------------------------------------------
# nu-walls
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NuWall:
    """Semicircle (beta - center)^2 + a = radius_sq; empty when radius_sq <= 0."""
    center: Fraction
    radius_sq: Fraction

    @property
    def is_empty(self) -> bool:
        return self.radius_sq <= 0

    def apex(self) -> HalfPlanePoint:
        return HalfPlanePoint(self.center, self.radius_sq)

    def alpha_sq_at(self, beta) -> Fraction:
        return self.radius_sq - (Fraction(beta) - self.center) ** 2

    def a_poly(self) -> RationalPoly:
        c, r2 = self.center, self.radius_sq
        return RationalPoly([r2 - c * c, 2 * c, -1])

    def feet(self) -> list[IsolatedRoot]:
        """Roots of a = 0 (the endpoints on the horizontal axis)."""
        if self.is_empty:
            return []
        return real_roots(self.a_poly())


@dataclass(frozen=True)
class DegenerateNuWall:
    """delta_01 = 0: the slope-comparison locus is a vertical line (or all of
    the plane when the truncated characters are proportional)."""
    line_beta: Fraction | None
    identically_zero: bool = False


def nu_wall(u: ChernCharacter, v: ChernCharacter) -> NuWall | DegenerateNuWall:
    """The nu-wall of the pair, from Delta_21 = -d01 (b^2+a)/2 + d02 b - d12.

    For d01 != 0 this is the circle with center d02/d01 and squared radius
    center^2 - 2 d12/d01 (empty when nonpositive).
    """
    if proportional(u, v):
        raise ValueError("wall undefined for proportional characters")
    d01 = delta(0, 1, u, v)
    d02 = delta(0, 2, u, v)
    d12 = delta(1, 2, u, v)
    if d01 == 0:
        if d02 == 0:
            return DegenerateNuWall(None, identically_zero=(d12 == 0))
        return DegenerateNuWall(d12 / d02)
    center = d02 / d01
    return NuWall(center, center * center - 2 * d12 / d01)


# ---------------------------------------------------------------------------
# lambda-walls
# ---------------------------------------------------------------------------

def lambda_f(u: ChernCharacter, v: ChernCharacter, sp: SPoint) -> Fraction:
    """f(beta, a, s) = Delta_32 - a (s - 1/3) Delta_12 = tau_u rho_v - tau_v rho_u."""
    p = sp.point
    d32 = big_delta(3, 2, u, v, p)
    d12 = big_delta(1, 2, u, v, p)
    return d32 - p.a * (sp.s - THIRD) * d12


def lambda_section_in_a(u: ChernCharacter, v: ChernCharacter, s,
                        beta) -> RationalPoly:
    """The wall equation over a fixed beta, as a polynomial in a = alpha^2:

        (6s+1)/12 d10 a^2
      + ((3s-1)/6 d10 b^2 - (3s-1)/3 d20 b + (6s+1)/6 d21 - d30/2) a
      + (d10 b^4/12 - d20 b^3/3 + (d30+d21) b^2/2 - d31 b + d32).
    """
    s, b = Fraction(s), Fraction(beta)
    d = _deltas(u, v)
    d10, d20, d21 = d[1, 0], d[2, 0], d[2, 1]
    d30, d31, d32 = d[3, 0], d[3, 1], d[3, 2]
    c2 = (6 * s + 1) * d10 / 12
    c1 = ((3 * s - 1) * d10 * b * b / 6 - (3 * s - 1) * d20 * b / 3
          + (6 * s + 1) * d21 / 6 - d30 / 2)
    c0 = (d10 * b**4 / 12 - d20 * b**3 / 3 + (d30 + d21) * b * b / 2
          - d31 * b + d32)
    return RationalPoly([c0, c1, c2])


def lambda_axis_poly(u: ChernCharacter, v: ChernCharacter) -> RationalPoly:
    """f at a = 0 as a polynomial in beta (independent of s)."""
    d = _deltas(u, v)
    return RationalPoly([d[3, 2], -d[3, 1], (d[3, 0] + d[2, 1]) / 2,
                         -d[2, 0] / 3, d[1, 0] / 12])


def nu_axis_poly(u: ChernCharacter, v: ChernCharacter) -> RationalPoly:
    """Delta_21 at a = 0 as a polynomial in beta."""
    d = _deltas(u, v)
    return RationalPoly([-d[1, 2], d[0, 2], -d[0, 1] / 2])


def big_delta_32_poly(u: ChernCharacter, v: ChernCharacter,
                      a_poly: RationalPoly) -> RationalPoly:
    """Delta_32 along a = a_poly(beta), as a polynomial in beta (s = 1/3 family)."""
    def ch3(w):
        return ch_beta_poly(3, w) - a_poly * ch_beta_poly(1, w) * Fraction(1, 2)
    return (ch3(u) * rho_poly(v, a_poly) - rho_poly(u, a_poly) * ch3(v))


def delta31_poly(u: ChernCharacter, v: ChernCharacter) -> RationalPoly:
    """Delta_31 at s = 1/3 as a polynomial in beta alone (the a-terms cancel)."""
    return (ch_beta_poly(3, u) * ch_beta_poly(1, v)
            - ch_beta_poly(1, u) * ch_beta_poly(3, v))


# ---------------------------------------------------------------------------
# classification by the shift equivalence u ~ phi v + psi u
# ---------------------------------------------------------------------------

class WallKind(enum.Enum):
    BOUNDED = "bounded"
    UNBOUNDED = "unbounded"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class WallClass:
    kind: WallKind
    canonical: ChernCharacter


def classify_wall(u: ChernCharacter, v: ChernCharacter) -> WallClass:
    """Normal form of the wall of (u, v) under u -> phi v + psi u:

        d01 != 0            -> bounded,    (0, 1, d02/d01, d03/d01)
        d01 = 0 != d02      -> unbounded,  (0, 0, 1, d03/d02)
        d01 = d02 = 0 != d03 -> degenerate (the wall is the rho hyperbola).
    """
    if v.v0 == 0:
        raise ValueError("classification requires nonzero rank for v")
    if proportional(u, v):
        raise ValueError("wall undefined for proportional characters")
    d01 = delta(0, 1, u, v)
    d02 = delta(0, 2, u, v)
    d03 = delta(0, 3, u, v)
    if d01 != 0:
        return WallClass(WallKind.BOUNDED,
                         ChernCharacter(0, 1, d02 / d01, d03 / d01))
    if d02 != 0:
        return WallClass(WallKind.UNBOUNDED,
                         ChernCharacter(0, 0, 1, d03 / d02))
    if d03 != 0:
        return WallClass(WallKind.DEGENERATE, ChernCharacter(0, 0, 0, 1))
    # d01 = d02 = d03 = 0 with u not proportional to v: the remaining minors
    # live in degrees >= 1; the wall still degenerates onto the hyperbola.
    return WallClass(WallKind.DEGENERATE, ChernCharacter(0, 0, 0, 1))


def equivalent_mod_v(u: ChernCharacter, u2: ChernCharacter,
                     v: ChernCharacter) -> bool:
    """u2 = phi v + psi u for some psi != 0 (same wall for v)."""
    du = [delta(0, 1, u, v), delta(0, 2, u, v), delta(0, 3, u, v),
          delta(1, 2, u, v), delta(1, 3, u, v), delta(2, 3, u, v)]
    du2 = [delta(0, 1, u2, v), delta(0, 2, u2, v), delta(0, 3, u2, v),
           delta(1, 2, u2, v), delta(1, 3, u2, v), delta(2, 3, u2, v)]
    if all(x == 0 for x in du) or all(x == 0 for x in du2):
        return all(x == 0 for x in du) and all(x == 0 for x in du2)
    # the delta vectors must be proportional by the psi factor
    for i in range(6):
        for j in range(6):
            if du[i] * du2[j] != du[j] * du2[i]:
                return False
    return True


def unbounded_asymptote(u: ChernCharacter, v: ChernCharacter, s) -> Fraction:
    """Vertical asymptote beta' of an unbounded wall (d10 = 0 != d20, s != 1/3):

        beta' = 3 / ((6s-2) d20) * ((6s+1) d21 / 3 - d30).
    """
    s = Fraction(s)
    d10 = delta(1, 0, u, v)
    d20 = delta(2, 0, u, v)
    if d10 != 0:
        raise ValueError("asymptote defined only for unbounded walls (d10 = 0)")
    if s == THIRD or d20 == 0:
        raise ValueError("asymptote undefined")
    d21 = delta(2, 1, u, v)
    d30 = delta(3, 0, u, v)
    return 3 / ((6 * s - 2) * d20) * ((6 * s + 1) * d21 / 3 - d30)


# ---------------------------------------------------------------------------
# crossings with the tau and rho curves
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GammaCrossing:
    beta: IsolatedRoot
    a: Fraction                 # exact when beta is exact, else an approximation
    a_exact: bool
    branch: GammaBranch
    on_theta: bool = False      # the crossing sits on the rho hyperbola
    nodal: bool = False         # forced crossing at a Gamma/Theta intersection


def wall_gamma_crossings(u: ChernCharacter, v: ChernCharacter,
                         s) -> list[GammaCrossing]:
    """Crossings of the wall of (u, v) with Gamma_{v,s}.

    Away from the hyperbola these are the real roots of lambda_bar_numerator
    with positive height (the beta set does not depend on s); every wall also
    passes through any Gamma/Theta intersection, reported with nodal=True.
    """
    if proportional(u, v):
        return []
    s = Fraction(s)
    out: list[GammaCrossing] = []
    num = lambda_bar_numerator(u, v)
    a_num = ch_beta_poly(3, v)
    a_den = (s + Fraction(1, 6)) * ch_beta_poly(1, v)
    if not num.is_zero:
        # rho_v along the curve, cleared of the a-denominator
        rho_cleared = ch_beta_poly(2, v) * a_den - a_num * Fraction(v.v0, 2)
        m = v.mu() if v.v0 != 0 else None
        for root in real_roots(num):
            den_sign = sign_at_root(a_den, root, num)
            if den_sign == 0:
                continue  # pole of the parametrization
            a_sign = sign_at_root(a_num, root, num) * den_sign
            if a_sign <= 0:
                continue
            rho_sign = sign_at_root(rho_cleared, root, num) * den_sign
            if root.is_exact:
                a_val = gamma_alpha_sq(v, s, root.lo)
                assert a_val is not None
                a_exact = True
                tight = root
            else:
                tight = refine(root, num, Fraction(1, 10**12))
                a_val, a_exact = a_num(tight.mid) / a_den(tight.mid), False
            branch = GammaBranch.ZERO
            if rho_sign > 0 and m is not None:
                side = sign_at_root(RationalPoly([-m, 1]), root, num)
                branch = GammaBranch.MINUS if side < 0 else GammaBranch.PLUS
            out.append(GammaCrossing(tight, a_val, a_exact, branch,
                                     on_theta=(rho_sign == 0)))
    if v.v0 != 0 and q_tilt(v) >= 0:
        p6 = tau_poly(v, s, theta_a_poly(v)) * 6
        for tb, root in gamma_theta_intersections(v, s):
            tight = refine(root, p6, Fraction(1, 10**12))
            dup = any(not (tight.hi < c.beta.lo or c.beta.hi < tight.lo)
                      for c in out)
            if dup:
                continue
            if tight.is_exact:
                a_val, a_exact = Fraction(theta_a_poly(v)(tight.lo)), True
            else:
                a_val, a_exact = theta_a_poly(v)(tight.mid), False
            branch = GammaBranch.ZERO if tb.value == "left" else GammaBranch.PLUS
            out.append(GammaCrossing(tight, a_val, a_exact, branch,
                                     on_theta=True, nodal=True))
    out.sort(key=lambda c: (c.beta.lo, c.beta.hi))
    return out


def wall_theta_crossings(u: ChernCharacter, v: ChernCharacter) -> list[HalfPlanePoint | tuple]:
    """Points of the wall on the hyperbola of v: rho_u = rho_v = 0 with a > 0.

    Substituting the hyperbola height into rho_u leaves a linear equation in
    beta, so there is at most one crossing per pair (s plays no role).
    """
    if v.v0 == 0 or q_tilt(v) < 0:
        raise ValueError("hyperbola undefined")
    a_theta = theta_a_poly(v)
    p = rho_poly(u, a_theta)
    if p.is_zero:
        return []
    out = []
    for root in real_roots(p):
        a_sign = sign_at_root(a_theta, root, p)
        if a_sign <= 0:
            continue
        if root.is_exact:
            out.append(HalfPlanePoint(root.lo, a_theta(root.lo)))
        else:
            rr = refine(root, p, Fraction(1, 10**12))
            out.append(HalfPlanePoint(rr.mid, max(Fraction(0), a_theta(rr.mid))))
    return out


# ---------------------------------------------------------------------------
# differential data
# ---------------------------------------------------------------------------

def surface_gradient(u: ChernCharacter, v: ChernCharacter,
                     sp: SPoint) -> tuple[Fraction, Fraction, Fraction]:
    """Exact gradient of f on the surface in (alpha, beta, s):

        (df/dalpha) / alpha = (1 + 2(s-1/3)) Delta_21 - Delta_30 + a (s-1/3) Delta_10
        df/dbeta            = -Delta_31 - a (s-1/3) Delta_20
        df/ds               = a Delta_21
    """
    p = sp.point
    sthird = sp.s - THIRD
    d21 = big_delta(2, 1, u, v, p)
    d30 = big_delta(3, 0, u, v, p)
    d10 = big_delta(1, 0, u, v, p)
    d31 = big_delta(3, 1, u, v, p)
    d20 = big_delta(2, 0, u, v, p)
    df_da_scaled = (1 + 2 * sthird) * d21 - d30 + p.a * sthird * d10
    df_dbeta = -d31 - p.a * sthird * d20
    df_ds = p.a * d21
    return df_da_scaled, df_dbeta, df_ds


class HorizontalKind(enum.Enum):
    MAX_ON_GAMMA = "max-on-gamma"
    MIN_ON_NU_WALL = "min-on-nu-wall"
    INFLECTION_SPECIAL = "inflection-special"


@dataclass(frozen=True)
class HorizontalPoint:
    beta: IsolatedRoot
    kind: HorizontalKind
    a: Fraction | None          # None for a whole-line degeneration
    on_theta: bool = False
    at_axis: bool = False


def horizontal_points(u: ChernCharacter, v: ChernCharacter) -> list[HorizontalPoint]:
    """Horizontal points of the s = 1/3 wall: roots of the beta cubic Delta_31.

    Each root is classified by which wall point sits on its vertical line:
    on the tau-curve of v (a local maximum), on the nu-wall (a local minimum,
    an inflection instead when d01 = 0), annotated when the point lies on the
    hyperbola or on the horizontal axis.
    """
    if proportional(u, v):
        return []
    d31 = delta31_poly(u, v)
    if d31.is_zero:
        return []
    out: list[HorizontalPoint] = []
    d01 = delta(0, 1, u, v)
    lam_num = lambda_bar_numerator(u, v)
    s13 = Fraction(1, 3)
    a_num = ch_beta_poly(3, v)
    a_den = Fraction(1, 2) * ch_beta_poly(1, v)
    nw = nu_wall(u, v)
    for root in real_roots(d31):
        # wall point on the tau-curve over this root?
        if not lam_num.is_zero and _has_common_root(lam_num, root, d31):
            den_sign = sign_at_root(a_den, root, d31)
            a_sign = sign_at_root(a_num, root, d31) * den_sign
            if den_sign != 0 and a_sign > 0:
                a_val = _value_at(a_num, a_den, root, d31)
                rho_cleared = ch_beta_poly(2, v) * a_den * 2 - a_num * v.v0
                on_theta = sign_at_root(rho_cleared, root, d31) == 0
                out.append(HorizontalPoint(root, HorizontalKind.MAX_ON_GAMMA,
                                           a_val, on_theta=on_theta))
        # wall point on the nu-wall over this root?
        if isinstance(nw, NuWall) and nw.radius_sq >= 0:
            a_xi = nw.a_poly()
            g = big_delta_32_poly(u, v, a_xi)
            if not g.is_zero and _has_common_root(g, root, d31):
                h_sign = sign_at_root(a_xi, root, d31)
                if h_sign >= 0:
                    a_val = _poly_value_at(a_xi, root, d31)
                    kind = HorizontalKind.MIN_ON_NU_WALL
                    on_gamma_too = (not lam_num.is_zero
                                    and _has_common_root(lam_num, root, d31))
                    if d01 == 0 and on_gamma_too:
                        kind = HorizontalKind.INFLECTION_SPECIAL
                    on_theta = (root.is_exact and root.lo == nw.center
                                and a_val == nw.radius_sq)
                    out.append(HorizontalPoint(root, kind, a_val,
                                               on_theta=on_theta,
                                               at_axis=(h_sign == 0)))
    if d01 == 0 and v.v0 != 0 and u.v0 != 0:
        # degenerate comparison line = the vertical line beta = mu; an
        # inflection needs the tau-curves of both characters to contain it,
        # which makes the wall contain the whole line (reducible situation)
        m = v.mu()
        if ch_beta(3, v, m) == 0 and ch_beta(3, u, m) == 0:
            out.append(HorizontalPoint(IsolatedRoot(m, m),
                                       HorizontalKind.INFLECTION_SPECIAL, None))
    out.sort(key=lambda h: (h.beta.lo, h.beta.hi, h.kind.value))
    return out


def _has_common_root(q: RationalPoly, root: IsolatedRoot, p: RationalPoly) -> bool:
    return sign_at_root(q, root, p) == 0


def _poly_value_at(q: RationalPoly, root: IsolatedRoot, p: RationalPoly) -> Fraction:
    if root.is_exact:
        return q(root.lo)
    rr = refine(root, p, Fraction(1, 10**12))
    return q(rr.mid)


def _value_at(num: RationalPoly, den: RationalPoly, root: IsolatedRoot,
              p: RationalPoly) -> Fraction:
    if root.is_exact:
        return num(root.lo) / den(root.lo)
    rr = refine(root, p, Fraction(1, 10**12))
    return num(rr.mid) / den(rr.mid)


# ---------------------------------------------------------------------------
# singular points of the surface wall
# ---------------------------------------------------------------------------

class SingularModel(enum.Enum):
    CONE_AXIS_NU_WALL = "cone-axis-nu-wall"      # locally alpha^2 - beta^2, all s
    CUSP_NU_GAMMA = "cusp-nu-gamma"              # nu-wall meets the tau-curve, s = 1/3
    SMOOTH_TRIPLE = "smooth-triple"              # additionally at alpha = 0
    REDUCIBLE_FAMILY = "reducible-family"        # the surface factors


@dataclass(frozen=True)
class SingularPoint:
    model: SingularModel
    beta: IsolatedRoot | None
    a: Fraction | None
    s: Fraction | str            # a rational value or "all"


def classify_singularities(u: ChernCharacter,
                           v: ChernCharacter) -> list[SingularPoint]:
    """Singular points of the wall surface over (alpha, beta, s).

    Cone points: the wall meets its nu-wall on the horizontal axis away from
    the tau-curve (feet of the semicircle), for every s.  Cusps: the wall
    meets the nu-wall on the tau-curve at s = 1/3 (smooth triple point when
    that happens on the axis).  The reducible family is the coefficient
    condition mu(u) = mu(v), d20 != 0, with both degree-3 evaluations
    vanishing identically along the vertical line.
    """
    if v.v0 == 0:
        raise ValueError("requires nonzero rank for v")
    if proportional(u, v):
        raise ValueError("wall undefined for proportional characters")
    out: list[SingularPoint] = []

    # reducible family (coefficient test)
    d20 = delta(2, 0, u, v)
    if (u.v0 != 0 and delta(0, 1, u, v) == 0 and d20 != 0
            and v.v0**2 * v.v3 - v.v0 * v.v1 * v.v2 + v.v1**3 / 3 == 0
            and u.v0**2 * u.v3 - u.v0 * u.v1 * u.v2 + u.v1**3 / 3 == 0):
        out.append(SingularPoint(SingularModel.REDUCIBLE_FAMILY,
                                 IsolatedRoot(v.mu(), v.mu()), None, "all"))

    nw = nu_wall(u, v)
    if not isinstance(nw, NuWall):
        return out

    # axis points: wall and nu-wall both vanish at a = 0
    f0 = lambda_axis_poly(u, v)
    n0 = nu_axis_poly(u, v)
    if not f0.is_zero and not n0.is_zero:
        g = poly_gcd(squarefree_part(f0), squarefree_part(n0))
        if g.degree >= 1:
            tau0 = ch_beta_poly(3, v)
            for root in real_roots(g):
                on_gamma = sign_at_root(tau0, root, g) == 0
                model = (SingularModel.SMOOTH_TRIPLE if on_gamma
                         else SingularModel.CONE_AXIS_NU_WALL)
                s_tag = Fraction(1, 3) if on_gamma else "all"
                out.append(SingularPoint(model, root, Fraction(0), s_tag))

    # interior cusps: nu-wall meets the tau-curve on the wall, a > 0, s = 1/3
    if not nw.is_empty:
        a_xi = nw.a_poly()
        p1 = tau_poly(v, Fraction(1, 3), a_xi) * 6
        p2 = big_delta_32_poly(u, v, a_xi) * 12
        if not p1.is_zero and not p2.is_zero:
            g = poly_gcd(squarefree_part(p1), squarefree_part(p2))
            if g.degree >= 1:
                for root in real_roots(g):
                    h = sign_at_root(a_xi, root, g)
                    if h > 0:
                        out.append(SingularPoint(
                            SingularModel.CUSP_NU_GAMMA, root,
                            _poly_value_at(a_xi, root, g), Fraction(1, 3)))
    return out


# ---------------------------------------------------------------------------
# wall tracing
# ---------------------------------------------------------------------------

@dataclass
class TraceComponent:
    vertices: list[tuple[Fraction, Fraction, float]] = field(default_factory=list)
    bounded: bool = True

    def crosses_sign_of(self, fn) -> bool:
        """True when fn (exact, evaluated at the exact vertex coordinates)
        changes sign or vanishes along consecutive vertices."""
        prev = None
        for b, a, _ in self.vertices:
            val = fn(HalfPlanePoint(b, a))
            s = sign(val)
            if s == 0:
                return True
            if prev is not None and s != prev:
                return True
            prev = s
        return False


@dataclass
class WallTrace:
    components: list[TraceComponent]
    window: tuple[Fraction, Fraction, Fraction, Fraction]  # bmin, bmax, amin, amax in alpha
    step: Fraction

    @property
    def component_count(self) -> int:
        return len(self.components)


def _section_roots_exact(u, v, s, beta, a_top):
    """Positive roots of the vertical section at beta within the window.

    Returns (in_window, above, below, degenerate): the ascending in-window
    roots (Fraction approximations to the exact values; membership and
    positivity decided exactly), the count of roots above the window top, the
    count of roots at or below a = 0, and whether the section degenerates to
    a constant (a pole column of an unbounded wall).
    """
    sec = lambda_section_in_a(u, v, s, beta)
    cs = list(sec.coeffs)
    if sec.degree <= 0:
        return [], 0, 0, True
    tol = Fraction(1, 10**12)
    if sec.degree == 1:
        c0, c1 = cs[0], cs[1]
        root = -c0 / c1
        if root <= 0:
            return [], 0, 1, False
        if root > a_top:
            return [], 1, 0, False
        return [root], 0, 0, False
    c0, c1, c2 = cs[0], cs[1], cs[2]
    disc = c1 * c1 - 4 * c2 * c0
    if disc < 0:
        return [], 0, 0, False
    roots: list[Fraction] = []
    above = below = 0
    sq = rational_sqrt(disc, tol)
    for eps in (-1, 1):
        # sign of root = sign(-c1 + eps*sqrt(disc)) * sign(2 c2)
        num_sign = sign_a_plus_b_sqrt(-c1, Fraction(eps), disc)
        r_sign = num_sign * sign(2 * c2)
        if r_sign <= 0:
            below += 1
            continue
        # root <= a_top  <=>  sign(-c1 - 2 c2 a_top + eps sqrt(disc)) * sign(2c2) <= 0
        over = sign_a_plus_b_sqrt(-c1 - 2 * c2 * a_top, Fraction(eps), disc) * sign(2 * c2)
        if over > 0:
            above += 1
            continue
        roots.append((-c1 + eps * sq) / (2 * c2))
    roots.sort()
    return roots, above, below, False


def trace_wall(u: ChernCharacter, v: ChernCharacter, s,
               window=(-5, 5, 0, 5), step=Fraction(1, 64),
               threads: int = 1) -> WallTrace:
    """Trace the wall over a beta grid, solving each section in a exactly.

    window = (beta_min, beta_max, alpha_min, alpha_max); the trace keeps
    points with 0 < a <= alpha_max^2.  Adjacent columns are linked by nearest
    height within 4*step*(1 + slope) and by fold detection when a pair of
    roots appears or disappears; components touching the top or the vertical
    window edges are flagged unbounded.  Column solves are independent and
    run on a thread pool when threads > 1; linking is serial by beta order,
    so the result is identical for any thread count.
    """
    if proportional(u, v):
        raise ValueError("wall undefined for proportional characters")
    s = Fraction(s)
    bmin, bmax = Fraction(window[0]), Fraction(window[1])
    amax_alpha = Fraction(window[3])
    a_top = amax_alpha * amax_alpha
    step = Fraction(step)
    if step <= 0:
        raise ValueError("step must be positive")

    n_cols = int((bmax - bmin) / step) + 1
    col_betas = [bmin + col * step for col in range(n_cols)]
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=threads) as pool:
            sections = list(pool.map(
                lambda b: _section_roots_exact(u, v, s, b, a_top), col_betas))
    else:
        sections = [_section_roots_exact(u, v, s, b, a_top) for b in col_betas]
    parent: dict[int, int] = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    chains: list[dict] = []   # each: comp, verts, last_a, slope, open, touched_top, touched_side
    next_comp = 0

    def new_chain(col, beta, a, at_side):
        nonlocal next_comp
        cid = next_comp
        next_comp += 1
        parent[cid] = cid
        ch = {"comp": cid, "verts": [(beta, a)], "last": a, "slope": Fraction(0),
              "open": True, "side": at_side, "top": False, "last_col": col}
        chains.append(ch)
        return ch

    prev_roots: list[Fraction] = []
    prev_above = 0
    prev_degenerate = False
    for col in range(n_cols):
        beta = col_betas[col]
        roots, above, below, degenerate = sections[col]
        at_side = col == 0 or col == n_cols - 1
        open_chains = [c for c in chains if c["open"]]
        matched_roots = set()
        matched_chains = set()
        # order-preserving nearest matching (at most 2 roots per column)
        pairs = []
        for ci, ch in enumerate(open_chains):
            thresh = 4 * step * (1 + abs(ch["slope"]))
            for ri, r in enumerate(roots):
                pairs.append((abs(r - ch["last"]), ci, ri, thresh))
        pairs.sort(key=lambda t: t[0])
        for dist, ci, ri, thresh in pairs:
            if ci in matched_chains or ri in matched_roots:
                continue
            if dist <= thresh or dist <= 4 * step * (1 + abs(roots[ri] - open_chains[ci]["last"]) / step):
                matched_chains.add(ci)
                matched_roots.add(ri)
                ch = open_chains[ci]
                r = roots[ri]
                ch["slope"] = abs(r - ch["last"]) / step
                ch["last"] = r
                ch["verts"].append((beta, r))
                ch["last_col"] = col
                if at_side:
                    ch["side"] = True
        # unmatched chains: close; fold-merge when a pair vanished together
        unmatched = [open_chains[ci] for ci in range(len(open_chains))
                     if ci not in matched_chains]
        for ch in unmatched:
            ch["open"] = False
            if above or degenerate:
                # the branch left through the top (or toward a pole column)
                ch["top"] = True
        if len(unmatched) == 2 and not roots and not above and not below \
                and not degenerate:
            union(unmatched[0]["comp"], unmatched[1]["comp"])
        # unmatched roots: births; fold-birth when a pair appears together
        new_roots = [roots[ri] for ri in range(len(roots)) if ri not in matched_roots]
        born = [new_chain(col, beta, r, at_side) for r in new_roots]
        for ch in born:
            if prev_above or prev_degenerate:
                ch["top"] = True  # the branch came down through the window top
        if len(born) == 2 and not prev_roots and not prev_above \
                and not prev_degenerate and not matched_roots:
            union(born[0]["comp"], born[1]["comp"])
        prev_roots = roots
        prev_above = above
        prev_degenerate = degenerate

    # assemble components
    groups: dict[int, list[dict]] = {}
    for ch in chains:
        groups.setdefault(find(ch["comp"]), []).append(ch)
    comps = []
    for _, chs in sorted(groups.items()):
        verts: list[tuple[Fraction, Fraction, float]] = []
        touched = False
        for ch in chs:
            touched = touched or ch["top"] or ch["side"] or ch["open"]
            for b, a in ch["verts"]:
                verts.append((b, a, _fsqrt(float(a))))
        verts.sort(key=lambda t: (t[0], t[1]))
        comps.append(TraceComponent(vertices=verts, bounded=not touched))
    comps.sort(key=lambda c: (c.vertices[0][0], c.vertices[0][1]))
    return WallTrace(comps, (bmin, bmax, Fraction(window[2]), amax_alpha), step)


# ---------------------------------------------------------------------------
# wall intersections
# ---------------------------------------------------------------------------

def walls_intersect(u: ChernCharacter, u2: ChernCharacter, v: ChernCharacter,
                    s, window=(-5, 5, 0, 5), tol=Fraction(1, 100),
                    step=Fraction(1, 64)) -> list[tuple[float, float]]:
    """Approximate intersection points (alpha, beta) of the walls of u and u2.

    Pairs defining the same wall raise; two unbounded classes cannot meet and
    return [] outright; bounded classes sharing the truncated character meet
    only on the hyperbola, where the points are solved exactly.  Otherwise the
    first wall is traced and the second wall's sign is bisected along it.
    """
    if equivalent_mod_v(u, u2, v):
        raise ValueError("identical walls")
    s = Fraction(s)
    d01a = delta(0, 1, u, v)
    d01b = delta(0, 1, u2, v)
    if d01a == 0 and d01b == 0:
        return []
    if d01a != 0 and (u.v0, u.v1, u.v2) == (u2.v0, u2.v1, u2.v2):
        pts = []
        for p in wall_theta_crossings(u, v):
            pts.append((_fsqrt(float(p.a)), float(p.beta)))
        return pts

    trace = trace_wall(u, v, s, window=window, step=step)
    tol = Fraction(tol)
    out: list[tuple[float, float]] = []

    def f2(beta: Fraction, a: Fraction) -> Fraction:
        return lambda_f(u2, v, SPoint(HalfPlanePoint(beta, a), s))

    def wall1_a(beta: Fraction, near: Fraction) -> Fraction | None:
        roots, _, _, _ = _section_roots_exact(u, v, s, beta,
                                              Fraction(window[3])**2 * 4)
        if not roots:
            return None
        return min(roots, key=lambda r: abs(r - near))

    for comp in trace.components:
        vs = comp.vertices
        for (b1, a1, _), (b2, a2, _) in zip(vs, vs[1:]):
            if b2 == b1:
                continue
            s1, s2 = sign(f2(b1, a1)), sign(f2(b2, a2))
            if s1 == 0:
                out.append((_fsqrt(float(a1)), float(b1)))
                continue
            if s2 == 0 or s1 == s2:
                continue
            lo, hi = b1, b2
            alo, ahi = a1, a2
            slo = s1
            while hi - lo > tol / 4:
                mid = (lo + hi) / 2
                amid = wall1_a(mid, (alo + ahi) / 2)
                if amid is None:
                    break
                sm = sign(f2(mid, amid))
                if sm == 0 or sm == slo:
                    lo, alo = mid, amid
                    if sm == 0:
                        break
                else:
                    hi, ahi = mid, amid
            bmid = (lo + hi) / 2
            amid = wall1_a(bmid, (alo + ahi) / 2) or ((alo + ahi) / 2)
            out.append((_fsqrt(float(amid)), float(bmid)))
    # dedupe nearby hits
    deduped: list[tuple[float, float]] = []
    for pt in out:
        if all((pt[0] - q[0])**2 + (pt[1] - q[1])**2 > float(tol)**2
               for q in deduped):
            deduped.append(pt)
    return deduped


# ---------------------------------------------------------------------------
# isolated points of the surface (tangent plane parallel to (alpha, beta))
# ---------------------------------------------------------------------------

def critical_points(u: ChernCharacter, v: ChernCharacter,
                    beta_range=(-10.0, 10.0), a_range=(0.05, 100.0),
                    grid=400) -> list[tuple[float, float, float]]:
    """Search for points where f and its alpha/beta derivatives vanish while
    the s derivative does not: isolated points of a single-s wall.

    Eliminating s through the cyclic identity gives, at such a point,

        s - 1/3 = -Delta_12^2 / (a Delta_02^2 + 2 Delta_12^2),

    and two residual equations in (beta, a); these are contoured numerically
    on a grid and polished by bisection.  Returns (alpha, beta, s) triples.
    """
    uf = [float(c) for c in u]
    vf = [float(c) for c in v]

    def chab(w, i, b, a):
        if i == 0:
            return w[0]
        if i == 1:
            return w[1] - b * w[0]
        if i == 2:
            return w[2] - b * w[1] + w[0] * (b * b - a) / 2
        return (w[3] - b * w[2] + b * b * w[1] / 2 - b**3 * w[0] / 6
                - a * (w[1] - b * w[0]) / 2)

    def deltas(b, a):
        cu = [chab(uf, i, b, a) for i in range(4)]
        cv = [chab(vf, i, b, a) for i in range(4)]
        return {(i, j): cu[i] * cv[j] - cu[j] * cv[i]
                for i in range(4) for j in range(4)}

    def residuals(b, a):
        d = deltas(b, a)
        den = a * d[0, 2]**2 + 2 * d[1, 2]**2
        if den == 0:
            return None
        sig = -d[1, 2]**2 / den
        kappa = a * sig
        r1 = d[3, 2] - kappa * d[1, 2]
        r2 = d[3, 1] - kappa * d[0, 2]
        r3 = d[3, 0] - (1 + 2 * sig) * d[2, 1] - kappa * d[1, 0]
        return sig, r1, r2, r3

    b_lo, b_hi = beta_range
    a_lo, a_hi = a_range
    betas = [b_lo + (b_hi - b_lo) * k / grid for k in range(grid + 1)]
    n_a = grid
    avals = [a_lo * (a_hi / a_lo) ** (k / n_a) for k in range(n_a + 1)]

    def r1_at(b, a):
        r = residuals(b, a)
        return r[1] if r else float("nan")

    def r1_roots(b):
        roots = []
        prev = r1_at(b, avals[0])
        for a in avals[1:]:
            cur = r1_at(b, a)
            if prev == prev and cur == cur and prev * cur < 0:
                lo_, hi_ = a / (avals[1] / avals[0]), a
                lo_ = max(a_lo, lo_)
                flo = r1_at(b, lo_)
                for _ in range(80):
                    mid = (lo_ + hi_) / 2
                    fm = r1_at(b, mid)
                    if fm == 0:
                        lo_ = hi_ = mid
                        break
                    if (fm > 0) == (flo > 0):
                        lo_, flo = mid, fm
                    else:
                        hi_ = mid
                roots.append((lo_ + hi_) / 2)
            prev = cur
        return roots

    found: list[tuple[float, float, float]] = []
    prev_pts: list[tuple[float, float]] = []
    for bi, b in enumerate(betas):
        pts = [(a, 0.0) for a in r1_roots(b)]
        cur = []
        for a, _ in pts:
            r = residuals(b, a)
            if not r:
                continue
            cur.append((a, r[2]))
        for a, r2val in cur:
            for pa, pr2 in prev_pts:
                if abs(pa - a) < max(0.35 * max(a, pa), 0.5) and pr2 * r2val < 0:
                    blo, bhi = betas[bi - 1], b
                    alo = pa
                    for _ in range(80):
                        bm = (blo + bhi) / 2
                        cands = r1_roots(bm)
                        if not cands:
                            break
                        am = min(cands, key=lambda x: abs(x - alo))
                        rm = residuals(bm, am)
                        if rm is None:
                            break
                        if rm[2] * pr2 > 0:
                            blo, alo = bm, am
                        else:
                            bhi = bm
                    bm = (blo + bhi) / 2
                    cands = r1_roots(bm)
                    if not cands:
                        continue
                    am = min(cands, key=lambda x: abs(x - alo))
                    rm = residuals(bm, am)
                    if rm is None:
                        continue
                    sig, r1v, r2v, r3v = rm
                    scale = 1 + abs(am) ** 2
                    if abs(r3v) < 1e-4 * scale * (1 + am) and sig > -1 / 3:
                        pt = (_fsqrt(am), bm, 1 / 3 + sig)
                        if all((pt[0] - q[0])**2 + (pt[1] - q[1])**2
                               + (pt[2] - q[2])**2 > 1e-4 for q in found):
                            found.append(pt)
        prev_pts = cur
    return found
