"""Integer lattice search for destabilizer candidates.

Two searches are provided.  ``enumerate_pseudo_walls`` scans lattice
characters u through a fixed point P of the tau-curve of v, forcing u3 so the
wall of (u, v) passes through P, and keeps the u that clear every numerical
test a destabilizing sequence at P must satisfy.  ``enumerate_nu_candidates``
scans truncated characters (rank, degree, ch2) whose slope-comparison circle
crosses the vertical line through the left foot of the hyperbola of v.

Every scanned candidate gets a full diagnostics map (each filter evaluated
with its exact value, no short-circuiting), so rejected candidates always
name their failing constraints and carry the exact offending numbers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .chern import (ChernCharacter, HalfPlanePoint, SPoint, ch_beta, delta,
                    euler_char_p3, proportional, q_full, q_tilt)
from .exactpoly import sign, sign_a_plus_b_sqrt, exact_sqrt
from .geometry import tau
from .walls import NuWall, WallClass, classify_wall, lambda_f, nu_wall


@dataclass(frozen=True)
class SearchBox:
    """Integer scan bounds: rank and degree ranges, plus magnitude caps on
    2*u2 and 6*u3 used only where a coordinate is not already forced."""
    rank_min: int
    rank_max: int
    c1_min: int
    c1_max: int
    c2_bound: int = 60
    c3_bound: int = 360

    def __post_init__(self):
        if self.rank_min > self.rank_max or self.c1_min > self.c1_max:
            raise ValueError("empty search box")


@dataclass(frozen=True)
class Toggles:
    """Optional filters layered on the always-on tests.

    bogomolov: require q_tilt(u) >= 0 and q_tilt(v-u) >= 0.
    no_theta_crossing: reject candidates whose slope-comparison circle is
        nonempty; sound only when the caller certifies that v has no actual
        nu-walls, hence off by default.
    lambda_nu: |2*u2 + u0| <= 2|u1| for u1 != 0; a special-case bound valid
        for v = (2,0,-1,0), off by default.
    """
    bogomolov: bool = True
    no_theta_crossing: bool = False
    lambda_nu: bool = False


@dataclass
class PseudoWallCandidate:
    u: ChernCharacter
    diagnostics: dict[str, tuple[bool, object]]
    wall_class: WallClass | None = None
    coincides_with: int | None = None

    @property
    def passed(self) -> bool:
        return all(ok for ok, _ in self.diagnostics.values())

    @property
    def failed_constraints(self) -> list[str]:
        return [k for k, (ok, _) in self.diagnostics.items() if not ok]


@dataclass
class EnumerationResult:
    candidates: list[PseudoWallCandidate]
    rejected: list[PseudoWallCandidate] = field(default_factory=list)
    absorbed: list[tuple[ChernCharacter, str]] = field(default_factory=list)


def solve_u3_on_point(v: ChernCharacter, s, p: HalfPlanePoint,
                      u012: tuple) -> Fraction:
    """The unique u3 placing the wall of (u, v) through p, for p on the
    tau-curve of v: solve tau_{u,s}(p) = 0, which is linear in u3 with unit
    coefficient."""
    s = Fraction(s)
    if tau(v, SPoint(p, s)) != 0:
        raise ValueError("point does not lie on the tau-curve of v")
    r, x, y2 = (Fraction(c) for c in u012)
    probe = ChernCharacter(r, x, y2, 0)
    rest = tau(probe, SPoint(p, s))
    # tau(u) = u3 + rest, so u3 = -rest; the u3 coefficient is identically 1.
    return -rest


def check_pseudo_wall(u: ChernCharacter, v: ChernCharacter, s,
                      p: HalfPlanePoint,
                      toggles: Toggles = Toggles()) -> PseudoWallCandidate:
    """Evaluate every filter on a single u, with exact values recorded.

    Constraint names: integrality, chi_integral, proportional, rho_interior,
    ch1_interior, q_u, q_complement, q_sum, bogomolov_u, bogomolov_complement,
    no_theta_crossing, lambda_nu (the last four only when toggled on).
    """
    s = Fraction(s)
    sp = SPoint(p, s)
    w = v - u
    diag: dict[str, tuple[bool, object]] = {}

    coarse = u.in_coarse_lattice()
    integral = u.is_object_class_p3()
    diag["integrality"] = (coarse and integral, str(u))
    chi = euler_char_p3(u)
    diag["chi_integral"] = (chi.denominator == 1, chi)
    prop = proportional(u, v)
    diag["proportional"] = (not prop, prop)

    rho_u = ch_beta(2, u, p.beta) - p.a * u.v0 / 2
    rho_v = ch_beta(2, v, p.beta) - p.a * v.v0 / 2
    diag["rho_interior"] = (0 < rho_u < rho_v, rho_u)
    c1u = ch_beta(1, u, p.beta)
    c1v = ch_beta(1, v, p.beta)
    diag["ch1_interior"] = (0 <= c1u <= c1v, c1u)

    qu = q_full(u, p)
    qw = q_full(w, p)
    qv = q_full(v, p)
    diag["q_u"] = (qu >= 0, qu)
    diag["q_complement"] = (qw >= 0, qw)
    diag["q_sum"] = (qu + qw <= qv, qu + qw)

    if toggles.bogomolov:
        bu, bw = q_tilt(u), q_tilt(w)
        diag["bogomolov_u"] = (bu >= 0, bu)
        diag["bogomolov_complement"] = (bw >= 0, bw)

    if toggles.no_theta_crossing:
        # Applies only to classes with d01 != 0 (the hypothesis of the
        # underlying statement); requires the comparison circle to be empty.
        d01 = delta(0, 1, u, v)
        if d01 != 0 and not prop:
            wall = nu_wall(u, v)
            empty = isinstance(wall, NuWall) and wall.is_empty
            diag["no_theta_crossing"] = (empty, wall.radius_sq
                                         if isinstance(wall, NuWall) else None)
        else:
            diag["no_theta_crossing"] = (True, None)

    if toggles.lambda_nu:
        if u.v1 != 0:
            val = abs(2 * u.v2 + u.v0) <= 2 * abs(u.v1)
            diag["lambda_nu"] = (val, 2 * u.v2 + u.v0)
        else:
            diag["lambda_nu"] = (True, None)

    wall_class = None
    if not prop and v.v0 != 0:
        wall_class = classify_wall(u, v)
    return PseudoWallCandidate(u, diag, wall_class)


def default_box(v: ChernCharacter, p: HalfPlanePoint) -> SearchBox:
    """Ranks 1..v0 (the ranks a destabilizing subsheaf can have), with the
    degree range taken from the ch1 interior constraint at p."""
    if v.v0 <= 0:
        raise ValueError("default box requires positive rank")
    c1v = ch_beta(1, v, p.beta)
    rmax = int(v.v0)
    c1_lo = min(int(p.beta * r) - 1 for r in range(1, rmax + 1))
    c1_hi = max(int(p.beta * r + c1v) + 1 for r in range(1, rmax + 1))
    return SearchBox(1, rmax, c1_lo, c1_hi)


def enumerate_pseudo_walls(v: ChernCharacter, s, p: HalfPlanePoint,
                           box: SearchBox | None = None,
                           toggles: Toggles = Toggles(),
                           keep_rejected: bool = False) -> EnumerationResult:
    """All lattice destabilizer candidates through p, with u3 forced.

    The scan runs over integer (r, x, y) = (u0, u1, 2*u2) in the box; y keeps
    the parity of x (integral second Chern class) and ranges over the interval
    the rho interior test allows, widened by one on each side so borderline
    rejections land in the log.  Emitted candidates are deduplicated two ways:
    the complement v - u defines the same wall read from the quotient side, so
    only the lexicographically smaller of the pair is kept; and an integer
    multiple k*u of an emitted candidate with q_full(u, p) = 0 is absorbed
    into u (on that null ray a semistable object of class k*u is forced to be
    a direct sum, so the multiple carries no new wall data).
    """
    s = Fraction(s)
    if v.v0 == 0:
        raise ValueError("requires nonzero rank for v")
    if tau(v, SPoint(p, s)) != 0:
        raise ValueError("point does not lie on the tau-curve of v")
    if box is None:
        box = default_box(v, p)

    rho_v = ch_beta(2, v, p.beta) - p.a * v.v0 / 2
    passing: list[PseudoWallCandidate] = []
    rejected: list[PseudoWallCandidate] = []
    for r in range(box.rank_min, box.rank_max + 1):
        for x in range(box.c1_min, box.c1_max + 1):
            # interval for y from 0 < rho_u < rho_v, then widened by 1
            # rho_u = y/2 + (x - x*(1+beta))... computed via the probe below
            base = ChernCharacter(r, x, 0, 0)
            rho_base = ch_beta(2, base, p.beta) - p.a * Fraction(r) / 2
            # rho_u = rho_base + y/2  =>  y in (-2 rho_base, 2 (rho_v - rho_base))
            y_lo_f = -2 * rho_base
            y_hi_f = 2 * (rho_v - rho_base)
            y_lo = int(y_lo_f) - 2
            y_hi = int(y_hi_f) + 2
            if box.c2_bound:
                y_lo = max(y_lo, -box.c2_bound)
                y_hi = min(y_hi, box.c2_bound)
            for y in range(y_lo, y_hi + 1):
                u2 = Fraction(y, 2)
                u3 = solve_u3_on_point(v, s, p, (r, x, u2))
                u = ChernCharacter(r, x, u2, u3, lattice=True)
                if proportional(u, v):
                    continue  # no wall at all
                cand = check_pseudo_wall(u, v, s, p, toggles)
                if cand.passed:
                    passing.append(cand)
                elif keep_rejected:
                    rejected.append(cand)

    passing.sort(key=lambda c: tuple(c.u))
    emitted: list[PseudoWallCandidate] = []
    absorbed: list[tuple[ChernCharacter, str]] = []
    keys = {tuple(c.u) for c in passing}
    for cand in passing:
        u = cand.u
        comp = v - u
        if tuple(comp) in keys and tuple(comp) < tuple(u):
            absorbed.append((u, f"complement of {comp}"))
            continue
        multiple = None
        for other in passing:
            ou = other.u
            if tuple(ou) == tuple(u) or not proportional(ou, u):
                continue
            if ou.v0 != 0 and u.v0 != 0:
                k = u.v0 / ou.v0
                if k.denominator == 1 and abs(k) >= 2 and q_full(ou, p) == 0:
                    multiple = ou
                    break
        if multiple is not None:
            absorbed.append((u, f"multiple of null-ray class {multiple}"))
            continue
        emitted.append(cand)

    for idx, cand in enumerate(emitted):
        for jdx in range(idx):
            if cand.wall_class and emitted[jdx].wall_class and \
               cand.wall_class == emitted[jdx].wall_class:
                cand.coincides_with = jdx
                break
    return EnumerationResult(emitted, rejected, absorbed)


# ---------------------------------------------------------------------------
# nu-wall candidates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NuCandidate:
    u_trunc: tuple[Fraction, Fraction, Fraction]
    wall: NuWall


def enumerate_nu_candidates(v: ChernCharacter,
                            box: SearchBox | None = None,
                            rank_max: int | None = None) -> list[NuCandidate]:
    """Truncated lattice candidates (r, x, y/2) for nu-walls of v.

    Every nu-wall crosses the vertical line beta0 = mu(v) - sqrt(q_tilt)/v0,
    so a candidate must satisfy 0 < ch1^{beta0}(u) < ch1^{beta0}(v) strictly,
    both truncated Bogomolov inequalities, and its circle must cross that
    line with positive radius.  beta0 is rational or a quadratic irrational;
    all comparisons are exact either way.  Candidates proportional in the
    truncated lattice are grouped (one representative per circle).
    """
    if v.v0 < 0:
        v = -v  # the comparison locus of (u, -v) equals that of (u, v)
    if v.v0 == 0:
        raise ValueError("requires nonzero rank")
    if q_tilt(v) < 0:
        raise ValueError("requires the Bogomolov inequality for v")
    if box is None:
        rmax = rank_max if rank_max is not None else 2 * int(v.v0)
        box = SearchBox(1, rmax, -10 * rmax, 10 * rmax)

    # beta0 = m - sqrt(d): exact arithmetic in the quadratic extension
    m = v.mu()
    d = q_tilt(v) / v.v0**2
    sqrt_d = exact_sqrt(d)

    def cmp_lin(p0: Fraction, p1: Fraction) -> int:
        """Sign of p0 + p1*beta0 where beta0 = m - sqrt(d)."""
        if sqrt_d is not None:
            return sign(p0 + p1 * (m - sqrt_d))
        return sign_a_plus_b_sqrt(p0 + p1 * m, -p1, d)

    c1v_const, c1v_lin = v.v1, -v.v0  # ch1^{beta0}(v) = v1 - beta0 v0
    out: list[NuCandidate] = []
    seen: list[tuple[Fraction, Fraction, Fraction]] = []
    for r in range(box.rank_min, box.rank_max + 1):
        for x in range(box.c1_min, box.c1_max + 1):
            # strict interior: 0 < x - beta0 r < ch1^{beta0}(v)
            if cmp_lin(Fraction(x), Fraction(-r)) <= 0:
                continue
            if cmp_lin(c1v_const - x, c1v_lin + r) <= 0:
                continue
            y_lo = -box.c2_bound
            y_hi = box.c2_bound
            for y in range(y_lo, y_hi + 1):
                if (y - x) % 2 != 0:
                    continue
                u2 = Fraction(y, 2)
                if x * x - r * y < 0:
                    continue  # Bogomolov for u (y = 2 u2)
                w_trunc = (v.v0 - r, v.v1 - x, v.v2 - u2)
                if (w_trunc[1]**2 - 2 * w_trunc[0] * w_trunc[2]) < 0:
                    continue  # Bogomolov for the truncated complement
                d01 = Fraction(r) * v.v1 - Fraction(x) * v.v0
                if d01 == 0:
                    continue  # no circle
                d02 = Fraction(r) * v.v2 - u2 * v.v0
                d12 = Fraction(x) * v.v2 - u2 * v.v1
                center = d02 / d01
                radius_sq = center * center - 2 * d12 / d01
                if radius_sq <= 0:
                    continue
                # circle crosses the vertical line beta = beta0:
                # (center - beta0)^2 < radius_sq
                # <=> -2 center beta0 + beta0^2 + 2 d12/d01 < 0
                lhs_const = m * m + d + 2 * d12 / d01 - 2 * center * m
                lhs_lin = 2 * center - 2 * m  # coefficient of sqrt(d)... see below
                # beta0^2 = m^2 - 2 m sqrt(d) + d; -2 c beta0 = -2cm + 2c sqrt(d)
                if sign_a_plus_b_sqrt(lhs_const, lhs_lin, d) >= 0:
                    continue
                trunc = (Fraction(r), Fraction(x), u2)
                dup = any(trunc[0] * t[1] == trunc[1] * t[0]
                          and trunc[0] * t[2] == trunc[2] * t[0]
                          and trunc[1] * t[2] == trunc[2] * t[1]
                          for t in seen)
                if dup:
                    continue
                seen.append(trunc)
                out.append(NuCandidate(trunc, NuWall(center, radius_sq)))
    out.sort(key=lambda c: c.u_trunc)
    return out
