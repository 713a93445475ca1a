"""Exact arithmetic on numerical Chern characters of a Picard-rank-1 threefold.

A character is a rational 4-vector (v0, v1, v2, v3) = (rank, degree, ch2, ch3)
measured against powers of the ample generator.  All operations are exact over
``fractions.Fraction``.  Points of the upper half plane are stored as
(beta, a) with a = alpha^2, which keeps every function in this package
(rho, tau, the wall equations, the Bogomolov forms) polynomial and rational.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

Rat = Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass int, Fraction, or 'p/q' text")
    return Fraction(x)


@dataclass(frozen=True)
class ChernCharacter:
    """Rational 4-vector (v0, v1, v2, v3).

    The ``lattice`` flag is advisory metadata marking intended membership in
    Z x Z x (1/2)Z x (1/6)Z; it is not enforced at construction and does not
    take part in equality.
    """

    v0: Fraction
    v1: Fraction
    v2: Fraction
    v3: Fraction
    lattice: bool = field(default=False, compare=False)

    def __post_init__(self):
        for name in ("v0", "v1", "v2", "v3"):
            object.__setattr__(self, name, _frac(getattr(self, name)))

    # -- text form: four comma-separated rationals "p/q" -------------------
    @classmethod
    def parse(cls, text: str, lattice: bool = False) -> "ChernCharacter":
        parts = text.split(",")
        if len(parts) != 4:
            raise ValueError(f"expected 4 comma-separated rationals, got {text!r}")
        vals = []
        for k, part in enumerate(parts):
            try:
                vals.append(Fraction(part.strip()))
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"bad rational at position {k}: {part.strip()!r}") from exc
        return cls(*vals, lattice=lattice)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self)

    def __iter__(self):
        return iter((self.v0, self.v1, self.v2, self.v3))

    def __getitem__(self, i: int) -> Fraction:
        return (self.v0, self.v1, self.v2, self.v3)[i]

    # -- linear structure ---------------------------------------------------
    def __add__(self, other: "ChernCharacter") -> "ChernCharacter":
        return ChernCharacter(*(a + b for a, b in zip(self, other)))

    def __sub__(self, other: "ChernCharacter") -> "ChernCharacter":
        return ChernCharacter(*(a - b for a, b in zip(self, other)))

    def __neg__(self) -> "ChernCharacter":
        return ChernCharacter(*(-a for a in self))

    def scale(self, k) -> "ChernCharacter":
        k = _frac(k)
        return ChernCharacter(*(k * a for a in self))

    __rmul__ = scale

    def is_zero(self) -> bool:
        return all(c == 0 for c in self)

    # -- lattice membership ---------------------------------------------------
    def in_coarse_lattice(self) -> bool:
        """Membership in Z x Z x (1/2)Z x (1/6)Z."""
        return (self.v0.denominator == 1 and self.v1.denominator == 1
                and (2 * self.v2).denominator == 1
                and (6 * self.v3).denominator == 1)

    def is_object_class_p3(self) -> bool:
        """Membership in the numerical K-lattice of projective 3-space.

        Equivalent to integral Chern classes: besides the coarse lattice,
        2*v2 = v1 (mod 2) (c2 integral) and 6*v3 = v1 (mod 6) (Euler
        characteristic integral).
        """
        if not self.in_coarse_lattice():
            return False
        y = int(2 * self.v2)
        z = int(6 * self.v3)
        x = int(self.v1)
        return (y - x) % 2 == 0 and (z - x) % 6 == 0

    def mu(self) -> Fraction:
        if self.v0 == 0:
            raise ZeroDivisionError("slope undefined for rank 0")
        return self.v1 / self.v0


@dataclass(frozen=True)
class HalfPlanePoint:
    """A point (beta, a) with a = alpha^2 >= 0.

    a = 0 is the closure of the upper half plane; individual operations state
    whether they accept the boundary.
    """

    beta: Fraction
    a: Fraction

    def __post_init__(self):
        object.__setattr__(self, "beta", _frac(self.beta))
        object.__setattr__(self, "a", _frac(self.a))
        if self.a < 0:
            raise ValueError("a = alpha^2 must be nonnegative")


@dataclass(frozen=True)
class SPoint:
    """A half-plane point together with the stability parameter s >= 0.

    s = 0 is a boundary value admitted only by the curve constructions that
    explicitly allow it.
    """

    point: HalfPlanePoint
    s: Fraction

    def __post_init__(self):
        object.__setattr__(self, "s", _frac(self.s))
        if self.s < 0:
            raise ValueError("s must be nonnegative")


def twist_beta(v: ChernCharacter, beta) -> ChernCharacter:
    """The twisted character ch^beta(v) = exp(-beta L) . v."""
    b = _frac(beta)
    return ChernCharacter(
        v.v0,
        v.v1 - b * v.v0,
        v.v2 - b * v.v1 + b * b * v.v0 / 2,
        v.v3 - b * v.v2 + b * b * v.v1 / 2 - b**3 * v.v0 / 6,
    )


def ch_beta(i: int, v: ChernCharacter, beta) -> Fraction:
    """Degree-i component of the twisted character; 0 outside degrees 0..3."""
    if i < 0 or i > 3:
        return Fraction(0)
    return twist_beta(v, beta)[i]


def ch_ab(i: int, v: ChernCharacter, p: HalfPlanePoint) -> Fraction:
    """The evaluation family ch_i at (beta, a): ch0, ch1^beta, rho, tau at s=1/3.

    By convention the value is 0 for i outside 0..3.
    """
    if i < 0 or i > 3:
        return Fraction(0)
    if i == 0:
        return v.v0
    if i == 1:
        return v.v1 - p.beta * v.v0
    if i == 2:
        return v.v2 - v.v1 * p.beta + v.v0 * (p.beta**2 - p.a) / 2
    c3 = ch_beta(3, v, p.beta)
    return c3 - p.a * ch_beta(1, v, p.beta) / 2


def delta(i: int, j: int, u: ChernCharacter, v: ChernCharacter) -> Fraction:
    """delta_ij(u, v) = ch_i(u) ch_j(v) - ch_j(u) ch_i(v)."""
    if not (0 <= i <= 3 and 0 <= j <= 3):
        raise IndexError("delta indices must lie in 0..3")
    return u[i] * v[j] - u[j] * v[i]


def big_delta(i: int, j: int, u: ChernCharacter, v: ChernCharacter,
              p: HalfPlanePoint) -> Fraction:
    """Delta_ij at (beta, a), built from the ch_ab family.

    Delta_10 is constant in (beta, a) and equals delta_10(u, v).
    """
    if not (0 <= i <= 3 and 0 <= j <= 3):
        raise IndexError("big_delta indices must lie in 0..3")
    return ch_ab(i, u, p) * ch_ab(j, v, p) - ch_ab(j, u, p) * ch_ab(i, v, p)


def proportional(u: ChernCharacter, v: ChernCharacter) -> bool:
    """True when u and v are linearly dependent (all 2x2 minors vanish)."""
    for i in range(4):
        for j in range(i + 1, 4):
            if u[i] * v[j] - u[j] * v[i] != 0:
                return False
    return True


def q_tilt(v: ChernCharacter) -> Fraction:
    """Bogomolov discriminant v1^2 - 2 v0 v2."""
    return v.v1**2 - 2 * v.v0 * v.v2


def q_full(v: ChernCharacter, p: HalfPlanePoint) -> Fraction:
    """The generalized Bogomolov form at (beta, a):

        a * q_tilt(v) + 4 (ch2^beta)^2 - 6 ch1^beta ch3^beta.
    """
    c1 = ch_beta(1, v, p.beta)
    c2 = ch_beta(2, v, p.beta)
    c3 = ch_beta(3, v, p.beta)
    return p.a * q_tilt(v) + 4 * c2 * c2 - 6 * c1 * c3


def q_quartic(v: ChernCharacter) -> Fraction:
    """The twist- and dual-invariant quartic form

        3 v1^2 v2^2 - 6 v1^3 v3 + 18 v0 v1 v2 v3 - 8 v0 v2^3 - 9 v0^2 v3^2.

    Its sign at a = 0 controls whether the lambda-slope vanishing curve is
    forced to cross the rho-vanishing hyperbola.
    """
    v0, v1, v2, v3 = v
    return (3 * v1**2 * v2**2 - 6 * v1**3 * v3 + 18 * v0 * v1 * v2 * v3
            - 8 * v0 * v2**3 - 9 * v0**2 * v3**2)


def euler_char_p3(v: ChernCharacter) -> Fraction:
    """Euler characteristic on projective 3-space: v0 + 11 v1 / 6 + 2 v2 + v3."""
    return v.v0 + Fraction(11, 6) * v.v1 + 2 * v.v2 + v.v3


def dualize(v: ChernCharacter) -> ChernCharacter:
    """Numerical shadow of the derived dual: flip the odd components."""
    return ChernCharacter(v.v0, -v.v1, v.v2, -v.v3, lattice=v.lattice)
