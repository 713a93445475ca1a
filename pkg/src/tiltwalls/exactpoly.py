"""Exact univariate polynomial arithmetic over the rationals.

Provides certified real-root isolation (Sturm sequences), sign-preserving
interval refinement, and certified sign evaluation of one polynomial at an
isolated root of another.  Everything here works over ``fractions.Fraction``;
no floating point enters any certified path.  Decimal approximations are for
output layers only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence

Rat = Fraction

# Rational-root extraction bails out above this to avoid huge divisor scans.
_DIVISOR_CAP = 10**15


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


class RationalPoly:
    """A univariate polynomial with Fraction coefficients, ascending degree.

    Normalized so the coefficient list carries no trailing zeros; the zero
    polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x) -> Fraction:
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RationalPoly({list(self.coeffs)!r})"

    def __add__(self, other) -> "RationalPoly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            a[i] += c
        return RationalPoly(a)

    __radd__ = __add__

    def __neg__(self) -> "RationalPoly":
        return RationalPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> "RationalPoly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "RationalPoly":
        return _as_poly(other) - self

    def __mul__(self, other) -> "RationalPoly":
        if isinstance(other, (int, Fraction)):
            return RationalPoly([c * other for c in self.coeffs])
        other = _as_poly(other)
        if self.is_zero or other.is_zero:
            return RationalPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def derivative(self) -> "RationalPoly":
        return RationalPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def divmod(self, other: "RationalPoly") -> tuple["RationalPoly", "RationalPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, self.degree - other.degree + 1)
        rem = list(self.coeffs)
        dlead = other.leading()
        dn = other.degree
        while len(rem) - 1 >= dn and any(c != 0 for c in rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < dn:
                break
            k = len(rem) - 1 - dn
            factor = rem[-1] / dlead
            q[k] = factor
            for i, c in enumerate(other.coeffs):
                rem[k + i] -= factor * c
            rem.pop()
        return RationalPoly(q), RationalPoly(rem)

    def monic(self) -> "RationalPoly":
        if self.is_zero:
            return self
        lead = self.leading()
        return RationalPoly([c / lead for c in self.coeffs])


def _as_poly(x) -> RationalPoly:
    if isinstance(x, RationalPoly):
        return x
    return RationalPoly([x])


def poly_gcd(a: RationalPoly, b: RationalPoly) -> RationalPoly:
    """Monic gcd over the rationals (Euclid)."""
    while not b.is_zero:
        _, r = a.divmod(b)
        a, b = b, r
    return a.monic() if not a.is_zero else a


def squarefree_part(p: RationalPoly) -> RationalPoly:
    if p.degree < 1:
        return p.monic() if not p.is_zero else p
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p.monic()
    q, _ = p.divmod(g)
    return q.monic()


def squarefree_decomposition(p: RationalPoly) -> list[tuple[RationalPoly, int]]:
    """Yun's algorithm: p = lead * prod q_k^k with q_k squarefree, pairwise coprime.

    Returns [(q_k, k)] for the nonconstant q_k.
    """
    if p.degree < 1:
        return []
    out: list[tuple[RationalPoly, int]] = []
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return [(p.monic(), 1)]
    w, _ = p.divmod(g)
    y, _ = p.derivative().divmod(g)
    z = y - w.derivative()
    k = 1
    while not w.is_zero and w.degree > 0:
        q = poly_gcd(w, z)
        if q.degree > 0:
            out.append((q.monic(), k))
        w2, _ = w.divmod(q) if q.degree > 0 else (w, None)
        if q.degree > 0:
            w = w2
            y2, _ = z.divmod(q)
            z = y2 - w.derivative()
        else:
            z = z - w.derivative()
        k += 1
        if k > p.degree + 1:
            break
    return out


def sturm_chain(p: RationalPoly) -> list[RationalPoly]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero and chain[-1].degree >= 0:
        _, r = chain[-2].divmod(chain[-1])
        if r.is_zero:
            break
        chain.append(-r)
    return [q for q in chain if not q.is_zero]


def _variations(values: Sequence[Fraction]) -> int:
    signs = [sign(v) for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _variations_at(chain: Sequence[RationalPoly], x: Fraction) -> int:
    return _variations([q(x) for q in chain])


def _variations_at_inf(chain: Sequence[RationalPoly], positive: bool) -> int:
    vals = []
    for q in chain:
        s = sign(q.leading())
        if not positive and q.degree % 2 == 1:
            s = -s
        vals.append(Fraction(s))
    return _variations(vals)


def count_real_roots(p: RationalPoly, lo: Fraction | None = None,
                     hi: Fraction | None = None) -> int:
    """Number of distinct real roots of p in (lo, hi]; whole line if unbounded.

    Endpoints must not be roots of p when finite (callers arrange this).
    """
    if p.is_zero:
        raise ValueError("indeterminate root set")
    sf = squarefree_part(p)
    if sf.degree < 1:
        return 0
    chain = sturm_chain(sf)
    va = _variations_at(chain, lo) if lo is not None else _variations_at_inf(chain, False)
    vb = _variations_at(chain, hi) if hi is not None else _variations_at_inf(chain, True)
    return va - vb


@dataclass(frozen=True)
class IsolatedRoot:
    """An isolating interval [lo, hi] for one distinct real root.

    lo == hi exactly when the root is rational.  multiplicity_hint is the
    multiplicity in the original (possibly non-squarefree) polynomial.
    """
    lo: Fraction
    hi: Fraction
    multiplicity_hint: int = 1

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self) -> float:
        return float(self.mid)

    def contains(self, x: Fraction) -> bool:
        return self.lo <= x <= self.hi


def _cauchy_bound(p: RationalPoly) -> Fraction:
    lead = abs(p.leading())
    return 1 + max(abs(c) for c in p.coeffs) / lead


def _int_divisors(n: int) -> list[int]:
    n = abs(n)
    if n == 0:
        return []
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return sorted(set(out))


def _rational_roots(p: RationalPoly) -> list[Fraction]:
    """All rational roots of p, via the rational root theorem (with a size cap)."""
    roots = []
    # strip zero roots
    coeffs = list(p.coeffs)
    while coeffs and coeffs[0] == 0:
        roots.append(Fraction(0))
        coeffs.pop(0)
    if not coeffs or len(coeffs) == 1:
        return sorted(set(roots))
    q = RationalPoly(coeffs)
    denom_lcm = 1
    for c in q.coeffs:
        denom_lcm = denom_lcm * c.denominator // _gcd_int(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in q.coeffs]
    c0, cn = ints[0], ints[-1]
    if abs(c0) > _DIVISOR_CAP or abs(cn) > _DIVISOR_CAP:
        return sorted(set(roots))
    for pnum in _int_divisors(c0):
        for qden in _int_divisors(cn):
            for s in (1, -1):
                cand = Fraction(s * pnum, qden)
                if q(cand) == 0:
                    roots.append(cand)
    return sorted(set(roots))


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a if a else 1


def _multiplicity(root_lo: Fraction, root_hi: Fraction,
                  decomp: list[tuple[RationalPoly, int]]) -> int:
    for q, k in decomp:
        if root_lo == root_hi:
            if q(root_lo) == 0:
                return k
        else:
            a, b = q(root_lo), q(root_hi)
            if a == 0 or b == 0 or sign(a) != sign(b):
                return k
    return 1


def real_roots(p: RationalPoly) -> list[IsolatedRoot]:
    """All distinct real roots of p as isolating intervals, ascending.

    Rational roots come back with lo == hi.  Raises on the zero polynomial.
    """
    if p.is_zero:
        raise ValueError("indeterminate root set")
    if p.degree < 1:
        return []
    decomp = squarefree_decomposition(p)
    sf = squarefree_part(p)
    rational = _rational_roots(sf)
    reduced = sf
    for r in rational:
        reduced, _ = reduced.divmod(RationalPoly([-r, 1]))

    intervals: list[tuple[Fraction, Fraction]] = []
    if reduced.degree >= 1:
        chain = sturm_chain(reduced)
        bound = _cauchy_bound(reduced)
        lo, hi = -bound, bound
        # nudge endpoints off roots (bound is strict, so only paranoia)
        total = _variations_at(chain, lo) - _variations_at(chain, hi)

        def _safe_mid(a: Fraction, b: Fraction) -> Fraction:
            for num, den in ((1, 2), (2, 5), (3, 7), (4, 11), (5, 13)):
                m = a + (b - a) * Fraction(num, den)
                if reduced(m) != 0:
                    return m
            raise RuntimeError("could not find a non-root bisection point")

        stack = [(lo, hi, _variations_at(chain, lo), _variations_at(chain, hi))]
        while stack:
            a, b, va, vb = stack.pop()
            n = va - vb
            if n <= 0:
                continue
            if n == 1:
                intervals.append((a, b))
                continue
            m = _safe_mid(a, b)
            vm = _variations_at(chain, m)
            stack.append((a, m, va, vm))
            stack.append((m, b, vm, vb))
        _ = total

    # keep intervals clear of the known rational roots
    cleaned = []
    for a, b in intervals:
        for r in rational:
            while a < r < b:
                m = (a + b) / 2
                if reduced(m) == 0:
                    m = (a + 2 * b) / 3
                va = reduced(a)
                vm = reduced(m)
                if vm == 0 or sign(va) != sign(vm):
                    b = m
                else:
                    a = m
        cleaned.append((a, b))

    roots = [IsolatedRoot(r, r, _multiplicity(r, r, decomp)) for r in rational]
    roots += [IsolatedRoot(a, b, _multiplicity(a, b, decomp)) for a, b in cleaned]
    roots.sort(key=lambda r: (r.lo, r.hi))
    return roots


def refine(root: IsolatedRoot, p: RationalPoly, tol) -> IsolatedRoot:
    """Shrink the isolating interval to width <= tol by sign-preserving bisection."""
    tol = _frac(tol)
    if root.is_exact:
        return root
    sf = squarefree_part(p)
    lo, hi = root.lo, root.hi
    flo = sf(lo)
    if flo == 0:
        return IsolatedRoot(lo, lo, root.multiplicity_hint)
    if sf(hi) == 0:
        return IsolatedRoot(hi, hi, root.multiplicity_hint)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        fmid = sf(mid)
        if fmid == 0:
            return IsolatedRoot(mid, mid, root.multiplicity_hint)
        if sign(fmid) == sign(flo):
            lo, flo = mid, fmid
        else:
            hi = mid
    return IsolatedRoot(lo, hi, root.multiplicity_hint)


def cubic_discriminant(p: RationalPoly) -> Fraction:
    """Discriminant 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2 of a cubic."""
    if p.degree != 3:
        raise ValueError("cubic_discriminant requires degree 3")
    d, c, b, a = p.coeffs
    return (18 * a * b * c * d - 4 * b**3 * d + b**2 * c**2
            - 4 * a * c**3 - 27 * a**2 * d**2)


def sign_at_root(q: RationalPoly, root: IsolatedRoot, p: RationalPoly) -> int:
    """Certified sign of q at the unique root of p isolated by ``root``.

    Returns -1, 0, or +1.  Zero is certified through gcd(p, q); nonzero signs
    through refinement until q has no root in the interval.
    """
    if q.is_zero:
        return 0
    if root.is_exact:
        return sign(q(root.lo))
    psf = squarefree_part(p)
    g = poly_gcd(psf, q)
    if g.degree > 0:
        ga, gb = g(root.lo), g(root.hi)
        if ga == 0 or gb == 0 or sign(ga) != sign(gb):
            return 0
    cur = root
    for _ in range(10_000):
        if cur.is_exact:
            return sign(q(cur.lo))
        qa, qb = q(cur.lo), q(cur.hi)
        if qa != 0 and qb != 0 and sign(qa) == sign(qb):
            if count_real_roots(q, cur.lo, cur.hi) == 0:
                return sign(qa)
        mid = (cur.lo + cur.hi) / 2
        fmid = psf(mid)
        if fmid == 0:
            cur = IsolatedRoot(mid, mid, cur.multiplicity_hint)
            continue
        if sign(fmid) == sign(psf(cur.lo)):
            cur = IsolatedRoot(mid, cur.hi, cur.multiplicity_hint)
        else:
            cur = IsolatedRoot(cur.lo, mid, cur.multiplicity_hint)
    raise RuntimeError("sign_at_root failed to certify a sign")


def exact_sqrt(x: Fraction) -> Fraction | None:
    """sqrt(x) if it is rational, else None.  Requires x >= 0."""
    if x < 0:
        raise ValueError("negative radicand")
    if x == 0:
        return Fraction(0)
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def rational_sqrt(x: Fraction, tol) -> Fraction:
    """A rational approximation to sqrt(x) within tol (x >= 0), deterministic."""
    tol = _frac(tol)
    if x < 0:
        raise ValueError("negative radicand")
    ex = exact_sqrt(x)
    if ex is not None:
        return ex
    m = max(2, int(2 / tol) + 1)
    return Fraction(isqrt((x.numerator * m * m) // x.denominator), m)


def sign_a_plus_b_sqrt(a: Fraction, b: Fraction, d: Fraction) -> int:
    """Certified sign of a + b*sqrt(d), for rational a, b and d >= 0."""
    if d < 0:
        raise ValueError("negative radicand")
    if d == 0 or b == 0:
        return sign(a)
    if a == 0:
        return sign(b)
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    lhs, rhs = a * a, b * b * d
    if lhs == rhs:
        return 0
    if a > 0:
        return 1 if lhs > rhs else -1
    return -1 if lhs > rhs else 1
