"""Ford circle geometry of the integration path and numeric checks of the
modular transformation laws behind the series.

The geometry half is exact rational arithmetic end to end.  The
transformation half evaluates both sides of each law with truncated Euler
products in mpmath and reports relative residuals; the simplified one-line
rewrite of the general law is checked separately because its single
auxiliary multiplier provably cannot exist on some branches.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from mpmath import mp, mpf, mpc

from .exact import (
    HjNotFoundError,
    compute_Hj,
    farey_neighbors,
    negative_inverse,
    omega,
    omega_ratio,
)

__all__ = [
    "ArcEndpoints",
    "FordCircle",
    "TRANSFORMATION_GRID",
    "arc_endpoints",
    "euler_product",
    "ford_circle",
    "fr_simplified_residual",
    "path_seam_matches",
    "single_multiplier",
    "tangency_gap",
    "tau_to_z",
    "verify_f_transformation",
    "verify_fr_transformation",
    "z_to_zeta",
]

Point = tuple[Fraction, Fraction]


# ---------------------------------------------------------------------------
# Exact geometry


@dataclass(frozen=True)
class FordCircle:
    """The circle attached to h/k: center h/k + i/(2k^2), radius 1/(2k^2)."""

    h: int
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be positive")
        if not 0 <= self.h < self.k:
            raise ValueError("h must lie in [0, k)")
        if math.gcd(self.h, self.k) != 1:
            raise ValueError("h/k must be reduced")

    @property
    def center(self) -> Point:
        return (Fraction(self.h, self.k), Fraction(1, 2 * self.k * self.k))

    @property
    def radius(self) -> Fraction:
        return Fraction(1, 2 * self.k * self.k)


def ford_circle(h: int, k: int) -> FordCircle:
    """Construct the circle for a reduced fraction h/k."""
    return FordCircle(h, k)


def tangency_gap(a: FordCircle, b: FordCircle) -> Fraction:
    """Squared center distance minus squared radius sum, exactly.

    Zero iff the circles are tangent (iff |h1 k2 - h2 k1| = 1), positive
    iff disjoint; never negative for distinct circles.
    """
    (ax, ay), (bx, by) = a.center, b.center
    dx, dy = ax - bx, ay - by
    rr = a.radius + b.radius
    return dx * dx + dy * dy - rr * rr


@dataclass(frozen=True)
class ArcEndpoints:
    """Initial and terminal data of one arc of the integration path.

    alpha_* live in the tau upper half plane, z_* are their images under
    z = -ik(tau - h/k), zeta_* = k z_*.  All six are exact rational pairs
    (real, imaginary).
    """

    alpha_I: Point
    alpha_T: Point
    z_I: Point
    z_T: Point
    zeta_I: Point
    zeta_T: Point


def tau_to_z(h: int, k: int, point: Point) -> Point:
    """The map z = -ik(tau - h/k) on exact pairs."""
    re, im = point
    return (k * im, -(k * (re - Fraction(h, k))))


def z_to_zeta(k: int, point: Point) -> Point:
    """The dilation zeta = k z on exact pairs."""
    re, im = point
    return (k * re, k * im)


def arc_endpoints(h: int, k: int, N: int) -> ArcEndpoints:
    """Endpoints of the arc assigned to h/k at Farey order N, in closed form.

    With kp, ks the denominators of the order-N neighbors of h/k:

        alpha_I = h/k - kp/(k(k^2+kp^2)) + i/(k^2+kp^2)
        alpha_T = h/k + ks/(k(k^2+ks^2)) + i/(k^2+ks^2)
        z_I     = k/(k^2+kp^2) + i kp/(k^2+kp^2)
        z_T     = k/(k^2+ks^2) - i ks/(k^2+ks^2)

    and zeta_* = k z_*.  Applying tau_to_z to alpha_* reproduces z_*
    exactly, which the checks rely on; z_* sit on the circle of radius
    1/(2k) about 1/(2k), zeta_* on the circle |zeta - 1/2| = 1/2.
    """
    pred, succ = farey_neighbors(h, k, N)
    kp, ks = pred.k, succ.k
    sp = k * k + kp * kp
    ss = k * k + ks * ks
    hk = Fraction(h, k)
    return ArcEndpoints(
        alpha_I=(hk - Fraction(kp, k * sp), Fraction(1, sp)),
        alpha_T=(hk + Fraction(ks, k * ss), Fraction(1, ss)),
        z_I=(Fraction(k, sp), Fraction(kp, sp)),
        z_T=(Fraction(k, ss), Fraction(-ks, ss)),
        zeta_I=(Fraction(k * k, sp), Fraction(k * kp, sp)),
        zeta_T=(Fraction(k * k, ss), Fraction(-k * ks, ss)),
    )


def path_seam_matches(N: int) -> bool:
    """Closure of the path at order N.

    The path keeps only the right half of the 0/1 arc and re-enters the
    translated left half at the far end, one unit to the right; so the
    terminal point of the (N-1)/N arc must equal the 0/1 initial point
    shifted by +1.  Exact comparison.
    """
    if N < 2:
        raise ValueError("the seam needs at least order 2")
    first = arc_endpoints(0, 1, N)
    last = arc_endpoints(N - 1, N, N)
    shifted = (first.alpha_I[0] + 1, first.alpha_I[1])
    return shifted == last.alpha_T


# ---------------------------------------------------------------------------
# Transformation checks


def _to_mpc(z, precision: int) -> mpc:
    """Exact-in, rounded-once conversion of rational or complex input.

    Accepts an (re, im) pair of Fractions or ints, a complex/mpc, or a
    single real number."""
    if isinstance(z, tuple):
        re, im = z
    elif isinstance(z, (complex, mpc)):
        re, im = z.real, z.imag
    else:
        re, im = z, 0
    with mp.workprec(precision):
        def part(x):
            if isinstance(x, Fraction):
                return mp.mpf(x.numerator) / x.denominator
            return mp.mpf(x)
        return mpc(part(re), part(im))


def euler_product(w: mpc, precision: int) -> mpc:
    """f(e^w) = prod_{m>=1} 1/(1 - e^(mw)) for Re w < 0.

    Truncated once |e^w|^M falls below 2^(-precision-10); the remaining
    factors differ from 1 by less than the working resolution.
    """
    with mp.workprec(precision):
        w = mpc(w)
        rw = w.real
        if rw >= 0:
            raise ValueError("the product needs Re w < 0")
        cutoff = (precision + 10) * mp.log(2)
        M = int(mp.ceil(cutoff / (-rw))) + 1
        q = mp.exp(w)
        qm = mpc(1)
        den = mpc(1)
        for _ in range(M):
            qm *= q
            den *= 1 - qm
        return 1 / den


def _fr_product(w: mpc, s: int, precision: int) -> mpc:
    """f_s(e^w) = f(e^w) f(e^(2^s w)) / f(e^(2w)); s may be negative."""
    with mp.workprec(precision):
        scale = mp.ldexp(1, s)
        return (
            euler_product(w, precision)
            * euler_product(scale * w, precision)
            / euler_product(2 * w, precision)
        )


def verify_f_transformation(h: int, k: int, z, precision: int) -> mpf:
    """Relative residual of the eta-style law for the plain product f.

    Left side: f at e^(2 pi i h/k - 2 pi z/k).  Right side:
    omega(h,k) exp(pi (1/z - z)/(12k)) sqrt(z) f at the reciprocal point
    e^(2 pi i (i/z + H)/k) with h H = -1 (mod k).  z must have positive
    real part; accepts exact rational pairs, mpc, or complex.
    """
    zc = _to_mpc(z, precision)
    if zc.real <= 0:
        raise ValueError("z must have positive real part")
    with mp.workprec(precision):
        two_pi = 2 * mp.pi
        lhs = euler_product(mpc(0, two_pi * h / k) - two_pi * zc / k, precision)
        H = negative_inverse(h, k)
        w = -two_pi / (k * zc) + mpc(0, two_pi * H / k)
        rhs = (
            omega(h, k).value(precision)
            * mp.exp(mp.pi * (1 / zc - zc) / (12 * k))
            * mp.sqrt(zc)
            * euler_product(w, precision)
        )
        return abs(lhs - rhs) / abs(lhs)


def single_multiplier(h: int, k: int, r: int, j: int) -> int:
    """The one multiplier H serving all three factors of the general law.

    Needs h H = -1 (mod k) with 2^(r-j) | H for j >= 1; at j = 0 the
    middle factor asks for 2^r | H while the denominator factor (argument
    doubled, odd modulus) additionally needs H even, so the divisor is
    2^max(r,1).  Raises HjNotFoundError where no such H exists, which is
    every branch with 0 < j < r.
    """
    if r >= 1 or j != 0:
        return compute_Hj(h, k, r, j)
    base = negative_inverse(h, k)
    for t in range(2):
        candidate = base + t * k
        if candidate % 2 == 0:
            return candidate
    raise HjNotFoundError(h, k, r, j)


def _law_phases_coincide(k: int, r: int, j: int, H: int,
                         k2: int, H2: int, k3: int, H3: int) -> bool:
    """Exact check that the printed single-H nome phases equal the
    factor-wise ones modulo full turns."""
    delta = 1 if j == 0 else 0
    mid = (Fraction(2) ** (2 * j - r + 1) * H / k - Fraction(2 * H2, k2)) % 2
    den = (Fraction((2 - delta) ** 2 * H, k) - Fraction(2 * H3, k3)) % 2
    return mid == 0 and den == 0


def _factor_data(h: int, k: int, r: int, j: int):
    """Per-Euler-factor transformation data for f_r at (h, k)."""
    k2 = k >> j
    h2 = (h << (r - j)) % k2
    H2 = negative_inverse(h2, k2)
    if j == 0:
        k3, h3 = k, (2 * h) % k
    else:
        k3, h3 = k >> 1, h % (k >> 1)
    H3 = negative_inverse(h3, k3)
    return h2, k2, H2, h3, k3, H3


def verify_fr_transformation(h: int, k: int, r: int, z, precision: int) -> mpf:
    """Relative residual of the general transformation law for f_r.

    The right side is assembled from the printed prefactors (the
    omega_ratio character, the exponential with coefficient
    2 + 2^(2j-r+1) - (2-delta)^2 over 24kz, the root
    sqrt(z 2^(r-j-1) (2-delta))) while each of the three Euler-product
    factors transforms with its own multiplier.  Where the single printed
    multiplier exists (j = 0 and j = r) the per-factor nome phases are
    asserted, exactly, to agree with it, so this evaluates the printed
    law itself there; for 0 < j < r no single multiplier exists and the
    factor-wise reading is the law's meaning.

    When j = r >= 1 the simplified one-line rewrite is checked as well
    and the larger of the two residuals is returned.
    """
    if not 0 <= r <= 4:
        raise ValueError(f"r = {r} outside 0..4")
    if math.gcd(h, k) != 1 or not 0 <= h < k:
        raise ValueError("h/k must be reduced with 0 <= h < k")
    g = math.gcd(k, 1 << r)
    j = g.bit_length() - 1
    if j == 0 and k % 2 == 0:
        raise ValueError("even k needs r >= 1; the r = 0 law covers odd k only")
    zc = _to_mpc(z, precision)
    if zc.real <= 0:
        raise ValueError("z must have positive real part")

    delta = 1 if j == 0 else 0
    h2, k2, H2, h3, k3, H3 = _factor_data(h, k, r, j)
    try:
        H = single_multiplier(h, k, r, j)
    except HjNotFoundError:
        H = None
    if H is not None:
        # the printed one-multiplier law and the factor-wise evaluation
        # must name the same nomes, exactly
        assert _law_phases_coincide(k, r, j, H, k2, H2, k3, H3)

    with mp.workprec(precision):
        two_pi = 2 * mp.pi
        w = mpc(0, two_pi * h / k) - two_pi * zc / k
        lhs = _fr_product(w, r, precision)

        coeff = Fraction(2) + Fraction(2) ** (2 * j - r + 1) - (2 - delta) ** 2
        expo = mp.pi * _frac(coeff, precision) / (24 * k * zc)
        expo += mp.pi * (1 - (1 << r)) * zc / (12 * k)
        root = mp.sqrt(zc * mp.ldexp(2 - delta, r - j - 1))

        u = -two_pi / (k * zc)
        w1 = u + mpc(0, two_pi * negative_inverse(h, k) / k)
        w2 = mp.ldexp(1, 2 * j - r) * u + mpc(0, two_pi * H2 / k2)
        w3 = mp.ldexp((2 - delta) ** 2, -1) * u + mpc(0, two_pi * H3 / k3)
        factors = (
            euler_product(w1, precision)
            * euler_product(w2, precision)
            / euler_product(w3, precision)
        )
        rhs = omega_ratio(h, k, r, j).value(precision) * mp.exp(expo) * root * factors
        residual = abs(lhs - rhs) / abs(lhs)

    if j == r >= 1:
        simplified = fr_simplified_residual(h, k, r, z, precision)
        if simplified is not None and simplified > residual:
            residual = simplified
    return residual


def _frac(q: Fraction, precision: int) -> mpf:
    with mp.workprec(precision):
        return mp.mpf(q.numerator) / q.denominator


def fr_simplified_residual(h: int, k: int, r: int, z, precision: int) -> Optional[mpf]:
    """Residual of the simplified one-line rewrite of the general law.

    The rewrite replaces the three-factor right side by
    omega_ratio * exp(pi ((2^(2j-r) - 1)/z + (1 - 2^r) z)/(12k))
    * sqrt(z 2^(r-j)) * f_(2j-r) at the single reciprocal nome.  Its
    stated range is floor(r/2) <= j <= r.  Returns None when the branch
    of k falls outside that range or the rewrite is not well formed there
    (j = 0 needs omega at modulus k/2, unavailable for odd k).  On
    branches with floor(r/2) <= j < r the single multiplier does not
    exist; the nearest candidate is used and the residual is expected to
    be of order one, which the verification suite records.
    """
    if not 0 <= r <= 4:
        raise ValueError(f"r = {r} outside 0..4")
    g = math.gcd(k, 1 << r)
    j = g.bit_length() - 1
    if j == 0 and k % 2 == 0:
        raise ValueError("even k needs r >= 1; the r = 0 law covers odd k only")
    if not r // 2 <= j <= r:
        return None
    if j == 0:
        return None
    try:
        H = single_multiplier(h, k, r, j)
    except HjNotFoundError:
        H = negative_inverse(h, k)
    zc = _to_mpc(z, precision)
    if zc.real <= 0:
        raise ValueError("z must have positive real part")
    with mp.workprec(precision):
        two_pi = 2 * mp.pi
        w = mpc(0, two_pi * h / k) - two_pi * zc / k
        lhs = _fr_product(w, r, precision)
        expo = mp.pi * (mp.ldexp(1, 2 * j - r) - 1) / (12 * k * zc)
        expo += mp.pi * (1 - (1 << r)) * zc / (12 * k)
        root = mp.sqrt(zc * mp.ldexp(1, r - j))
        u = -two_pi / (k * zc) + mpc(0, two_pi * H / k)
        rhs = omega_ratio(h, k, r, j).value(precision) * mp.exp(expo) * root \
            * _fr_product(u, 2 * j - r, precision)
        return abs(lhs - rhs) / abs(lhs)


# Fixed sample grid for the transformation checks: (h, k, r, z) with z as an
# exact (real, imag) pair.  Covers every (r, branch) combination that carries
# terms, r = 0..4, including the trivial point h = 0, k = 1.
_F = Fraction
TRANSFORMATION_GRID: tuple[tuple[int, int, int, tuple[Fraction, Fraction]], ...] = (
    (0, 1, 0, (_F(1), _F(0))),
    (1, 3, 0, (_F(1, 2), _F(1, 5))),
    (2, 5, 0, (_F(3, 4), _F(0))),
    (1, 3, 1, (_F(2), _F(0))),
    (1, 2, 1, (_F(1), _F(0))),
    (3, 4, 1, (_F(1, 2), _F(1, 5))),
    (1, 5, 2, (_F(3, 4), _F(0))),
    (1, 2, 2, (_F(1), _F(0))),
    (1, 4, 2, (_F(1), _F(0))),
    (3, 8, 2, (_F(1, 2), _F(1, 5))),
    (1, 7, 3, (_F(1), _F(0))),
    (1, 2, 3, (_F(3, 4), _F(0))),
    (1, 4, 3, (_F(1), _F(1, 3))),
    (1, 8, 3, (_F(1), _F(0))),
    (1, 3, 4, (_F(1, 2), _F(1, 5))),
    (1, 2, 4, (_F(1), _F(0))),
    (3, 4, 4, (_F(3, 4), _F(0))),
    (1, 8, 4, (_F(1), _F(1, 3))),
    (1, 16, 4, (_F(1), _F(0))),
    (5, 16, 4, (_F(1, 2), _F(1, 5))),
)
