"""High-precision evaluation of the convergent partition series.

p_r(n) for r = 0..4 counts overpartitions (r = 0), ordinary partitions
(r = 1), partitions without repeated odd parts (r = 2), and the two
further members of the family.  Each k-term couples an exact
root-of-unity character sum with a sinh kernel; everything floating runs
in mpmath at a caller-chosen binary precision and the final rounding is
certified by a residual check against the nearest integer.

The three classical one-formula series (partitions, overpartitions,
distinct-odd-parts) are implemented independently of the branch structure
of the general series so the two routes can be compared term by term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from mpmath import mp, mpf, mpc

from .exact import ExactRootOfUnity, omega, omega_ratio

__all__ = [
    "SeriesParams",
    "SeriesResult",
    "akn_sum",
    "bessel_i_3_2",
    "default_precision",
    "default_terms",
    "hr_asymptotic",
    "p_r_series",
    "p_rademacher",
    "pbar_zuckerman",
    "pod_series",
    "pod_term",
    "rademacher_term",
    "sinh_term_derivative",
    "theorem_term",
    "zuckerman_term",
]

MIN_PRECISION = 64
MAX_RETRIES = 3
R_MAX = 4


@dataclass(frozen=True)
class SeriesParams:
    """One evaluation request.

    terms and precision may be left as None, in which case the truncation
    point and working precision come from default_terms / default_precision.
    """

    r: int
    n: int
    terms: int | None = None
    precision: int | None = None


@dataclass(frozen=True)
class SeriesResult:
    """Outcome of a certified evaluation.

    value is the rounded integer, raw the floating sum it was rounded
    from, residual the distance |raw - value|.  status is "certified"
    when the residual is below 1/4, "uncertified" when certification
    failed even after retries, "oracle" when the value was taken from the
    exact expansion instead of the series (n = 0).
    """

    value: int
    raw: mpf
    residual: mpf
    terms_used: int
    precision_used: int
    status: str


def default_terms(n: int) -> int:
    """Truncation point K for target n: max(8, ceil(2 sqrt n) + 8)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    root = math.isqrt(4 * n)
    if root * root < 4 * n:
        root += 1
    return max(8, root + 8)


def _leading_argument(n: int, r: int) -> float:
    """Largest sinh argument over all branches at their smallest k.

    The k = 1 term of the odd-k sum has argument
    pi*sqrt(m*(2 + 2^r)/2^(r+1))/6 with m = 24n - 2^r + 1; branch j
    contributes pi*sqrt(m*(2^(2j-r) - 1))/(6*2^j) starting at k = 2^j.
    """
    m = 24 * n - (1 << r) + 1
    best = math.sqrt(m * (2 + (1 << r)) / (1 << (r + 1))) / 6
    for j in range(1 + r // 2, r + 1):
        a = math.sqrt(m * ((1 << (2 * j - r)) - 1)) / (6 * (1 << j))
        best = max(best, a)
    return math.pi * best


def default_precision(n: int, r: int, terms: int) -> int:
    """Working precision in bits: the magnitude of the dominant term plus
    64 guard bits plus log2 of the term count, rounded up to a multiple
    of 64 (never down)."""
    if n < 1:
        raise ValueError("n must be positive for the series branch")
    bits = math.ceil(_leading_argument(n, r) / math.log(2))
    bits += 64 + terms.bit_length()
    return ((bits + 63) // 64) * 64


def _phase_value(q: Fraction, precision: int) -> mpc:
    return ExactRootOfUnity(q).value(precision)


def akn_sum(k: int, n: int, r: int, j: int, precision: int) -> mpc:
    """Character sum over h in [0, k) coprime to k.

    Each summand is omega_ratio(h, k, r, j) times e^(-2 pi i n h / k);
    both factors are combined into a single exact rational exponent and
    evaluated numerically once per h.  Depends on n only through n mod k,
    which the memoization key exploits.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _akn_cached(k, n % k, r, j, max(precision, MIN_PRECISION))


@lru_cache(maxsize=1 << 17)
def _akn_cached(k: int, n_red: int, r: int, j: int, precision: int) -> mpc:
    with mp.workprec(precision):
        total = mpc(0)
        for h in range(k):
            if math.gcd(h, k) != 1:
                continue
            q = omega_ratio(h, k, r, j).exponent - Fraction(2 * n_red * h, k)
            total += _phase_value(q, precision)
        return total


def sinh_term_derivative(c: mpf, m0: int, precision: int) -> mpf:
    """Closed-form n-derivative of sinh(c sqrt(m))/sqrt(m) at m = m0,
    where m advances by 24 per unit of n:

        24 * (c cosh(c sqrt m)/(2m) - sinh(c sqrt m)/(2 m^(3/2))).

    Series with a different stride fold the ratio of strides into their
    prefactor rather than changing this kernel.
    """
    if m0 <= 0:
        raise ValueError("m0 must be positive")
    with mp.workprec(precision):
        sm = mp.sqrt(m0)
        x = c * sm
        return 24 * (c * mp.cosh(x) / (2 * m0) - mp.sinh(x) / (2 * m0 * sm))


def _exp_term_derivative(c: mpf, m0: int, precision: int) -> mpf:
    """Same derivative with the exp kernel in place of sinh."""
    if m0 <= 0:
        raise ValueError("m0 must be positive")
    with mp.workprec(precision):
        sm = mp.sqrt(m0)
        e = mp.exp(c * sm)
        return 24 * (c * e / (2 * m0) - e / (2 * m0 * sm))


def bessel_i_3_2(z) -> mpf:
    """Modified Bessel I_(3/2) by its elementary closed form,
    sqrt(2z/pi) * (cosh z / z - sinh z / z^2), for z > 0.

    Evaluates at the ambient mpmath precision.  The sinh kernel of the
    series is this function in disguise, which the tests exploit.
    """
    z = mpf(z)
    if z <= 0:
        raise ValueError("z must be positive")
    return mp.sqrt(2 * z / mp.pi) * (mp.cosh(z) / z - mp.sinh(z) / z ** 2)


# ---------------------------------------------------------------------------
# Terms of the general series


def _branch(k: int, r: int) -> int | None:
    """Which part of the series the summation index k falls in.

    0 for odd k (the leading sum); j for even k with gcd(k, 2^r) = 2^j
    when j lies in the admitted range 1 + floor(r/2) .. r; None when the
    k-term vanishes identically (such k carry no branch)."""
    if k % 2:
        return 0
    g = math.gcd(k, 1 << r)
    j = g.bit_length() - 1
    if 1 + r // 2 <= j <= r:
        return j
    return None


def theorem_term(n: int, r: int, k: int, precision: int) -> mpf:
    """The k-th term of the general series for p_r(n); 0 when k drops out."""
    if not 0 <= r <= R_MAX:
        raise ValueError(f"r = {r} outside 0..{R_MAX}")
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    j = _branch(k, r)
    with mp.workprec(precision):
        if j is None:
            return mpf(0)
        m0 = 24 * n - (1 << r) + 1
        if j == 0:
            prefactor = mp.sqrt(mpf(2) ** (r + 1)) * mp.sqrt(3) / mp.pi
            c = mp.pi * mp.sqrt(mpf(2 + (1 << r)) / (1 << (r + 1))) / (6 * k)
        else:
            prefactor = mp.sqrt(mpf(2) ** (2 - j + r)) * mp.sqrt(3) / mp.pi
            c = mp.pi * mp.sqrt(mpf((1 << (2 * j - r)) - 1)) / (6 * k)
        a = akn_sum(k, n, r, j, precision).real
        return prefactor * mp.sqrt(k) * a * sinh_term_derivative(c, m0, precision)


# ---------------------------------------------------------------------------
# Terms of the three classical series, implemented from their own shapes


def _character_sum(
    k: int, n: int, exponent_of: Callable[[int], Fraction], precision: int
) -> mpc:
    """sum over h coprime to k of e^(pi i exponent_of(h)) e^(-2 pi i n h/k)."""
    with mp.workprec(precision):
        total = mpc(0)
        for h in range(k):
            if math.gcd(h, k) != 1:
                continue
            q = exponent_of(h) - Fraction(2 * n * h, k)
            total += _phase_value(q, precision)
        return total


def rademacher_term(n: int, k: int, precision: int) -> mpf:
    """k-th term of the classical convergent series for p(n).

    The kernel d/dn sinh((pi/k) sqrt(2/3 (n - 1/24)))/sqrt(n - 1/24) is
    evaluated through the substitution m = 24n - 1, which turns it into
    sqrt(24) times the shared sinh kernel with c = pi/(6k)."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    with mp.workprec(precision):
        a = _character_sum(k, n, lambda h: omega(h, k).exponent, precision).real
        c = mp.pi / (6 * k)
        kernel = mp.sqrt(24) * sinh_term_derivative(c, 24 * n - 1, precision)
        return mp.sqrt(k) * a * kernel / (mp.pi * mp.sqrt(2))


def zuckerman_term(n: int, k: int, precision: int) -> mpf:
    """k-th term of the overpartition series; only odd k carry terms.

    Character omega(h,k)^2/omega(2h,k), kernel d/dn sinh(pi sqrt(n)/k)/sqrt(n);
    m = n advances by 1 per unit of n, hence the shared kernel divided by 24.
    """
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    with mp.workprec(precision):
        if k % 2 == 0:
            return mpf(0)

        def expo(h: int) -> Fraction:
            return 2 * omega(h, k).exponent - omega((2 * h) % k, k).exponent

        a = _character_sum(k, n, expo, precision).real
        c = mp.pi / k
        kernel = sinh_term_derivative(c, n, precision) / 24
        return mp.sqrt(k) * a * kernel / (2 * mp.pi)


def pod_term(n: int, k: int, precision: int) -> mpf:
    """k-th term of the distinct-odd-parts series.

    The weight sqrt(k (1 - (-1)^k + floor(gcd(k,4)/4))) kills k = 2 mod 4
    outright; the character splits by gcd(k, 4) and the kernel runs over
    m = 8n - 1, stride 8, hence the shared kernel divided by 3.
    """
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    with mp.workprec(precision):
        g4 = math.gcd(k, 4)
        weight = k * (1 - (-1) ** k + g4 // 4)
        if weight == 0:
            return mpf(0)
        g2 = math.gcd(k, 2)
        k4, k2 = k // g4, k // g2

        def expo(h: int) -> Fraction:
            q = omega(h, k).exponent
            q += omega((4 * h // g4) % k4, k4).exponent
            q -= omega((2 * h // g2) % k2, k2).exponent
            return q

        a = _character_sum(k, n, expo, precision).real
        c = mp.pi * mp.sqrt(g4) / (4 * k)
        kernel = sinh_term_derivative(c, 8 * n - 1, precision) / 3
        return 2 * mp.sqrt(weight) * a * kernel / mp.pi


# ---------------------------------------------------------------------------
# Certified summation


def _certified(
    term: Callable[[int, int, int], mpf],
    n: int,
    terms: int | None,
    precision: int | None,
    r_hint: int,
) -> SeriesResult:
    """Sum term(n, k, p) for k = 1..K in one accumulator and round with a
    residual certificate.  Automatic precision retries a shortfall at
    doubled precision up to MAX_RETRIES times; a pinned precision is
    honored as given, one shot."""
    K = default_terms(n) if terms is None else terms
    if K < 1:
        raise ValueError("terms must be positive")
    pinned = precision is not None
    p = precision if pinned else default_precision(n, r_hint, K)
    if p < MIN_PRECISION:
        raise ValueError(f"precision below the floor of {MIN_PRECISION} bits")
    attempts = 1 if pinned else 1 + MAX_RETRIES
    for _ in range(attempts):
        with mp.workprec(p):
            total = mpf(0)
            for k in range(1, K + 1):
                total += term(n, k, p)
            value = int(mp.nint(total))
            residual = abs(total - value)
            if residual < mpf(1) / 4:
                return SeriesResult(value, total, residual, K, p, "certified")
        last = SeriesResult(value, total, residual, K, p, "uncertified")
        p *= 2
    return last


def p_r_series(params: SeriesParams) -> SeriesResult:
    """Evaluate the general series for p_r(n), r = 0..4, and round.

    n = 0 bypasses the series (its kernel argument would be at or below
    zero) and reports the constant term 1 with status "oracle".  The sum
    runs over strictly increasing k into a single accumulator, so a fixed
    (terms, precision) pair reproduces identical bits on every run.
    """
    r, n = params.r, params.n
    if not 0 <= r <= R_MAX:
        raise ValueError(f"r = {r} outside 0..{R_MAX}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return SeriesResult(1, mpf(1), mpf(0), 0, 0, "oracle")

    def term(nn: int, k: int, p: int) -> mpf:
        return theorem_term(nn, r, k, p)

    return _certified(term, n, params.terms, params.precision, r)


def p_rademacher(n: int, terms: int | None = None, precision: int | None = None) -> SeriesResult:
    """p(n) by the classical convergent series, certified rounding.

    Independent of the general series' branch machinery; n >= 1 (the
    n = 0 coefficient is 1 by convention and is served by the oracle)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return _certified(rademacher_term, n, terms, precision, 1)


def pbar_zuckerman(n: int, terms: int | None = None, precision: int | None = None) -> SeriesResult:
    """Overpartition count by the odd-k series, certified rounding; n >= 1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return _certified(zuckerman_term, n, terms, precision, 0)


def pod_series(n: int, terms: int | None = None, precision: int | None = None) -> SeriesResult:
    """Distinct-odd-parts count by its one-line series, certified rounding;
    n >= 1.  k = 2 mod 4 contributes exact zeros, kept in the loop so the
    truncation index means the same thing as everywhere else."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return _certified(pod_term, n, terms, precision, 2)


def hr_asymptotic(n: int, alpha: float, precision: int) -> mpf:
    """The original finite asymptotic sum for p(n) with the exp kernel,
    truncated at k = floor(alpha sqrt n).  Returns the raw real estimate;
    no integrality certificate is claimed (the error term is O(n^(-1/4))
    only for suitable alpha)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if precision < MIN_PRECISION:
        raise ValueError(f"precision below the floor of {MIN_PRECISION} bits")
    with mp.workprec(precision):
        kmax = int(mp.floor(mpf(alpha) * mp.sqrt(n)))
        total = mpf(0)
        for k in range(1, kmax + 1):
            a = _character_sum(k, n, lambda h, kk=k: omega(h, kk).exponent, precision).real
            kernel = mp.sqrt(24) * _exp_term_derivative(mp.pi / (6 * k), 24 * n - 1, precision)
            total += mp.sqrt(k) * a * kernel / (2 * mp.pi * mp.sqrt(2))
        return total
