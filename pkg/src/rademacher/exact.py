"""Exact arithmetic underneath the partition series.

Dedekind sums, the eta multiplier omega(h, k) kept as an exact root of
unity, Farey sequences with their neighbor structure, and the congruence
solutions used by the modular transformation checks.  Nothing in this
module rounds: every quantity is an integer or a Fraction until the caller
asks a root of unity for its numeric value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from mpmath import mp, mpc

__all__ = [
    "ExactRootOfUnity",
    "FareyFraction",
    "HjNotFoundError",
    "compute_Hj",
    "dedekind_sum",
    "dedekind_sum_direct",
    "farey_neighbors",
    "farey_sequence",
    "negative_inverse",
    "omega",
    "omega_ratio",
]


class HjNotFoundError(ArithmeticError):
    """No multiplier satisfies both the congruence and the divisibility."""

    def __init__(self, h: int, k: int, r: int, j: int):
        self.case = (h, k, r, j)
        super().__init__(
            f"no H with h*H = -1 (mod k) and 2^(r-j) | H exists for "
            f"(h, k, r, j) = ({h}, {k}, {r}, {j})"
        )


def _check_pair(h: int, k: int) -> None:
    if k < 1:
        raise ValueError(f"modulus k = {k} must be positive")
    if not 0 <= h < k:
        raise ValueError(f"h = {h} out of range for k = {k}")
    if math.gcd(h, k) != 1:
        raise ValueError(f"h = {h} and k = {k} are not coprime")


def dedekind_sum(h: int, k: int) -> Fraction:
    """Dedekind sum s(h, k), exact, via the reciprocity descent.

    Each Euclidean step trades s(h, k) for -s(k mod h, h) plus the rational
    correction (h^2 + k^2 + 1)/(12hk) - 1/4, so the cost is O(log k) like a
    gcd.  The corrections accumulate over one common unreduced denominator;
    a single reduction happens at the end.
    """
    _check_pair(h, k)
    num, den, quarters, sign = 0, 1, 0, 1
    while h:
        step = 12 * h * k
        num = num * step + sign * (h * h + k * k + 1) * den
        den *= step
        quarters += sign
        sign = -sign
        h, k = k % h, h
    # descent ends at s(0, 1) = 0 because gcd(h, k) = 1
    return Fraction(num, den) - Fraction(quarters, 4)


def dedekind_sum_direct(h: int, k: int) -> Fraction:
    """The defining sum of s(h, k), O(k); retained as the oracle.

    With gcd(h, k) = 1 the sawtooth argument hr/k is never an integer for
    0 < r < k, so sum_r (r/k)((hr/k)) collapses to the integer core
    sum_r r * (hr mod k) over k^2, minus (k - 1)/4.
    """
    _check_pair(h, k)
    core = 0
    hr = 0
    for r in range(1, k):
        hr += h
        if hr >= k:
            hr -= k
        core += r * hr
    return Fraction(core, k * k) - Fraction(k - 1, 4)


@dataclass(frozen=True)
class ExactRootOfUnity:
    """A number e^(pi i q) held as its exact rational exponent q.

    The exponent lives in [0, 2); multiplication and division add and
    subtract exponents without any rounding.  Numeric evaluation happens
    once, in value(), at whatever precision the caller wants.
    """

    exponent: Fraction

    def __post_init__(self):
        object.__setattr__(self, "exponent", Fraction(self.exponent) % 2)

    def __mul__(self, other: "ExactRootOfUnity") -> "ExactRootOfUnity":
        return ExactRootOfUnity(self.exponent + other.exponent)

    def __truediv__(self, other: "ExactRootOfUnity") -> "ExactRootOfUnity":
        return ExactRootOfUnity(self.exponent - other.exponent)

    def conjugate(self) -> "ExactRootOfUnity":
        return ExactRootOfUnity(-self.exponent)

    def value(self, precision: int) -> mpc:
        """e^(pi i q) as an mpc at the given binary precision."""
        if precision < 1:
            raise ValueError("precision must be positive")
        q = self.exponent
        with mp.workprec(precision):
            x = mp.mpf(q.numerator) / q.denominator
            return mpc(mp.cospi(x), mp.sinpi(x))


@lru_cache(maxsize=1 << 16)
def omega(h: int, k: int) -> ExactRootOfUnity:
    """The eta multiplier omega(h, k) = e^(pi i s(h, k))."""
    return ExactRootOfUnity(dedekind_sum(h, k))


@lru_cache(maxsize=1 << 16)
def omega_ratio(h: int, k: int, r: int, j: int) -> ExactRootOfUnity:
    """The multiplier ratio attached to one k-term of the main series.

    j = 0 (k odd):    omega(h,k) * omega(2^r h, k) / omega(2h, k)
    1 <= j <= r:      omega(h,k) * omega(2^(r-j) h, k/2^j) / omega(h, k/2),
                      where 2^j is exactly the power of two dividing
                      gcd(k, 2^r).

    Inner arguments are reduced modulo their moduli before the lookup.
    All combination is exact exponent arithmetic; cancellations such as
    r = 1, j = 0 collapsing to plain omega(h, k) happen identically to
    zero, not to roundoff.
    """
    _check_pair(h, k)
    if not 0 <= j <= r:
        raise ValueError(f"branch index j = {j} outside 0..r = {r}")
    if j == 0:
        if k % 2 == 0:
            raise ValueError(f"j = 0 requires odd k, got k = {k}")
        return omega(h, k) * omega((h << r) % k, k) / omega((2 * h) % k, k)
    if math.gcd(k, 1 << r) != 1 << j:
        raise ValueError(
            f"k = {k} does not sit on branch j = {j} for r = {r}"
        )
    k2 = k >> j
    k3 = k >> 1
    return omega(h, k) * omega((h << (r - j)) % k2, k2) / omega(h % k3, k3)


def negative_inverse(h: int, k: int) -> int:
    """Smallest H >= 0 with h*H = -1 (mod k)."""
    _check_pair(h, k)
    if k == 1:
        return 0
    return (-pow(h, -1, k)) % k


def compute_Hj(h: int, k: int, r: int, j: int) -> int:
    """Smallest H >= 0 with h*H = -1 (mod k) and 2^(r-j) dividing H.

    Searches the residue class H0 + t*k for t < 2^(r-j).  When k is even
    every candidate is odd (h is then odd and H = -h^(-1) mod even k), so
    for 0 < j < r no candidate can carry the required factor of two and
    HjNotFoundError is raised; j = r always succeeds with t = 0.
    """
    _check_pair(h, k)
    if not 0 <= j <= r:
        raise ValueError(f"branch index j = {j} outside 0..r = {r}")
    if math.gcd(k, 1 << r) != 1 << j:
        raise ValueError(
            f"k = {k} does not sit on branch j = {j} for r = {r}"
        )
    base = negative_inverse(h, k)
    divisor = 1 << (r - j)
    for t in range(divisor):
        candidate = base + t * k
        if candidate % divisor == 0:
            return candidate
    raise HjNotFoundError(h, k, r, j)


# ---------------------------------------------------------------------------
# Farey sequences


@dataclass(frozen=True)
class FareyFraction:
    """A reduced fraction h/k with 0 <= h < k."""

    h: int
    k: int

    def __post_init__(self):
        _check_pair(self.h, self.k)

    @property
    def value(self) -> Fraction:
        return Fraction(self.h, self.k)

    def __str__(self) -> str:
        return f"{self.h}/{self.k}"


def farey_sequence(N: int) -> list[FareyFraction]:
    """All reduced h/k in [0, 1) with k <= N, in increasing order.

    Uses the next-term recurrence: with consecutive elements a/b < c/d the
    following element is (tc - a)/(td - b), t = floor((N + b)/d).  Stops
    just before 1/1.
    """
    if N < 1:
        raise ValueError("order must be at least 1")
    out = [FareyFraction(0, 1)]
    a, b, c, d = 0, 1, 1, N
    while c < d:
        out.append(FareyFraction(c, d))
        t = (N + b) // d
        a, b, c, d = c, d, t * c - a, t * d - b
    return out


def farey_neighbors(h: int, k: int, N: int) -> tuple[FareyFraction, FareyFraction]:
    """Immediate (predecessor, successor) of h/k in the order-N sequence.

    The sequence is treated as cyclic on [0, 1): the predecessor of 0/1 is
    (N-1)/N and the successor of (N-1)/N is 0/1.  Neighbors come from the
    unique denominators in (N-k, N] solving h*kp = 1 and h*ks = -1 (mod k);
    reduction of the numerator mod the new denominator realizes the wrap.
    """
    _check_pair(h, k)
    if k > N:
        raise ValueError(f"{h}/{k} does not belong to the order-{N} sequence")
    if N < 1:
        raise ValueError("order must be at least 1")
    hinv = 0 if k == 1 else pow(h, -1, k)
    kp = N - (N - hinv) % k
    ks = N - (N + hinv) % k
    hp = (h * kp - 1) // k
    hs = (h * ks + 1) // k
    return FareyFraction(hp % kp, kp), FareyFraction(hs % ks, ks)
