"""Exact integer ground truth for the partition counts.

Coefficient tables come from truncated Euler-factor products over Z.  A
pentagonal recurrence, two theta-style reciprocal checks, and brute-force
enumeration of the combinatorial readings give independent routes to the
same numbers.  No floating point enters this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, TextIO

__all__ = [
    "CoefficientTable",
    "enumerate_pr",
    "euler_pentagonal_p",
    "expand_fr",
    "gauss_square_check",
    "gauss_triangular_check",
    "pentagonal_check",
    "reciprocal_series",
]

ENUMERATION_CAP = 24


@dataclass(frozen=True)
class CoefficientTable:
    """Power series coefficients c_0..c_N plus a note saying what they expand."""

    coefficients: tuple[int, ...]
    descriptor: str

    def __len__(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, i: int) -> int:
        return self.coefficients[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.coefficients)

    def dump(self, stream: TextIO) -> None:
        """One decimal integer per line; line i is the coefficient of x^i."""
        for c in self.coefficients:
            stream.write(f"{c}\n")


def expand_fr(r: int, N: int) -> CoefficientTable:
    """Coefficients of prod_{m>=1} (1 + x^m)/(1 - x^(2^r m)) through x^N.

    Every numerator factor is applied as a backward in-place update and
    every denominator factor as the forward prefix recurrence, O(N^2) in
    total.  r = 1 gives the partition numbers, r = 0 the overpartition
    numbers, r = 2 the partitions without repeated odd parts.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    if N < 0:
        raise ValueError("N must be nonnegative")
    a = [0] * (N + 1)
    a[0] = 1
    for m in range(1, N + 1):  # multiply by (1 + x^m)
        for i in range(N, m - 1, -1):
            a[i] += a[i - m]
    step = 1 << r
    for d in range(step, N + 1, step):  # divide by (1 - x^d)
        for i in range(d, N + 1):
            a[i] += a[i - d]
    return CoefficientTable(
        tuple(a), f"product of (1+x^m)/(1-x^({step}m)) for m >= 1"
    )


def euler_pentagonal_p(N: int) -> CoefficientTable:
    """Partition numbers p(0)..p(N) by the pentagonal number recurrence.

    p(n) = sum_j (-1)^(j+1) [p(n - j(3j-1)/2) + p(n - j(3j+1)/2)], an
    independent route that never touches the product expansion.
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    p = [0] * (N + 1)
    p[0] = 1
    for n in range(1, N + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > n:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[n - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            j += 1
        p[n] = total
    return CoefficientTable(tuple(p), "pentagonal recurrence for p(n)")


def reciprocal_series(table: CoefficientTable, N: int) -> CoefficientTable:
    """Multiplicative inverse of a power series with constant term 1."""
    if len(table) == 0 or table[0] != 1:
        raise ValueError("reciprocal needs constant term 1")
    if N < 0 or N >= len(table):
        raise ValueError(f"N = {N} outside the table (length {len(table)})")
    b = [0] * (N + 1)
    b[0] = 1
    for n in range(1, N + 1):
        b[n] = -sum(table[i] * b[n - i] for i in range(1, n + 1))
    return CoefficientTable(tuple(b), f"reciprocal of: {table.descriptor}")


def gauss_square_check(N: int) -> bool:
    """The overpartition series inverts to the alternating square theta.

    Reciprocal of expand_fr(0, N) must be 1 at exponent 0, 2*(-1)^s at
    every square s^2, and zero elsewhere.
    """
    inv = reciprocal_series(expand_fr(0, N), N)
    expected = [0] * (N + 1)
    expected[0] = 1
    s = 1
    while s * s <= N:
        expected[s * s] = 2 * (-1) ** s
        s += 1
    return list(inv.coefficients) == expected


def gauss_triangular_check(N: int) -> bool:
    """The distinct-odd-parts series inverts to the alternating triangular theta.

    Reciprocal of expand_fr(2, N) must be supported on 2s^2 - s over all
    integers s (those exponents are distinct), with coefficient (-1)^s.
    """
    inv = reciprocal_series(expand_fr(2, N), N)
    expected = [0] * (N + 1)
    s = 0
    while 2 * s * s - s <= N:
        expected[2 * s * s - s] = (-1) ** s
        s += 1
    s = -1
    while 2 * s * s - s <= N:
        expected[2 * s * s - s] = (-1) ** s
        s -= 1
    return list(inv.coefficients) == expected


def pentagonal_check(N: int) -> bool:
    """The partition series inverts to the pentagonal number theta.

    Reciprocal of expand_fr(1, N) must be supported on j(3j-1)/2 over all
    integers j, with coefficient (-1)^j.
    """
    inv = reciprocal_series(expand_fr(1, N), N)
    expected = [0] * (N + 1)
    j = 0
    while j * (3 * j - 1) // 2 <= N:
        expected[j * (3 * j - 1) // 2] = (-1) ** j
        j += 1
    j = -1
    while j * (3 * j - 1) // 2 <= N:
        expected[j * (3 * j - 1) // 2] = (-1) ** j
        j -= 1
    return list(inv.coefficients) == expected


# ---------------------------------------------------------------------------
# Brute-force enumeration of the combinatorial readings


def _count_marked(n: int, r: int) -> int:
    """Overpartitions of n whose unmarked parts are all multiples of 2^r.

    An overpartition marks at most the final occurrence of each part size.
    Recursion over sizes: choose a size s, its multiplicity m, and whether
    its last copy is marked; any unmarked copy of s then requires
    2^r | s.  Each generated object is counted once.
    """
    step = 1 << r

    def rec(remaining: int, max_size: int) -> int:
        if remaining == 0:
            return 1
        count = 0
        for s in range(min(remaining, max_size), 0, -1):
            for m in range(1, remaining // s + 1):
                for marked in (False, True):
                    unmarked = m - 1 if marked else m
                    if unmarked and s % step:
                        continue
                    count += rec(remaining - m * s, s - 1)
        return count

    return rec(n, n)


def _count_odd_or_divisible(n: int, r: int) -> int:
    """Partitions of n whose parts are odd or divisible by 2^r."""
    step = 1 << r

    def rec(remaining: int, max_size: int) -> int:
        if remaining == 0:
            return 1
        count = 0
        for s in range(min(remaining, max_size), 0, -1):
            if s % 2 == 0 and s % step != 0:
                continue
            count += rec(remaining - s, s)
        return count

    return rec(n, n)


def _count_distinct_nonmultiples(n: int, r: int) -> int:
    """Partitions of n where parts not divisible by 2^(r-1) appear once."""
    step = 1 << (r - 1)

    def rec(remaining: int, max_size: int) -> int:
        if remaining == 0:
            return 1
        count = 0
        for s in range(min(remaining, max_size), 0, -1):
            if s % step == 0:
                count += rec(remaining - s, s)
            else:
                count += rec(remaining - s, s - 1)
        return count

    return rec(n, n)


def enumerate_pr(r: int, n: int, interpretation: int) -> int:
    """Count p_r(n) by generating the objects of one combinatorial reading.

    interpretation 1: overpartitions with every unmarked part a multiple
    of 2^r (valid for all r >= 0).
    interpretation 2: partitions into parts odd or divisible by 2^r.
    interpretation 3: partitions where parts not divisible by 2^(r-1) are
    distinct.  Readings 2 and 3 require r >= 1.

    Exponential-time generation; capped at n <= 24 by design.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    if not 0 <= n <= ENUMERATION_CAP:
        raise ValueError(f"enumeration is capped at n <= {ENUMERATION_CAP}")
    if interpretation == 1:
        return _count_marked(n, r)
    if interpretation == 2:
        if r < 1:
            raise ValueError("reading 2 needs r >= 1")
        return _count_odd_or_divisible(n, r)
    if interpretation == 3:
        if r < 1:
            raise ValueError("reading 3 needs r >= 1")
        return _count_distinct_nonmultiples(n, r)
    raise ValueError(f"unknown interpretation {interpretation}")
