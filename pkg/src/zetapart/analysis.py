"""Zeta sums, density matrix identities, and empirical density scans.

The density matrix has cell (m, k) of density 1/m^k.  Column m sums to
1/(m(m-1)) exactly; row k sums to zeta(k)-1; the whole matrix sums to 1.
Rational identities are done in Fraction arithmetic, reals in float64 with
an Euler-Maclaurin tail so truncation error stays far below the eps
contract.

Also hosts the powerfree-class machinery: max_exponent classifies x by the
largest exponent in its prime factorization, with the asymptotic share of
class k being 1/zeta(k+1) - 1/zeta(k).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import partition
from .numeral import left_factorial
from .selectors import SetSelector, parse_selector

__all__ = [
    "zeta_minus_one",
    "zeta_row_sum",
    "row_sum_tail_bound",
    "inverse_zeta",
    "column_sum_identity",
    "column_partial_sum",
    "column_tail",
    "telescoping_column_sum",
    "DensityTarget",
    "DensityReport",
    "empirical_density",
    "max_exponent",
    "max_exponent_sieve",
    "powerfree_count",
    "powerfree_density",
    "MAX_SIEVE",
]

# int8 sieve of this size is ~1 GB; beyond that is not desk scale
MAX_SIEVE = 10**9

_ZETA_CUTOFF = 100  # direct summation below, Euler-Maclaurin tail above


def zeta_minus_one(k: int, eps: float = 1e-12) -> float:
    """Sum of i^-k over i >= 2, absolute error well under eps.

    Terms below T = 100 are summed directly; the rest comes from the
    Euler-Maclaurin expansion through the B_4 term,

        sum_{i>=T} i^-k = T^(1-k)/(k-1) + T^-k/2 + k T^-(k+1)/12
                          - k(k+1)(k+2) T^-(k+3)/720 + R,

    with |R| <= 2 k(k+1)(k+2)(k+3)(k+4) T^-(k+5)/30240, below 5e-16 at
    k = 2 and shrinking geometrically in k.  Tolerances tighter than 1e-12
    are refused rather than silently missed: float64 rounding in the head
    sum is already ~1e-16.
    """
    if k < 2:
        raise ValueError(f"zeta_minus_one requires k >= 2 (series diverges), got {k}")
    if eps < 1e-12:
        raise ValueError(f"eps below 1e-12 is not honored in float64, got {eps}")
    t = _ZETA_CUTOFF
    head = math.fsum(i ** (-k) for i in range(2, t))
    tail = (
        t ** (1 - k) / (k - 1)
        + t ** (-k) / 2
        + k * t ** (-(k + 1)) / 12
        - k * (k + 1) * (k + 2) * t ** (-(k + 3)) / 720
    )
    return head + tail


def zeta_row_sum(terms: int) -> float:
    """Partial sum of zeta(k)-1 for k = 2..terms; tends to 1."""
    if terms < 2:
        raise ValueError(f"row sum needs terms >= 2, got {terms}")
    return math.fsum(zeta_minus_one(k) for k in range(2, terms + 1))


def row_sum_tail_bound(terms: int) -> float:
    """Bound on 1 - zeta_row_sum(terms): the tail is below 2*2^-terms."""
    if terms < 2:
        raise ValueError(f"row sum needs terms >= 2, got {terms}")
    return 2.0 ** (1 - terms)


def inverse_zeta(k: int) -> float:
    """1/zeta(k), with the k = 1 divergence read as 0."""
    if k < 1:
        raise ValueError(f"inverse_zeta requires k >= 1, got {k}")
    if k == 1:
        return 0.0
    return 1.0 / (1.0 + zeta_minus_one(k))


def column_sum_identity(m: int) -> Fraction:
    """Closed form of sum_{k>=2} m^-k: exactly 1/(m(m-1))."""
    if m < 2:
        raise ValueError(f"column index must be >= 2, got {m}")
    return Fraction(1, m * (m - 1))


def column_partial_sum(m: int, terms: int) -> Fraction:
    """Exact sum_{k=2}^{terms} m^-k."""
    if m < 2 or terms < 2:
        raise ValueError(f"need m >= 2 and terms >= 2, got m={m}, terms={terms}")
    return sum(Fraction(1, m**k) for k in range(2, terms + 1))


def column_tail(m: int, terms: int) -> Fraction:
    """Exact sum_{k>terms} m^-k = m^-terms / (m-1); closes the geometric gap."""
    if m < 2 or terms < 2:
        raise ValueError(f"need m >= 2 and terms >= 2, got m={m}, terms={terms}")
    return Fraction(1, m**terms * (m - 1))


def telescoping_column_sum(upper: int) -> Fraction:
    """Exact sum_{m=2}^{upper} 1/(m(m-1)); telescopes to 1 - 1/upper."""
    if upper < 2:
        raise ValueError(f"telescoping sum needs upper >= 2, got {upper}")
    return sum(column_sum_identity(m) for m in range(2, upper + 1))


_TARGET_KINDS = ("cell", "column", "row", "total")


@dataclass(frozen=True)
class DensityTarget:
    """One entry of the density matrix, or a marginal of it."""

    kind: str
    m: int = 0
    k: int = 0

    def __post_init__(self) -> None:
        if self.kind not in _TARGET_KINDS:
            raise ValueError(f"unknown target kind {self.kind!r}")
        if self.kind in ("cell", "column") and self.m < 2:
            raise ValueError(f"{self.kind} target needs m >= 2, got {self.m}")
        if self.kind in ("cell", "row") and self.k < 2:
            raise ValueError(f"{self.kind} target needs k >= 2, got {self.k}")

    @property
    def exact(self) -> Fraction | None:
        """Rational value where one exists; rows are irrational."""
        if self.kind == "cell":
            return Fraction(1, self.m**self.k)
        if self.kind == "column":
            return Fraction(1, self.m * (self.m - 1))
        if self.kind == "total":
            return Fraction(1)
        return None

    @property
    def value(self) -> float:
        if self.kind == "row":
            return zeta_minus_one(self.k)
        exact = self.exact
        assert exact is not None
        return float(exact)


@dataclass(frozen=True)
class DensityReport:
    selector: SetSelector
    limit: int
    count: int
    empirical: float
    target: float
    abs_error: float
    caveat: str | None = None


def _truncation_caveat(selector: SetSelector, limit: int) -> str | None:
    if selector.kind == "A":
        m = 2
        while left_factorial(m - 1) <= limit:
            m += 1
        return (
            f"finite-range deficit: B_{m} and beyond start at "
            f"{left_factorial(m - 1)} > {limit}, so they contribute nothing yet"
        )
    if selector.kind == "MISSED":
        return "density-zero set: the share below n! is 1/n, vanishing in the limit"
    return None


def empirical_density(
    selector: SetSelector | str,
    limit: int,
    chunk_size: int = 1 << 20,
    progress: partition.Progress | None = None,
) -> DensityReport:
    """Count selector members in [1, limit] and compare with the target density."""
    if isinstance(selector, str):
        selector = parse_selector(selector)
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    if selector.kind == "POWERFREE":
        return powerfree_density(selector.k, limit)
    if selector.kind == "A":
        target = DensityTarget("row", k=selector.k).value
    elif selector.kind == "B":
        target = DensityTarget("column", m=selector.m).value
    elif selector.kind == "BMK":
        target = DensityTarget("cell", m=selector.m, k=selector.k).value
    else:  # MISSED
        target = 0.0
    count = partition.count_members(selector, limit, chunk_size=chunk_size, progress=progress)
    empirical = count / limit
    return DensityReport(
        selector=selector,
        limit=limit,
        count=count,
        empirical=empirical,
        target=target,
        abs_error=abs(empirical - target),
        caveat=_truncation_caveat(selector, limit),
    )


def max_exponent(x: int) -> int:
    """Largest exponent in the prime factorization of x; 1 itself maps to 1.

    Trial division with a 2-3-5 wheel; fine for x up to ~1e12.
    """
    if x < 1:
        raise ValueError(f"max_exponent requires x >= 1, got {x}")
    if x == 1:
        return 1
    best = 0
    for p in (2, 3, 5):
        if x % p == 0:
            e = 0
            while x % p == 0:
                x //= p
                e += 1
            if e > best:
                best = e
    f = 7
    # candidates coprime to 30: offsets from 7 cycling through the wheel
    steps = (4, 2, 4, 2, 4, 6, 2, 6)
    idx = 0
    while f * f <= x:
        if x % f == 0:
            e = 0
            while x % f == 0:
                x //= f
                e += 1
            if e > best:
                best = e
        f += steps[idx]
        idx = (idx + 1) % 8
    if x > 1 and best < 1:
        best = 1
    return best


def max_exponent_sieve(limit: int) -> np.ndarray:
    """max_exponent for 0..limit as int8 (index 0 is 0).

    Only primes p <= sqrt(limit) can push an exponent past 1, so the sieve
    seeds everything at 1 and raises entries along prime-power strides.
    """
    if not 1 <= limit <= MAX_SIEVE:
        raise ValueError(f"sieve limit must be in [1, {MAX_SIEVE}], got {limit}")
    maxe = np.ones(limit + 1, dtype=np.int8)
    maxe[0] = 0
    root = math.isqrt(limit)
    if root >= 2:
        prime = np.ones(root + 1, dtype=bool)
        prime[:2] = False
        for p in range(2, math.isqrt(root) + 1):
            if prime[p]:
                prime[p * p :: p] = False
        for p in np.flatnonzero(prime):
            p = int(p)
            pe, e = p * p, 2
            while pe <= limit:
                np.maximum(maxe[pe::pe], np.int8(e), out=maxe[pe::pe])
                pe *= p
                e += 1
    return maxe


def powerfree_count(k: int, limit: int) -> int:
    """How many x in [1, limit] have max_exponent(x) == k."""
    if k < 1:
        raise ValueError(f"exponent class must be >= 1, got {k}")
    maxe = max_exponent_sieve(limit)
    return int(np.count_nonzero(maxe == k))


def powerfree_density(k: int, limit: int) -> DensityReport:
    """Empirical share of max_exponent == k versus 1/zeta(k+1) - 1/zeta(k)."""
    if k < 1:
        raise ValueError(f"exponent class must be >= 1, got {k}")
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    count = powerfree_count(k, limit)
    target = inverse_zeta(k + 1) - inverse_zeta(k)
    empirical = count / limit
    return DensityReport(
        selector=SetSelector("POWERFREE", k=k),
        limit=limit,
        count=count,
        empirical=empirical,
        target=target,
        abs_error=abs(empirical - target),
    )
