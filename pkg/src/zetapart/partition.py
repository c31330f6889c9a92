"""Partition of the naturals into classes B_m and A_k.

Every x >= 1 lands in exactly one column class B_m (density 1/(m(m-1)))
and exactly one row class A_k (density zeta(k)-1).  Classification is a
digit test on the factorial-base expansion of x:

* m is found from the position of the first nonzero digit: if that digit
  is 1 at position j then m = j+1, otherwise m-1 is the position of the
  first zero digit at or after the first nonzero one.

* writing x = x0 + m! * (b_0 + b_1*m + b_2*m^2 + ...) with x0 the least
  positive residue of x mod m!, the smallest n with b_n != m-1 gives
  k = n+2, i.e. x is in the subclass B_{m,k} of density 1/m^k.

B_m is also a union of (m-2)! residue classes mod m! (and B_{m,k} a union
of (m-1)! classes mod m^{k-1}*m!) with an explicit closed form; both
enumerations live here and are cross-checked against the digit algorithm
by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Iterator, NamedTuple

import numpy as np

from . import scan
from .numeral import factorial, left_factorial
from .selectors import SetSelector

__all__ = [
    "PartitionClass",
    "ResidueClassSet",
    "QuotientDigits",
    "classify_b",
    "classify_a",
    "subclass_digits",
    "b_residues",
    "bmk_residues",
    "sequence",
    "count_members",
]

# Residue enumeration materializes (m-2)! or (m-1)! values; beyond these
# caps the tables stop being desk-scale (classification itself has no cap).
MAX_B_ENUM = 12
MAX_BMK_ENUM = 11


class PartitionClass(NamedTuple):
    """Column and row indices (m, k) with x in B_{m,k} = B_m intersect A_k."""

    m: int
    k: int


@dataclass(frozen=True)
class ResidueClassSet:
    """A union of arithmetic progressions: modulus plus sorted residues.

    Residues are least positive representatives in [1, modulus]; the value
    `modulus` names the class of 0.
    """

    modulus: int
    residues: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        prev = 0
        for r in self.residues:
            if not prev < r <= self.modulus:
                raise ValueError(
                    f"residues must be strictly increasing in [1, {self.modulus}]"
                )
            prev = r
        object.__setattr__(self, "_members", frozenset(self.residues))

    def __contains__(self, x: int) -> bool:
        r = x % self.modulus
        return (r if r else self.modulus) in self._members  # type: ignore[attr-defined]

    def __len__(self) -> int:
        return len(self.residues)

    @property
    def density(self) -> Fraction:
        return Fraction(len(self.residues), self.modulus)

    def members_upto(self, limit: int) -> Iterator[int]:
        """Members of the union in [1, limit], ascending."""
        for base in range(0, max(limit, 0), self.modulus):
            for r in self.residues:
                x = base + r
                if x > limit:
                    return
                yield x


@dataclass(frozen=True)
class QuotientDigits:
    """Offset x0 = x mod m! plus the base-m digits of (x - x0)/m!.

    Digits are least significant first with no trailing zeros.
    """

    x0: int
    digits: tuple[int, ...]


def classify_b(x: int) -> int:
    """The column index m with x in B_m, for x >= 1."""
    if x < 1:
        raise ValueError(f"classification requires x >= 1, got {x}")
    i = 0
    first = 0
    while x:
        i += 1
        x, d = divmod(x, i + 1)
        if first == 0:
            if d == 1:
                return i + 1
            if d:
                first = i
        elif d == 0:
            return i + 1
    # digits from position `first` through i are all nonzero, so the first
    # zero digit sits just past the stored expansion
    return i + 2


def subclass_digits(x: int, m: int) -> QuotientDigits:
    """Decompose x = x0 + m! * sum(b_i * m^i) for x in B_m.

    Raises ValueError when classify_b(x) != m.
    """
    actual = classify_b(x)
    if actual != m:
        raise ValueError(f"x={x} lies in B_{actual}, not B_{m}")
    mf = factorial(m)
    x0 = x % mf
    q = x // mf
    digits = []
    while q:
        q, d = divmod(q, m)
        digits.append(d)
    return QuotientDigits(x0=x0, digits=tuple(digits))


def classify_a(x: int) -> PartitionClass:
    """The pair (m, k) with x in B_{m,k}, hence x in A_k, for x >= 1."""
    m = classify_b(x)
    q = x // factorial(m)
    # quotient digits are consumed as generated; n is almost always tiny
    top = m - 1
    n = 0
    while q % m == top:
        q //= m
        n += 1
    return PartitionClass(m=m, k=n + 2)


def b_residues(m: int) -> ResidueClassSet:
    """The (m-2)! residue classes mod m! forming B_m.

    Closed form: 1 + sum(a_j * j! for j in 1..m-2) with 1 <= a_j <= j.
    The least residue is left_factorial(m-1) and the greatest is (m-1)!.
    """
    if m < 2:
        raise ValueError(f"b_residues requires m >= 2, got {m}")
    if m > MAX_B_ENUM:
        raise ValueError(
            f"residue enumeration for B_{m} would hold {m - 2}! classes; "
            f"supported range is m <= {MAX_B_ENUM}"
        )
    weights = [factorial(j) for j in range(1, m - 1)]
    residues = sorted(
        1 + sum(a * w for a, w in zip(digits, weights))
        for digits in product(*(range(1, j + 1) for j in range(1, m - 1)))
    )
    return ResidueClassSet(modulus=factorial(m), residues=tuple(residues))


def bmk_residues(m: int, k: int) -> ResidueClassSet:
    """The (m-1)! residue classes mod m^{k-1}*m! forming B_{m,k}.

    Each residue is x0 + m! * ((c+1)*m^{k-2} - 1) with x0 ranging over
    b_residues(m) and 0 <= c <= m-2; the quotient digits below position
    k-2 are all maximal and digit k-2 equals c < m-1.
    """
    if k < 2:
        raise ValueError(f"bmk_residues requires k >= 2, got {k}")
    if m > MAX_BMK_ENUM:
        raise ValueError(
            f"residue enumeration for B_{m},{k} would hold {m - 1}! classes; "
            f"supported range is m <= {MAX_BMK_ENUM}"
        )
    base = b_residues(m)
    mf = factorial(m)
    step = m ** (k - 2)
    residues = sorted(
        x0 + mf * ((c + 1) * step - 1)
        for x0 in base.residues
        for c in range(m - 1)
    )
    return ResidueClassSet(modulus=step * m * mf, residues=tuple(residues))


def _selector_mask(
    sel: SetSelector, m: np.ndarray, k: np.ndarray
) -> np.ndarray:
    if sel.kind == "A":
        return k == sel.k
    if sel.kind == "B":
        return m == sel.m
    if sel.kind == "BMK":
        return (m == sel.m) & (k == sel.k)
    raise ValueError(f"selector {sel} is not a partition-class selector")


Progress = Callable[[int, int], None]


def _scan_chunks(
    sel: SetSelector, limit: int, chunk_size: int, progress: Progress | None = None
) -> Iterator[np.ndarray]:
    """Yield, per chunk of [1, limit], the members of the selected set."""
    if chunk_size < 1:
        raise ValueError("chunk_size must be positive")
    for lo in range(1, limit + 1, chunk_size):
        hi = min(lo + chunk_size - 1, limit)
        xs = np.arange(lo, hi + 1, dtype=np.int64)
        if sel.kind == "MISSED":
            mask = scan.missed_mask(xs)
        else:
            m, k = scan.classify_mk(xs)
            mask = _selector_mask(sel, m, k)
        yield xs[mask]
        if progress is not None:
            progress(hi, limit)


def sequence(
    selector: SetSelector,
    limit: int,
    chunk_size: int = 1 << 20,
    progress: Progress | None = None,
) -> list[int]:
    """All members of the selected set in [1, limit], ascending.

    Computed by classification scan over the range, never by residue
    enumeration.  Selector kinds: A, B, BMK, MISSED.
    """
    if limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    out: list[int] = []
    for members in _scan_chunks(selector, limit, chunk_size, progress):
        out.extend(members.tolist())
    return out


def count_members(
    selector: SetSelector,
    limit: int,
    chunk_size: int = 1 << 20,
    progress: Progress | None = None,
) -> int:
    """|S intersect [1, limit]| by classification scan, same path as sequence."""
    if limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    return sum(
        int(members.size) for members in _scan_chunks(selector, limit, chunk_size, progress)
    )
