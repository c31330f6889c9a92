"""Factorial-base numerals.

Every natural number has a unique expansion x = a_1*1! + a_2*2! + ... + a_j*j!
with 0 <= a_i <= i.  Digits are stored least significant first, so digits[0] is
the coefficient of 1!.  Zero is represented by the empty digit sequence.
"""

from __future__ import annotations

import math
from typing import Sequence

__all__ = [
    "factorial",
    "left_factorial",
    "to_factorial",
    "from_factorial",
]


def factorial(n: int) -> int:
    """n! for n >= 0."""
    if n < 0:
        raise ValueError(f"factorial undefined for negative n, got {n}")
    return math.factorial(n)


def left_factorial(n: int) -> int:
    """0! + 1! + ... + (n-1)! for n >= 1.

    This is the smallest residue assigned to the class B_{n+1}: the least
    member of b_residues(m) is left_factorial(m - 1).
    """
    if n < 1:
        raise ValueError(f"left_factorial requires n >= 1, got {n}")
    total, term = 0, 1
    for i in range(n):
        total += term
        term *= i + 1
    return total


def to_factorial(x: int) -> tuple[int, ...]:
    """Factorial-base digits of x >= 0, least significant first.

    The result is canonical: the last digit is nonzero except for x = 0,
    which maps to the empty tuple.
    """
    if x < 0:
        raise ValueError(f"to_factorial requires x >= 0, got {x}")
    digits = []
    base = 2
    while x:
        x, d = divmod(x, base)
        digits.append(d)
        base += 1
    return tuple(digits)


def from_factorial(digits: Sequence[int]) -> int:
    """Value of a factorial-base digit sequence, least significant first.

    Raises ValueError if any digit violates 0 <= digits[i-1] <= i.
    """
    total = 0
    weight = 1
    for i, d in enumerate(digits, start=1):
        if not 0 <= d <= i:
            raise ValueError(f"digit {d} at position {i} outside [0, {i}]")
        total += d * weight
        weight *= i + 1
    return total
