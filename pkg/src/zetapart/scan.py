"""Vectorized classification over integer blocks.

Same digit algorithm as partition.classify_a, applied to numpy blocks so
that range scans to 10^7 and beyond stay fast.  Chunk boundaries cannot
affect results (each x is classified independently); the test suite pins
agreement with the scalar functions and across chunk sizes.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = ["classify_mk", "missed_mask", "MAX_SCAN"]

# int64 holds factorials through 20!; scans stay well below this
MAX_SCAN = 10**15

_FACT = np.array([math.factorial(i) for i in range(21)], dtype=np.int64)


def _digit_positions(max_x: int) -> int:
    """Smallest P with (P+1)! > max_x, so digits occupy positions 1..P."""
    p = 1
    while _FACT[p + 1] <= max_x:
        p += 1
    return p


def _check_block(xs: np.ndarray) -> np.ndarray:
    xs = np.ascontiguousarray(xs, dtype=np.int64)
    if xs.size and int(xs.min()) < 1:
        raise ValueError("classification scan requires all x >= 1")
    if xs.size and int(xs.max()) > MAX_SCAN:
        raise ValueError(f"scan values must be <= {MAX_SCAN}")
    return xs


def classify_mk(xs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Column and row indices (m, k) for every x in the block."""
    xs = _check_block(xs)
    if xs.size == 0:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty
    p = _digit_positions(int(xs.max()))

    # digit matrix: row t holds a_{t+1} = (x // (t+1)!) % (t+2); the final
    # row (position p+1) is identically zero and terminates the zero search
    digits = np.zeros((p + 1, xs.size), dtype=np.int8)
    for t in range(p):
        i = t + 1
        digits[t] = ((xs // _FACT[i]) % (i + 1)).astype(np.int8)

    nonzero = digits != 0
    j0 = np.argmax(nonzero, axis=0)
    first_digit = digits[j0, np.arange(xs.size)]

    rows = np.arange(p + 1, dtype=np.int64)[:, None]
    first_zero_after = np.argmax((digits == 0) & (rows > j0), axis=0)
    m = np.where(first_digit == 1, j0 + 2, first_zero_after + 2)

    # count leading maximal base-m digits of x // m!
    q = xs // _FACT[m]
    n = np.zeros(xs.size, dtype=np.int64)
    pos = np.arange(xs.size)
    mm = m
    while pos.size:
        cont = q % mm == mm - 1
        if not cont.any():
            break
        pos = pos[cont]
        mm = mm[cont]
        q = q[cont] // mm
        n[pos] += 1
    return m, n + 2


def missed_mask(xs: np.ndarray) -> np.ndarray:
    """True where x = 1 + sum(a_i * i!) with every a_i <= i-1.

    These are the integers never assigned by the last-available greedy
    variant: no factorial digit of x-1 is maximal.
    """
    xs = _check_block(xs)
    if xs.size == 0:
        return np.zeros(0, dtype=bool)
    ys = xs - 1
    p = _digit_positions(int(ys.max())) if int(ys.max()) else 1
    maximal = np.zeros(xs.size, dtype=bool)
    for i in range(1, p + 1):
        maximal |= (ys // _FACT[i]) % (i + 1) == i
    return ~maximal
