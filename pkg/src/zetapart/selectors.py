"""Set descriptors shared by sequence emission and density scans.

Textual forms: "A<k>", "B<m>", "B<m>,<k>", "missed", "powerfree<k>".
Supported ranges: 2 <= m <= 20 and 2 <= k <= 64 for the partition classes
(factorial moduli beyond that are out of supported range), k >= 1 for the
powerfree classes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = ["SetSelector", "parse_selector", "MAX_M", "MAX_K"]

MAX_M = 20
MAX_K = 64

_PATTERNS = [
    ("BMK", re.compile(r"B(\d+),(\d+)$")),
    ("B", re.compile(r"B(\d+)$")),
    ("A", re.compile(r"A(\d+)$")),
    ("POWERFREE", re.compile(r"powerfree(\d+)$")),
    ("MISSED", re.compile(r"missed$")),
]


@dataclass(frozen=True)
class SetSelector:
    """One of the describable subsets of the naturals.

    kind "A": the class A_k (k = field k).
    kind "B": the class B_m (m = field m).
    kind "BMK": the subclass B_{m,k}.
    kind "MISSED": integers never assigned by the last-available variant.
    kind "POWERFREE": integers whose largest prime-factor exponent equals k.
    """

    kind: str
    m: int = 0
    k: int = 0

    def __post_init__(self) -> None:
        if self.kind in ("B", "BMK") and not 2 <= self.m <= MAX_M:
            raise ValueError(f"m must be in [2, {MAX_M}], got {self.m}")
        if self.kind in ("A", "BMK") and not 2 <= self.k <= MAX_K:
            raise ValueError(f"k must be in [2, {MAX_K}], got {self.k}")
        if self.kind == "POWERFREE" and not 1 <= self.k <= MAX_K:
            raise ValueError(f"powerfree k must be in [1, {MAX_K}], got {self.k}")
        if self.kind not in ("A", "B", "BMK", "MISSED", "POWERFREE"):
            raise ValueError(f"unknown selector kind {self.kind!r}")

    def __str__(self) -> str:
        if self.kind == "A":
            return f"A{self.k}"
        if self.kind == "B":
            return f"B{self.m}"
        if self.kind == "BMK":
            return f"B{self.m},{self.k}"
        if self.kind == "POWERFREE":
            return f"powerfree{self.k}"
        return "missed"


def parse_selector(text: str) -> SetSelector:
    """Parse a textual set descriptor, raising ValueError on malformed input."""
    for kind, pattern in _PATTERNS:
        match = pattern.match(text)
        if not match:
            continue
        if kind == "BMK":
            return SetSelector("BMK", m=int(match.group(1)), k=int(match.group(2)))
        if kind == "B":
            return SetSelector("B", m=int(match.group(1)))
        if kind == "A":
            return SetSelector("A", k=int(match.group(1)))
        if kind == "POWERFREE":
            return SetSelector("POWERFREE", k=int(match.group(1)))
        return SetSelector("MISSED")
    raise ValueError(
        f"malformed set descriptor {text!r}; expected A<k>, B<m>, B<m>,<k>, "
        "missed, or powerfree<k>"
    )
