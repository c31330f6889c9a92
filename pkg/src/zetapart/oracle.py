"""Brute-force greedy construction of the partition, for cross-checking.

The construction walks levels j = 2, 3, ..., at each level enumerating the
residue classes mod j! not yet claimed by any earlier level and handing the
ascending list to a chooser strategy, which must pick exactly (j-2)! of
them.  Choosing the first available classes reproduces the closed form
b_residues(j) at every level; choosing the last available ones yields the
variant whose permanently unassigned integers form the missed set.

Everything here is deliberately plain Python and independent of the digit
classifiers, so it can serve as an oracle for them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, NamedTuple, Sequence

from .numeral import factorial
from .partition import ResidueClassSet, b_residues, classify_b

__all__ = [
    "Strategy",
    "StrategyViolation",
    "first_available",
    "last_available",
    "random_strategy",
    "Assignment",
    "greedy_assign",
    "oracle_equivalence",
    "ownership_mismatch",
    "missed_predicate",
    "MissedCheck",
    "missed_set_check",
    "ProgressionHit",
    "progression_hit",
    "missed_density",
    "MAX_DEPTH",
]

# depth 9 enumerates 9! = 362880 residues at the top level; beyond that the
# brute-force construction stops being desk-scale
MAX_DEPTH = 9

Strategy = Callable[[int, Sequence[int]], Sequence[int]]


class StrategyViolation(ValueError):
    """A chooser returned the wrong count, a duplicate, or an unavailable class."""


def first_available(level: int, available: Sequence[int]) -> list[int]:
    """Pick the smallest (level-2)! available residues."""
    return list(available[: factorial(level - 2)])


def last_available(level: int, available: Sequence[int]) -> list[int]:
    """Pick the largest (level-2)! available residues."""
    return list(available[-factorial(level - 2):])


def random_strategy(seed: int) -> Strategy:
    """A seeded chooser: same seed, same selections, independent of call order."""

    def choose(level: int, available: Sequence[int]) -> list[int]:
        rng = random.Random(seed * 1_000_003 + level)
        return rng.sample(list(available), factorial(level - 2))

    return choose


@dataclass(frozen=True)
class Assignment:
    """Chosen residue classes per level, j = 2..depth."""

    depth: int
    levels: dict[int, ResidueClassSet]

    def owner(self, x: int) -> int | None:
        """The level whose classes cover x, or None if x is unassigned."""
        if x < 1:
            raise ValueError(f"owner requires x >= 1, got {x}")
        for j in range(2, self.depth + 1):
            if x in self.levels[j]:
                return j
        return None

    def unassigned_upto(self, limit: int) -> list[int]:
        return [x for x in range(1, limit + 1) if self.owner(x) is None]


def _check_depth(depth: int) -> None:
    if not 2 <= depth <= MAX_DEPTH:
        raise ValueError(f"depth must be in [2, {MAX_DEPTH}], got {depth}")


def greedy_assign(strategy: Strategy, depth: int) -> Assignment:
    """Run the level-by-level construction under the given chooser."""
    _check_depth(depth)
    levels: dict[int, ResidueClassSet] = {}
    chosen: list[tuple[int, frozenset[int]]] = []  # (i!, residues) per level
    for j in range(2, depth + 1):
        jf = factorial(j)
        available = []
        for r in range(1, jf + 1):
            for mf, taken in chosen:
                rm = r % mf
                if (rm if rm else mf) in taken:
                    break
            else:
                available.append(r)
        need = factorial(j - 2)
        if len(available) < need:
            raise StrategyViolation(
                f"level {j}: only {len(available)} classes available, need {need}"
            )
        selection = list(strategy(j, available))
        if len(selection) != need or len(set(selection)) != need:
            raise StrategyViolation(
                f"level {j}: strategy must pick exactly {need} distinct classes, "
                f"got {len(selection)}"
            )
        if not set(selection) <= set(available):
            raise StrategyViolation(f"level {j}: strategy picked unavailable classes")
        levels[j] = ResidueClassSet(modulus=jf, residues=tuple(sorted(selection)))
        chosen.append((jf, frozenset(selection)))
    return Assignment(depth=depth, levels=levels)


def oracle_equivalence(depth: int) -> tuple[bool, str | None]:
    """Does first-available greedy reproduce b_residues at every level?

    Returns (True, None) or (False, description of the first difference).
    """
    _check_depth(depth)
    assignment = greedy_assign(first_available, depth)
    for j in range(2, depth + 1):
        got = assignment.levels[j].residues
        want = b_residues(j).residues
        if got != want:
            diff = sorted(set(got) ^ set(want))
            return False, f"level {j}: first differing residue {diff[0]} mod {factorial(j)}"
    return True, None


def ownership_mismatch(assignment: Assignment, limit: int) -> str | None:
    """First x <= limit where greedy ownership disagrees with classify_b.

    An x whose class lies beyond the assignment depth must be unowned.
    """
    for x in range(1, limit + 1):
        owner = assignment.owner(x)
        m = classify_b(x)
        expected = m if m <= assignment.depth else None
        if owner != expected:
            return f"x={x}: greedy assigns level {owner}, digit algorithm gives B_{m}"
    return None


def missed_predicate(x: int) -> bool:
    """True iff no factorial digit of x-1 is maximal (a_i <= i-1 for all i)."""
    if x < 1:
        raise ValueError(f"missed_predicate requires x >= 1, got {x}")
    y = x - 1
    i = 0
    while y:
        i += 1
        y, d = divmod(y, i + 1)
        if d == i:
            return False
    return True


class MissedCheck(NamedTuple):
    status: str  # "ok" | "mismatch" | "inconclusive"
    missed: tuple[int, ...]
    discrepancies: tuple[str, ...]


def missed_set_check(limit: int, depth: int) -> MissedCheck:
    """Compare greedy-unassigned integers below `limit` with the digit predicate.

    Runs the last-available construction at `depth` and `depth-1`; if the two
    unassigned sets below `limit` differ the range has not stabilized and the
    result is inconclusive rather than a mismatch.
    """
    _check_depth(depth)
    if depth < 3:
        raise ValueError("missed_set_check needs depth >= 3 to test stabilization")
    if limit > factorial(depth - 1):
        raise ValueError(
            f"limit {limit} exceeds (depth-1)! = {factorial(depth - 1)}; "
            "greedy coverage below the limit is not settled at this depth"
        )
    deep = greedy_assign(last_available, depth).unassigned_upto(limit)
    shallow = greedy_assign(last_available, depth - 1).unassigned_upto(limit)
    if deep != shallow:
        moved = sorted(set(deep) ^ set(shallow))
        return MissedCheck(
            status="inconclusive",
            missed=tuple(deep),
            discrepancies=tuple(f"x={x}: coverage changed between depths" for x in moved),
        )
    expected = [x for x in range(1, limit + 1) if missed_predicate(x)]
    if deep != expected:
        problems = []
        for x in sorted(set(deep) ^ set(expected)):
            if x in deep:
                problems.append(f"x={x}: unassigned by greedy but predicate says assigned")
            else:
                problems.append(f"x={x}: predicate says missed but greedy assigned it")
        return MissedCheck(status="mismatch", missed=tuple(deep), discrepancies=tuple(problems))
    return MissedCheck(status="ok", missed=tuple(deep), discrepancies=())


class ProgressionHit(NamedTuple):
    level: int
    residue: int
    modulus: int


def progression_hit(
    start: int,
    step: int,
    strategy: Strategy,
    depth: int,
    assignment: Assignment | None = None,
) -> ProgressionHit | None:
    """Smallest-level chosen class meeting the progression start + t*step.

    A class s mod j! intersects the progression in a full subprogression
    exactly when s == start mod gcd(j!, step).  Returns None when no chosen
    class up to `depth` qualifies.  Pass a prebuilt `assignment` to avoid
    re-running the construction.
    """
    if start < 1 or step < 1:
        raise ValueError("progression requires start >= 1 and step >= 1")
    if assignment is None:
        assignment = greedy_assign(strategy, depth)
    elif assignment.depth < depth:
        raise ValueError(f"assignment depth {assignment.depth} is less than {depth}")
    for j in range(2, depth + 1):
        level = assignment.levels[j]
        g = gcd(level.modulus, step)
        for s in level.residues:
            if (s - start) % g == 0:
                return ProgressionHit(level=j, residue=s, modulus=level.modulus)
    return None


def missed_density(n: int) -> Fraction:
    """Fraction of [1, n!] satisfying the missed predicate; equals 1/n."""
    if not 2 <= n <= MAX_DEPTH:
        raise ValueError(f"missed_density requires n in [2, {MAX_DEPTH}], got {n}")
    nf = factorial(n)
    count = sum(1 for x in range(1, nf + 1) if missed_predicate(x))
    return Fraction(count, nf)
