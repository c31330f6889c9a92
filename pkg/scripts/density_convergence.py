#!/usr/bin/env python3
"""How fast does the empirical density of A_k approach zeta(k)-1?

The library reports the asymptotic target; this experiment measures the
finite-N error and prints, next to it, the truncation "staircase": classes
B_m whose least member !(m-1) exceeds N contribute nothing below N, leaving
a worst-case deficit of sum 1/(m(m-1)) = 1/(M-1) over the absent columns
m >= M.  The observed error sits well under that envelope (partially
completed periods of the large B_m offset most of it) and the local log-log
slope wobbles instead of settling, so no power-law rate is asserted; the
honest summary is "slower than any fixed power of N, bounded by the
staircase".

Usage:
    python scripts/density_convergence.py --set A2 --min-exp 3 --max-exp 7
"""

from __future__ import annotations

import argparse
import math
from dataclasses import dataclass

from zetapart.analysis import empirical_density
from zetapart.numeral import left_factorial
from zetapart.selectors import parse_selector


@dataclass(frozen=True)
class Config:
    selector: str = "A2"
    min_exp: int = 3
    max_exp: int = 7
    points_per_decade: int = 2


def absent_column_deficit(limit: int) -> tuple[int, float]:
    """Smallest absent column M (with !(M-1) > limit) and its density deficit."""
    m = 2
    while left_factorial(m - 1) <= limit:
        m += 1
    return m, 1.0 / (m - 1)


def run(config: Config) -> None:
    selector = parse_selector(config.selector)
    if selector.kind != "A":
        raise SystemExit("this experiment is about the A_k classes; pass --set A<k>")
    limits = sorted(
        {
            int(round(10 ** (e + f / config.points_per_decade)))
            for e in range(config.min_exp, config.max_exp)
            for f in range(config.points_per_decade)
        }
        | {10**config.max_exp}
    )
    print(f"# {selector}: empirical density versus zeta({selector.k})-1")
    print(
        f"{'N':>12}  {'count':>12}  {'empirical':>12}  {'abs_error':>12}  "
        f"{'deficit':>12}  {'absent from':>11}  {'slope':>7}"
    )
    previous: tuple[int, float] | None = None
    for limit in limits:
        report = empirical_density(selector, limit)
        column, deficit = absent_column_deficit(limit)
        if previous is not None and report.abs_error > 0 and previous[1] > 0:
            slope = (math.log(report.abs_error) - math.log(previous[1])) / (
                math.log(limit) - math.log(previous[0])
            )
            slope_text = f"{slope:7.3f}"
        else:
            slope_text = "      -"
        print(
            f"{limit:>12}  {report.count:>12}  {report.empirical:>12.8f}  "
            f"{report.abs_error:>12.8f}  {deficit:>12.8f}  {'B_' + str(column):>11}  {slope_text}"
        )
        previous = (limit, report.abs_error)
    print(
        "# the deficit column is a worst-case envelope, not the realized error;\n"
        "# the wobbling slope means no fixed power law fits the decay"
    )


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--set", default="A2", dest="selector", help="A<k> selector")
    parser.add_argument("--min-exp", type=int, default=3, help="first decade exponent")
    parser.add_argument("--max-exp", type=int, default=7, help="last decade exponent")
    parser.add_argument(
        "--points-per-decade", type=int, default=2, help="sample density per decade"
    )
    args = parser.parse_args()
    run(
        Config(
            selector=args.selector,
            min_exp=args.min_exp,
            max_exp=args.max_exp,
            points_per_decade=args.points_per_decade,
        )
    )


if __name__ == "__main__":
    main()
