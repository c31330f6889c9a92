"""Command-line surface: classify, seq, residues, density, verify, identity.

Exit codes: 0 success, 1 verification mismatch (a printed counterexample),
2 usage or range error.  Output is deterministic: same invocation, same
bytes.  Progress reporting, when requested, goes to stderr only.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import analysis, oracle, partition
from .numeral import factorial
from .selectors import SetSelector, parse_selector

__all__ = ["main"]


def _real(v: float) -> str:
    return f"{v:.10g}"


def _csv_num(v: float) -> str:
    # full precision, but integral values print bare: 0.0 -> "0"
    return str(int(v)) if v == int(v) else repr(v)


def _csv_field(text: str) -> str:
    if "," in text:
        return '"' + text.replace('"', '""') + '"'
    return text


def _progress_to_stderr(done: int, total: int) -> None:
    print(f"progress: {done}/{total}", file=sys.stderr)


def _cmd_classify(args: argparse.Namespace) -> int:
    lines = []
    for x in args.values:
        cls = partition.classify_a(x)
        lines.append(f"{x} B{cls.m} A{cls.k}")
    sys.stdout.write("".join(line + "\n" for line in lines))
    return 0


def _members(selector: SetSelector, limit: int, progress) -> list[int]:
    if selector.kind == "POWERFREE":
        if limit == 0:
            return []
        maxe = analysis.max_exponent_sieve(limit)
        return np.flatnonzero(maxe == selector.k).tolist()
    return partition.sequence(selector, limit, progress=progress)


def _cmd_seq(args: argparse.Namespace) -> int:
    selector = parse_selector(args.set)
    if args.limit < 0:
        raise ValueError(f"--limit must be >= 0, got {args.limit}")
    progress = _progress_to_stderr if args.progress else None
    values = _members(selector, args.limit, progress)
    if args.format == "bfile":
        sys.stdout.write("".join(f"{n} {v}\n" for n, v in enumerate(values, start=1)))
    else:
        sys.stdout.write("".join(f"{v}\n" for v in values))
    return 0


def _cmd_residues(args: argparse.Namespace) -> int:
    selector = parse_selector(args.set)
    if selector.kind == "B":
        table = partition.b_residues(selector.m)
    elif selector.kind == "BMK":
        table = partition.bmk_residues(selector.m, selector.k)
    else:
        raise ValueError(
            f"{selector} is not a finite union of residue classes; "
            "residue tables exist only for B<m> and B<m>,<k>"
        )
    print(f"mod {table.modulus}: " + " ".join(str(r) for r in table.residues))
    return 0


def _cmd_density(args: argparse.Namespace) -> int:
    selectors = [parse_selector(text) for text in args.sets]
    progress = _progress_to_stderr if args.progress else None
    reports = [
        analysis.empirical_density(sel, args.limit, progress=progress) for sel in selectors
    ]
    if args.format == "csv":
        lines = ["set,N,count,empirical,target,abs_error"]
        for r in reports:
            lines.append(
                ",".join(
                    (
                        _csv_field(str(r.selector)),
                        str(r.limit),
                        str(r.count),
                        _csv_num(r.empirical),
                        _csv_num(r.target),
                        _csv_num(r.abs_error),
                    )
                )
            )
        sys.stdout.write("".join(line + "\n" for line in lines))
        return 0
    rows = [("set", "N", "count", "empirical", "target", "abs_error")]
    for r in reports:
        rows.append(
            (
                str(r.selector),
                str(r.limit),
                str(r.count),
                _real(r.empirical),
                _real(r.target),
                _real(r.abs_error),
            )
        )
    widths = [max(len(row[i]) for row in rows) for i in range(6)]
    for row in rows:
        cells = [row[0].ljust(widths[0])] + [
            row[i].rjust(widths[i]) for i in range(1, 6)
        ]
        print("  ".join(cells).rstrip())
    for r in reports:
        if r.caveat:
            print(f"# {r.selector}: {r.caveat}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    depth = args.depth
    if args.strategy == "first":
        ok, detail = oracle.oracle_equivalence(depth)
        if not ok:
            print(f"equivalence FAILED: {detail}")
            return 1
        bound = factorial(depth - 1)
        limit = bound if args.limit is None else min(args.limit, bound)
        assignment = oracle.greedy_assign(oracle.first_available, depth)
        mismatch = oracle.ownership_mismatch(assignment, limit)
        if mismatch is not None:
            print(f"ownership FAILED: {mismatch}")
            return 1
        print(f"levels 2..{depth} match the closed-form residues")
        print(f"ownership agrees with the digit classification for x <= {limit}")
        return 0
    bound = factorial(depth - 1)
    limit = bound if args.limit is None else args.limit
    check = oracle.missed_set_check(limit, depth)
    if check.status == "inconclusive":
        print(
            "inconclusive: coverage below the limit has not stabilized at this depth",
            file=sys.stderr,
        )
        for line in check.discrepancies:
            print(line, file=sys.stderr)
        return 2
    if check.status == "mismatch":
        print("missed-set FAILED:")
        for line in check.discrepancies:
            print(line)
        return 1
    print(f"stabilized: depths {depth - 1} and {depth} agree below {limit}")
    print("missed = " + " ".join(str(x) for x in check.missed))
    return 0


def _cmd_identity(args: argparse.Namespace) -> int:
    terms = args.zeta_terms
    upper = args.limit
    total = analysis.zeta_row_sum(terms)
    defect = abs(1.0 - total)
    bound = analysis.row_sum_tail_bound(terms)
    tele = analysis.telescoping_column_sum(upper)
    print(f"zeta row sum, k = 2..{terms}: {_real(total)}")
    print(f"defect |1 - sum| = {_real(defect)} (tail bound {_real(bound)})")
    if tele != 1 - Fraction(1, upper):
        print(f"telescoping FAILED: sum over m = 2..{upper} is {tele}, not 1 - 1/{upper}")
        return 1
    print(f"column sums, m = 2..{upper}: {tele} = 1 - 1/{upper} (exact)")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetapart",
        description=(
            "Partition of the naturals into classes of density zeta(k)-1: "
            "classification, sequences, residue tables, densities, and checks."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="print '<x> B<m> A<k>' for each integer")
    p.add_argument("values", nargs="+", type=int, metavar="X")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("seq", help="emit members of a set up to --limit")
    p.add_argument("set", metavar="SET", help="A<k>, B<m>, B<m>,<k>, missed, powerfree<k>")
    p.add_argument("--limit", type=int, required=True, help="scan upper bound (inclusive)")
    p.add_argument("--format", choices=("plain", "bfile"), default="plain")
    p.add_argument("--progress", action="store_true", help="chunk progress on stderr")
    p.set_defaults(func=_cmd_seq)

    p = sub.add_parser("residues", help="residue classes of B<m> or B<m>,<k>")
    p.add_argument("set", metavar="SET")
    p.set_defaults(func=_cmd_residues)

    p = sub.add_parser("density", help="empirical versus asymptotic densities")
    p.add_argument("sets", nargs="+", metavar="SET")
    p.add_argument("--limit", type=int, required=True, help="scan upper bound (inclusive)")
    p.add_argument("--format", choices=("table", "csv"), default="table")
    p.add_argument("--progress", action="store_true", help="chunk progress on stderr")
    p.set_defaults(func=_cmd_density)

    p = sub.add_parser("verify", help="greedy construction versus closed forms")
    p.add_argument("--depth", type=int, required=True, help="top level of the construction")
    p.add_argument("--strategy", choices=("first", "last"), required=True)
    p.add_argument("--limit", type=int, default=None, help="ownership / missed-set bound")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("identity", help="row and column sum identities")
    p.add_argument("--zeta-terms", type=int, default=30, dest="zeta_terms")
    p.add_argument("--limit", type=int, default=10, help="column telescoping upper index")
    p.set_defaults(func=_cmd_identity)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
