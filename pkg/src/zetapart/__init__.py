"""Partition of the naturals into classes A_k of asymptotic density zeta(k)-1.

Every x >= 1 lands in exactly one class B_m (a union of (m-2)! residue
classes mod m!) and, within it, one subclass B_{m,k} of density 1/m^k; the
union of B_{m,k} over m is A_k.  The classification reads the factorial-base
digits of x, so membership is decidable by arithmetic alone; a brute-force
greedy construction doubles as an independent oracle for the closed forms.
"""

from .analysis import (
    DensityReport,
    DensityTarget,
    column_sum_identity,
    empirical_density,
    max_exponent,
    powerfree_density,
    zeta_minus_one,
    zeta_row_sum,
)
from .numeral import factorial, from_factorial, left_factorial, to_factorial
from .oracle import (
    Assignment,
    first_available,
    greedy_assign,
    last_available,
    missed_density,
    missed_predicate,
    oracle_equivalence,
    progression_hit,
    random_strategy,
)
from .partition import (
    PartitionClass,
    ResidueClassSet,
    b_residues,
    bmk_residues,
    classify_a,
    classify_b,
    count_members,
    sequence,
    subclass_digits,
)
from .selectors import SetSelector, parse_selector

__version__ = "0.1.0"

__all__ = [
    "DensityReport",
    "DensityTarget",
    "column_sum_identity",
    "empirical_density",
    "max_exponent",
    "powerfree_density",
    "zeta_minus_one",
    "zeta_row_sum",
    "factorial",
    "from_factorial",
    "left_factorial",
    "to_factorial",
    "Assignment",
    "first_available",
    "greedy_assign",
    "last_available",
    "missed_density",
    "missed_predicate",
    "oracle_equivalence",
    "progression_hit",
    "random_strategy",
    "PartitionClass",
    "ResidueClassSet",
    "b_residues",
    "bmk_residues",
    "classify_a",
    "classify_b",
    "count_members",
    "sequence",
    "subclass_digits",
    "SetSelector",
    "parse_selector",
    "__version__",
]
