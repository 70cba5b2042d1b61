"""Signed permutation groups, mod-2 quotient spaces and generator-built matrix groups.

Modules
-------
discrete
    Mod-2 scalars ``D``, ``B`` and the circle residues ``K``; bit/trit vectors.
arrow
    Arrow (signed) permutations, transition matrices, parities, closures.
quotient
    Even-weight subgroups of ``D^n``, syndromes, induced node factorizations.
topology
    Automorphism groups of factorized graphs under the reversible-arrow rule.
matrix_groups
    2x2 algebra families, plane generators, Givens decomposition, realification.
report, cli
    Verification claims and the ``rigidspace`` command.
"""

from .arrow import (
    ArrowPermutation,
    IntervalPartition,
    classify,
    closure,
    compose,
    composite_parity,
    det,
    from_matrix,
    inverse,
    negative_parity,
    standard_generators,
    subset_det,
    to_matrix,
)
from .discrete import BitVector, TritVector, k_reduce
from .quotient import EvenSubgroup, induced_factorization, syndrome, z_syndrome

__version__ = "0.1.0"
