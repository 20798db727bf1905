"""Exact combinatorics of circle-map (Sturmian) sequences.

The package computes, cross-validates, and reports on the structure of
binary rotation sequences: the embedding coding of hull elements and its
inverse, the two-word partitions, admissible-word classes with exact
frequencies, the interval geometry on the circle, the random-embedding
measure, mirror symmetry, and local-move robustness.  Everything that
can be exact is exact; every closed form ships next to an independent
brute-force check.
"""

from .arithmetic import (
    GOLDEN_ALPHA,
    TAU,
    AlphaSpec,
    ConvergentTable,
    QuadNumber,
    cf_convergents,
    exact_compare,
    letter_decision,
)
from .embedding import (
    OpSeq,
    Reconstruction,
    RecursionState,
    fixed_point_prefix,
    fixed_point_recursion,
    phi_prefix,
    phi_shift_formula,
    reconstruct,
    theta_from_opseq,
    theta_series,
    zeckendorf,
)
from .factors import (
    BetaValue,
    FactorClassification,
    classify,
    empirical_frequency,
    exhausting_point,
    factor_set,
    frequencies,
    g_point,
    right_special,
)
from .intervals import (
    ExactInterval,
    GapStatistics,
    cylinder_of_word,
    exhausting_word_interval,
    three_distance,
)
from .localmove import break_witness, exchange, is_admissible, lemma52_form
from .measure import (
    MeasureParams,
    WeightedInterval,
    cdf,
    cylinder_mass,
    density_ratio,
    mc_local_dimension,
    singularity_exponent,
)
from .partition import PartitionView, lift, partition_window, verify_isolation
from .symmetry import (
    HDecomposition,
    PrimedWord,
    h_word,
    lemma42_check,
    sigma_fixed_point,
    symmetric_point,
)
from .words import HullPoint, Window, Word, build_sn, mirror, palindrome_part, v0_prefix, window

__version__ = "0.1.0"

__all__ = [
    "AlphaSpec",
    "BetaValue",
    "ConvergentTable",
    "ExactInterval",
    "FactorClassification",
    "GapStatistics",
    "GOLDEN_ALPHA",
    "HDecomposition",
    "HullPoint",
    "MeasureParams",
    "OpSeq",
    "PartitionView",
    "PrimedWord",
    "QuadNumber",
    "Reconstruction",
    "RecursionState",
    "TAU",
    "WeightedInterval",
    "Window",
    "Word",
    "break_witness",
    "build_sn",
    "cdf",
    "cf_convergents",
    "classify",
    "cylinder_mass",
    "cylinder_of_word",
    "density_ratio",
    "empirical_frequency",
    "exact_compare",
    "exchange",
    "exhausting_point",
    "exhausting_word_interval",
    "factor_set",
    "fixed_point_prefix",
    "fixed_point_recursion",
    "frequencies",
    "g_point",
    "h_word",
    "is_admissible",
    "lemma42_check",
    "lemma52_form",
    "letter_decision",
    "lift",
    "mc_local_dimension",
    "mirror",
    "palindrome_part",
    "partition_window",
    "phi_prefix",
    "phi_shift_formula",
    "reconstruct",
    "right_special",
    "sigma_fixed_point",
    "singularity_exponent",
    "symmetric_point",
    "theta_from_opseq",
    "theta_series",
    "three_distance",
    "v0_prefix",
    "verify_isolation",
    "window",
    "zeckendorf",
]
