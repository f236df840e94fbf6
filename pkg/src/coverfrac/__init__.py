"""Covers of the integers by residue classes and exact unit-fraction subset sums."""

from .core import (
    CoverReport,
    CoverSystem,
    ResidueClass,
    analyze,
    covering_count,
    covering_multiplicity,
    covering_table,
    distinguished_indices,
    irredundant_indices,
    is_exact_m_cover,
    is_m_cover,
    is_period,
    lcm_moduli,
    minimal_period,
    parse_system,
)
from .errors import (
    CapExceededError,
    CoverError,
    DegreeExceedsMultiplicityError,
    MinimumNotUniqueError,
    NotAPeriodError,
    NotExactCoverError,
    NotMCoverError,
    ParseError,
    PreconditionError,
    RedundantClassError,
)
from .gensearch import (
    SearchSpec,
    SplitMix64,
    complete_to_cover,
    erdos_example,
    find_covers,
    random_system,
    split_class,
)
from .identities import (
    SparsePolynomial,
    UnityPhase,
    average_equality_check,
    lemma1_check,
    lemma2_constancy_check,
    lemma3_check,
    product_identity_check,
)
from .localglobal import (
    WindowVerdict,
    check_local_global_cover,
    check_local_global_exact,
    window_bound_cover,
    window_bound_exact,
)
from .unitfrac import (
    SubsetSumProfile,
    corollary1_check,
    exact_cover_bound_check,
    subset_sum_profile,
    subset_sum_set,
    theorem1_check,
)

__version__ = "0.1.0"
