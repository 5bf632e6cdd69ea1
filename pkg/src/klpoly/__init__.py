"""Kazhdan-Lusztig polynomials in the symmetric group.

Exact computation of the polynomials and their inverses by the
defining recursion, Bruhat-order machinery (rank tables, intervals,
covers, text pictures), parametric permutation families with known
closed forms, and a verification harness that cross-checks every
closed form against the recursion.
"""

from .bruhat import (
    BruhatInterval,
    RankDifferenceTable,
    bruhat_leq,
    check_rank_monotonicity,
    coatom_count,
    covers_down,
    covers_up,
    down_set,
    format_interval,
    interval,
    rank_count,
    rank_difference,
    rank_table,
    render_picture,
)
from .families import (
    FamilySpec,
    LemmaSides,
    NontrivialIntervalError,
    closed_form_inverse,
    closed_form_regular,
    family_pair,
    inverse_kl_from_interval_sum,
    lemma_one_sides,
    lemma_two_sides,
    make_family,
    parse_family_spec,
    signed_weight,
)
from .kl import (
    KLCache,
    active_positions,
    check_descent_invariance,
    check_inversion_identity,
    flatten_pair,
    inverse_kl,
    is_smooth_top,
    kl_polynomial,
    mu,
)
from .perm import (
    Perm,
    all_perms,
    avoids_pattern,
    compose,
    descent_indicator,
    find_pattern_instance,
    flatten,
    format_perm,
    from_oneline,
    identity,
    inverse,
    left_descents,
    length,
    longest_element,
    parse_perm,
    right_descents,
    swap_positions,
)
from .polynomial import ONE, Q, ZERO, IntPolynomial, geometric_sum
from .verify import (
    Failure,
    VerificationReport,
    random_comparable_pair,
    verify_coatom_bound,
    verify_inverse_closed_forms,
    verify_inversion_identity_batch,
    verify_regular_closed_forms,
    verify_smoothness_equivalence,
    worker_count,
)

__version__ = "0.1.0"

__all__ = [
    "BruhatInterval",
    "Failure",
    "FamilySpec",
    "IntPolynomial",
    "KLCache",
    "LemmaSides",
    "NontrivialIntervalError",
    "ONE",
    "Perm",
    "Q",
    "RankDifferenceTable",
    "VerificationReport",
    "ZERO",
    "active_positions",
    "all_perms",
    "avoids_pattern",
    "bruhat_leq",
    "check_descent_invariance",
    "check_inversion_identity",
    "check_rank_monotonicity",
    "closed_form_inverse",
    "closed_form_regular",
    "coatom_count",
    "compose",
    "covers_down",
    "covers_up",
    "descent_indicator",
    "down_set",
    "family_pair",
    "find_pattern_instance",
    "flatten",
    "flatten_pair",
    "format_interval",
    "format_perm",
    "from_oneline",
    "geometric_sum",
    "identity",
    "interval",
    "inverse",
    "inverse_kl",
    "inverse_kl_from_interval_sum",
    "is_smooth_top",
    "kl_polynomial",
    "left_descents",
    "lemma_one_sides",
    "lemma_two_sides",
    "length",
    "longest_element",
    "make_family",
    "mu",
    "parse_family_spec",
    "parse_perm",
    "random_comparable_pair",
    "rank_count",
    "rank_difference",
    "rank_table",
    "render_picture",
    "right_descents",
    "swap_positions",
    "verify_coatom_bound",
    "verify_inverse_closed_forms",
    "verify_inversion_identity_batch",
    "verify_regular_closed_forms",
    "verify_smoothness_equivalence",
    "worker_count",
]
