"""Tope committees of sign-vector systems, Farey-family fraction
machinery, and association-scheme parameters, all exactly and with
brute-force cross-checks."""

from .committees import (
    Committee,
    CommitteeFamily,
    augment_with_opposite_pair,
    committee,
    enumerate_all,
    enumerate_layer,
    fraction_signature,
    is_committee,
    is_committee_threshold,
    minimal_committees,
    union_committees,
    verify_prop8,
    verify_thm9,
)
from .errors import GuardError, InvariantError
from .farey import (
    FareySeq,
    farey_boolean,
    farey_boolean_oracle,
    farey_numerator_bounded,
    farey_sequence,
    format_fraction,
    map_fm_to_half,
    map_half_to_fm,
    neighbor_general,
    neighbor_half,
    neighbors_of_one_third,
    parse_fraction,
    reduce,
    reverse_involution,
    third_symmetry_involution,
    triple_extend,
    triple_extend_half,
    verify_prop5,
)
from .om_core import (
    Arrangement,
    ToposSystem,
    Vote,
    classify_vote,
    from_central_arrangement,
    is_acyclic,
    make_arrangement,
    make_system,
    opposite,
    parse_arrangement,
    parse_topes,
    positive_halfspace,
    serialize,
)
from .report import Check, Report
from .schemes import (
    CrosspolytopeLayer,
    Hamming,
    Johnson,
    crosspolytope_valency,
    crosspolytope_whitney,
    hamming_p,
    johnson_p,
    johnson_valency,
    scheme_oracle,
)

__version__ = "0.1.0"
