"""Verification engine for asynchronous elementary cellular automata on rings.

Local rules applied one vertex at a time along an update word; the library
computes periodic sets of the resulting maps, decides update-order
independence, and machine-checks the full classification of the 256 rules
at desk scale.
"""

from .constants import OMEGA_INDEPENDENT_RULES
from .dynamics import (
    IndepVerdict,
    Lcg,
    PerSet,
    TransitionMap,
    UpdateWord,
    Witness,
    apply_local,
    apply_word,
    fixed_points,
    periodic_set,
    pi_independent,
    random_word_perset,
    transition_map,
)
from .rules import (
    EquivClass,
    ProofStrategy,
    Rule,
    StaticProfile,
    Tag,
    decode,
    equivalence_class,
    equivalence_classes,
    flip_count,
    invert,
    is_bijective,
    is_quasi_symmetric,
    is_symmetric,
    reflect,
    rule_from_tag,
    static_profile,
    tag_of,
)
from .states import (
    MAX_VERTICES,
    Block,
    CycState,
    PotentialFamily,
    block_decomposition,
    format_state,
    parse_state,
    potential,
)
from .verify import (
    emit_reference_tables,
    flips_histogram,
    predicted_periodic_set,
    reidys_spotcheck,
    transport_suite,
    verify_characterizations,
    verify_equivalence_transport,
    verify_potential_monotone,
    verify_theorem_104,
)

__all__ = [
    "Block",
    "CycState",
    "EquivClass",
    "IndepVerdict",
    "Lcg",
    "MAX_VERTICES",
    "OMEGA_INDEPENDENT_RULES",
    "PerSet",
    "PotentialFamily",
    "ProofStrategy",
    "Rule",
    "StaticProfile",
    "Tag",
    "TransitionMap",
    "UpdateWord",
    "Witness",
    "apply_local",
    "apply_word",
    "block_decomposition",
    "decode",
    "emit_reference_tables",
    "equivalence_class",
    "equivalence_classes",
    "fixed_points",
    "flip_count",
    "flips_histogram",
    "format_state",
    "invert",
    "is_bijective",
    "is_quasi_symmetric",
    "is_symmetric",
    "parse_state",
    "periodic_set",
    "pi_independent",
    "potential",
    "predicted_periodic_set",
    "random_word_perset",
    "reflect",
    "reidys_spotcheck",
    "rule_from_tag",
    "static_profile",
    "tag_of",
    "transition_map",
    "transport_suite",
    "verify_characterizations",
    "verify_equivalence_transport",
    "verify_potential_monotone",
    "verify_theorem_104",
]

__version__ = "0.1.0"
