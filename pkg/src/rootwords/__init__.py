"""Minimal and root words in the free group on two generators.

The calculus of cyclic two-letter subword counts decides which words are
of minimal length under all automorphisms, which minimal words are root
words (not grown from shorter minimal words), and enumerates whole
automorphism classes at desk scale.
"""

from .words import (
    CyclicWord,
    EMPTY_CYCLIC,
    EMPTY_WORD,
    LETTERS,
    PairCounts,
    ParseError,
    Word,
    canonical_rotation,
    cyclic_reduce,
    free_reduce,
    inverse,
    is_alternating,
    letter_count,
    letter_from_char,
    letter_to_char,
    longest_run,
    parse_word,
    profile,
    subword_count,
)
from .automorphisms import (
    Automorphism,
    ImageCounts,
    Permutation,
    ReductionTrace,
    WhiteheadAuto,
    all_permutations,
    apply_automorphism,
    apply_permutation,
    apply_whitehead,
    is_level,
    one_letter_representatives,
    predict_profile,
)
from .minimality import (
    children,
    concat_minimal_check,
    is_minimal,
    is_minimal_oracle,
    is_root,
    is_root_oracle,
    parents,
)
from .search import (
    DEFAULT_MEMBER_LIMIT,
    EquivalenceClass,
    MemberLimitExceeded,
    are_equivalent,
    minimal_class,
    minimize,
    verify_root_class,
)
from .census import (
    CensusRecord,
    DESK_GUARD,
    ResourceGuardError,
    census_records,
    enumerate_cyclic_words,
    enumerate_root_classes,
    enumerate_root_words,
    extremal_root_word,
    run_verification,
)

__all__ = [
    "Automorphism",
    "CensusRecord",
    "CyclicWord",
    "DEFAULT_MEMBER_LIMIT",
    "DESK_GUARD",
    "EMPTY_CYCLIC",
    "EMPTY_WORD",
    "EquivalenceClass",
    "ImageCounts",
    "LETTERS",
    "MemberLimitExceeded",
    "PairCounts",
    "ParseError",
    "Permutation",
    "ReductionTrace",
    "ResourceGuardError",
    "WhiteheadAuto",
    "Word",
    "all_permutations",
    "apply_automorphism",
    "apply_permutation",
    "apply_whitehead",
    "are_equivalent",
    "canonical_rotation",
    "census_records",
    "children",
    "concat_minimal_check",
    "cyclic_reduce",
    "enumerate_cyclic_words",
    "enumerate_root_classes",
    "enumerate_root_words",
    "extremal_root_word",
    "free_reduce",
    "inverse",
    "is_alternating",
    "is_level",
    "is_minimal",
    "is_minimal_oracle",
    "is_root",
    "is_root_oracle",
    "letter_count",
    "letter_from_char",
    "letter_to_char",
    "longest_run",
    "minimal_class",
    "minimize",
    "one_letter_representatives",
    "parents",
    "parse_word",
    "predict_profile",
    "profile",
    "run_verification",
    "subword_count",
    "verify_root_class",
]
