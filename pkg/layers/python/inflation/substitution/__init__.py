from inflation.substitution.patch import Patch, geometric_patch
from inflation.substitution.rules import (
    EigenData,
    Rule,
    SpectralClass,
    SpectralTag,
    SubstMatrix,
    classify,
    eigen_data,
    subst_matrix,
)
from inflation.substitution.tilde import (
    recode_from_binary,
    recode_to_binary,
    tilde_fixed_point,
    tilde_rule_substitute,
)
from inflation.substitution.words import (
    Word,
    check_legal,
    fixed_point,
    legal_factors,
    letter_frequencies,
    substitute,
)

__all__ = [
    "EigenData",
    "Patch",
    "Rule",
    "SpectralClass",
    "SpectralTag",
    "SubstMatrix",
    "Word",
    "check_legal",
    "classify",
    "eigen_data",
    "fixed_point",
    "geometric_patch",
    "legal_factors",
    "letter_frequencies",
    "recode_from_binary",
    "recode_to_binary",
    "subst_matrix",
    "substitute",
    "tilde_fixed_point",
    "tilde_rule_substitute",
]
