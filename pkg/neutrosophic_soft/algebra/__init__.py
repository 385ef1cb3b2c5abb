from .values import (
    COMPONENTS,
    unit_value,
    NsValue,
    ZERO_VALUE,
    UNIVERSAL_VALUE,
    LiteralComplementMode,
    COMPLEMENT_MODES,
    validate_complement_mode,
    as_membership_grid,
)
from .norms import (
    tnorm_drastic,
    tconorm_drastic,
    tnorm_bounded,
    tconorm_bounded,
    tnorm_einstein,
    tconorm_einstein,
    tnorm_algebraic,
    tconorm_algebraic,
    tnorm_hamacher,
    tconorm_hamacher,
    tnorm_minmax,
    tconorm_minmax,
    LiteralNorm,
    NormPair,
    NORM_PAIRS,
    resolve_norm,
    as_norm_pair,
    tnorm_apply,
    tconorm_apply,
)

__all__ = [
    "COMPONENTS",
    "unit_value",
    "NsValue",
    "ZERO_VALUE",
    "UNIVERSAL_VALUE",
    "LiteralComplementMode",
    "COMPLEMENT_MODES",
    "validate_complement_mode",
    "as_membership_grid",
]
__all__ += [
    "tnorm_drastic",
    "tconorm_drastic",
    "tnorm_bounded",
    "tconorm_bounded",
    "tnorm_einstein",
    "tconorm_einstein",
    "tnorm_algebraic",
    "tconorm_algebraic",
    "tnorm_hamacher",
    "tconorm_hamacher",
    "tnorm_minmax",
    "tconorm_minmax",
    "LiteralNorm",
    "NormPair",
    "NORM_PAIRS",
    "resolve_norm",
    "as_norm_pair",
    "tnorm_apply",
    "tconorm_apply",
]
