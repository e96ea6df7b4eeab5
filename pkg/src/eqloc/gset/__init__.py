"""Equivariant K-theory of finite G-sets in the global-stabilizer model."""
from .core import (
    EquivariantMap,
    GlobalStabilizer,
    GSet,
    StabilizerClass,
    build_stabilizer,
    decompose,
    invariants,
    pullback,
    pushforward,
    quotient_pushforward,
    stabilizer_of,
)
from .localization import (
    LAMBDA_UNIT,
    MixedSpace,
    SliceModel,
    central_summand,
    central_summand_direct,
    localize_via_fixed_locus,
    localize_via_sheaves,
    morita,
    morita_inverse,
    nonabelian_localize,
    rr_gset_sector,
    slice_model,
    twist_central,
    twist_on_slice,
)
from .sheaf import (
    EquivSheafOnGSet,
    class_from_sheaf,
    irreducible_sheaves,
    sheaf_invariant_dimensions,
    sheaf_pullback,
    sheaf_pushforward,
    sheaf_tensor,
    twist_via_reps,
)

StabilizerPairSet = GlobalStabilizer

__all__ = [
    "EquivSheafOnGSet",
    "EquivariantMap",
    "GSet",
    "GlobalStabilizer",
    "LAMBDA_UNIT",
    "MixedSpace",
    "SliceModel",
    "StabilizerClass",
    "StabilizerPairSet",
    "build_stabilizer",
    "central_summand",
    "central_summand_direct",
    "class_from_sheaf",
    "decompose",
    "invariants",
    "irreducible_sheaves",
    "localize_via_fixed_locus",
    "localize_via_sheaves",
    "morita",
    "morita_inverse",
    "nonabelian_localize",
    "pullback",
    "pushforward",
    "quotient_pushforward",
    "rr_gset_sector",
    "sheaf_invariant_dimensions",
    "sheaf_pullback",
    "sheaf_pushforward",
    "sheaf_tensor",
    "slice_model",
    "stabilizer_of",
    "twist_central",
    "twist_via_reps",
]
