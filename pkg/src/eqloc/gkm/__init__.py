"""Torus fixed-point localization: GKM-style data, pushforwards and flag identities."""
from .fixed_points import (
    EquivClass,
    FiberedFixedPointData,
    FixedPoint,
    FixedPointData,
    euler_class_expansion,
    fiberwise_pushforward,
    invertible_at,
    lambda_minus_one,
    point_class,
    pushforward_to_point,
)
from .flags import (
    WeylData,
    flag_data,
    flag_fibration,
    flag_variables,
    line_bundle_class,
    o_d_class,
    projective_space_data,
    verify_prop36,
)
from .symmetric import (
    complete_homogeneous,
    is_symmetric,
    random_symmetric,
    schur_polynomial,
    semistandard_tableaux,
    weyl_dimension,
)

__all__ = [
    "EquivClass",
    "FiberedFixedPointData",
    "FixedPoint",
    "FixedPointData",
    "WeylData",
    "complete_homogeneous",
    "euler_class_expansion",
    "fiberwise_pushforward",
    "flag_data",
    "flag_fibration",
    "flag_variables",
    "invertible_at",
    "is_symmetric",
    "lambda_minus_one",
    "line_bundle_class",
    "o_d_class",
    "point_class",
    "projective_space_data",
    "pushforward_to_point",
    "random_symmetric",
    "schur_polynomial",
    "semistandard_tableaux",
    "verify_prop36",
    "weyl_dimension",
]
