"""Finite groups, conjugacy classes, class functions and matrix representations."""
from .builtins import DescriptorError, builtin_group, group_from_descriptor, natural_rep, standard_rep
from .group import ConjugacyClass, FiniteGroup, GroupCapExceeded, centralizer, conjugacy_classes
from .reps import (
    ClassFunction,
    MatrixRep,
    NotFaithful,
    class_intersection,
    eigenvalue_multiset,
    find_good_embedding,
    good_embedding_check,
    hom_dimension,
    localize_component,
)

__all__ = [
    "ClassFunction",
    "ConjugacyClass",
    "DescriptorError",
    "FiniteGroup",
    "GroupCapExceeded",
    "MatrixRep",
    "NotFaithful",
    "builtin_group",
    "centralizer",
    "class_intersection",
    "conjugacy_classes",
    "eigenvalue_multiset",
    "find_good_embedding",
    "good_embedding_check",
    "group_from_descriptor",
    "hom_dimension",
    "localize_component",
    "natural_rep",
    "standard_rep",
]
