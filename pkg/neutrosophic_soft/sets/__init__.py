from .soft_set import (
    Labels,
    Universe,
    ParameterSet,
    NsSoftSet,
    set_complement,
    set_union,
    set_intersection,
    set_subset,
    set_equal,
)

__all__ = [
    "Labels",
    "Universe",
    "ParameterSet",
    "NsSoftSet",
    "set_complement",
    "set_union",
    "set_intersection",
    "set_subset",
    "set_equal",
]
