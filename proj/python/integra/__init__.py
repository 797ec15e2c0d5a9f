"""Integral Cayley graphs on small finite groups."""

from ._integra import (
    Group,
    IntegraError,
    catalog,
    claims,
    classify,
    construct,
    count_sets,
    is_integral,
    load,
    recognize,
    spectrum,
    verify,
)

__all__ = [
    "Group",
    "IntegraError",
    "catalog",
    "claims",
    "classify",
    "construct",
    "count_sets",
    "is_integral",
    "load",
    "recognize",
    "spectrum",
    "verify",
]
