"""Exact combinatorics for overpartitions in which only even parts may be overlined."""

from .core import (
    DomainError,
    Overpartition,
    Partition,
    PentIndex,
    classify,
    conjugate,
    parse_overpartition,
    parse_partition,
    pentagonal_index,
    pentagonal_number,
    weight,
)

__all__ = [
    "DomainError",
    "Overpartition",
    "Partition",
    "PentIndex",
    "classify",
    "conjugate",
    "parse_overpartition",
    "parse_partition",
    "pentagonal_index",
    "pentagonal_number",
    "weight",
]
