"""Minimal-height bookkeeping shared by the block and defect-group modules.

A minimal positive height is either a positive integer or INFINITY (no
character of positive height exists).  INFINITY compares equal to itself,
so verification records can test ``mh_b == mh_d`` directly.
"""

from __future__ import annotations

INFINITY = float("inf")

MinHeight = int | float  # a non-negative int, or INFINITY


def min_positive_key(counts: dict[int, int]) -> MinHeight:
    """Smallest positive key with nonzero multiplicity, or INFINITY."""
    positive = [k for k, mult in counts.items() if k > 0 and mult > 0]
    return min(positive) if positive else INFINITY


def format_height(value: MinHeight, ascii_only: bool = True) -> str:
    if value == INFINITY:
        return "infinity" if ascii_only else "∞"
    return str(int(value))
