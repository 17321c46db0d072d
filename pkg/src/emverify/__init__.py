"""Exact computations of minimal positive character heights in p-blocks
of symmetric, alternating and Lie-type groups, and in their defect groups.
"""

from emverify.heights import INFINITY, MinHeight

__all__ = ["INFINITY", "MinHeight"]
__version__ = "0.1.0"
