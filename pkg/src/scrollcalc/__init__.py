"""Exact invariants of threefold scrolls over Hirzebruch surfaces F_e.

A rank-two bundle E on F_e that is an extension of two line bundles B by A,
with c1(E) = 3C + b f and c2(E) = k, embeds P(E) as a smooth threefold scroll.
This package computes its cohomology, intersection numbers, Hilbert
polynomial, Hilbert-scheme component dimension and the degeneration to F_0 or
F_1, all in exact integer and rational arithmetic.
"""

__version__ = "0.1.0"

from .divisors import DivisorClass, InternalInconsistency, SurfaceMismatch, cohomology
from .extensions import OutsideRegime, ScrollConfig
from .p1 import SplittingType, specializes

__all__ = [
    "DivisorClass",
    "InternalInconsistency",
    "OutsideRegime",
    "ScrollConfig",
    "SplittingType",
    "SurfaceMismatch",
    "cohomology",
    "specializes",
    "__version__",
]
