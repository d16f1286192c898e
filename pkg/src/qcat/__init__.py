"""Exact statistics, bijections and generating-function identities for 321-avoiding permutations."""

from .config import BoundExceeded
from .polyarith import ABT, QTX, MultiPoly, PolySeries

__version__ = "0.1.0"

__all__ = ["ABT", "QTX", "MultiPoly", "PolySeries", "BoundExceeded", "__version__"]
