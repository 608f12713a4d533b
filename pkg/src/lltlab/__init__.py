"""Exact computation of LLT polynomials and their cumulants."""

from lltlab.qpoly import QPoly
from lltlab.symfunc import SymPoly

__all__ = ["QPoly", "SymPoly"]
