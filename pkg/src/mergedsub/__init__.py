"""Spectra of (H1,H2)-merged subdivision graphs, with closed forms checked against exact and numeric oracles."""

from .constructions import MergedTriple, merged_subdivision, named_op, named_triple
from .graph import Graph, make_family

__version__ = "0.1.0"

__all__ = ["Graph", "MergedTriple", "make_family", "merged_subdivision", "named_op", "named_triple"]
