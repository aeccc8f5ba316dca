"""Separation routines for minimal separator, indegree and blossom inequalities."""

from separation.blossom import BlossomSeparator, separate_blossom_exact, separate_blossom_heuristic
from separation.cut import (
    BlossomWitness,
    Cut,
    CutFamily,
    IndegreeWitness,
    MsiWitness,
    blossom_row,
    indegree_row,
    msi_row,
)
from separation.indegree import best_orientation, separate_indegree
from separation.msi import (
    build_msi_support_digraph,
    lift_to_minimal_separator,
    separate_msi_fractional,
    separate_msi_integer,
)

__all__ = [
    "BlossomSeparator",
    "BlossomWitness",
    "Cut",
    "CutFamily",
    "IndegreeWitness",
    "MsiWitness",
    "best_orientation",
    "blossom_row",
    "build_msi_support_digraph",
    "indegree_row",
    "lift_to_minimal_separator",
    "msi_row",
    "separate_blossom_exact",
    "separate_blossom_heuristic",
    "separate_indegree",
    "separate_msi_fractional",
    "separate_msi_integer",
]
