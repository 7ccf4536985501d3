"""Exact computations with diagonal harmonic alternants and the q,t-Catalan polynomial."""
from .dyck import DyckPath, catalan_number, coefficient_grid, enumerate_paths, qt_catalan
from .harmonics import (
    allen_basis,
    build_span,
    dimension_grid,
    musum_catalan,
    reconstruct_catalan_from_strings,
    starter_count_moments,
    starter_count_qseries,
    starter_grid_from_catalan,
    starters_kernel,
    theorem21_prune,
    verify_sl2_decomposition,
)
from .mvpoly import MultiPoly
from .operators import E, F, OperatorWord, Pi, partition_alternant, vandermonde
from .partitions import Partition, hook_stats, partitions_of
from .qtpoly import QtLaurent, q_binomial, q_catalan
from .symfunc import mn_character, schur_to_power

__version__ = "0.1.0"

__all__ = [
    "allen_basis",
    "build_span",
    "catalan_number",
    "coefficient_grid",
    "dimension_grid",
    "DyckPath",
    "E",
    "enumerate_paths",
    "F",
    "hook_stats",
    "mn_character",
    "MultiPoly",
    "musum_catalan",
    "OperatorWord",
    "Partition",
    "partition_alternant",
    "partitions_of",
    "Pi",
    "q_binomial",
    "q_catalan",
    "qt_catalan",
    "QtLaurent",
    "reconstruct_catalan_from_strings",
    "schur_to_power",
    "starter_count_moments",
    "starter_count_qseries",
    "starter_grid_from_catalan",
    "starters_kernel",
    "theorem21_prune",
    "vandermonde",
    "verify_sl2_decomposition",
]
