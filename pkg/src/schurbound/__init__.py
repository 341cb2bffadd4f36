"""Exact bounds on Schur multipliers of class-2 p-groups of exponent p."""

from __future__ import annotations

from .altmap import AltMap, load_altmap
from .bounds import PGroupParams
from .greedy import construct_pair_basis, normalize_prop24
from .grouplab import ClassTwoGroup, construct_thm43, schur_exponent_exact
from .psirank import dim_im_psi
from .report import BoundReport, analyze_map

__version__ = "0.1.0"

__all__ = [
    "AltMap",
    "BoundReport",
    "ClassTwoGroup",
    "PGroupParams",
    "analyze_map",
    "construct_pair_basis",
    "construct_thm43",
    "dim_im_psi",
    "load_altmap",
    "normalize_prop24",
    "schur_exponent_exact",
]
