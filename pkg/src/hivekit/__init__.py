"""Hives, BZ data, k-hives and valuation functions for GL_n, checked exactly."""

from __future__ import annotations

from .bz import BZDatum, enumerate_mv, is_mv, mv_conditions
from .hive import Hive, boundary, check_hive, enumerate_hives
from .khive import KHive, associator, associator_inverse, boundary_k, complete_tetrahedron, enumerate_khives
from .lr_oracle import lr_coefficient, multi_invariant_dim, triple_invariant_dim
from .phi import bz_to_hive, hive_to_bz, min_formula, verify_phi_bijection

__all__ = [
    "BZDatum", "Hive", "KHive", "associator", "associator_inverse", "boundary", "boundary_k",
    "bz_to_hive", "check_hive", "complete_tetrahedron", "enumerate_hives", "enumerate_khives",
    "enumerate_mv", "hive_to_bz", "is_mv", "lr_coefficient", "min_formula", "multi_invariant_dim",
    "mv_conditions", "triple_invariant_dim", "verify_phi_bijection",
]
