"""Exact arithmetic for Parke-Taylor varieties.

Submodules:

* ``permutations``: the index set Sigma_n and weak order helpers
* ``linalg``: exact integer matrices, Hermite normal form, lattices
* ``polys`` / ``groebner``: sparse polynomials over Q and Groebner bases
* ``ptcore``: the matrix A_n and the two parametrizations
* ``toric``: binomials, the toric ideal and the quadratic-span check
* ``lifts``: Pluecker relations and their certified lifts
* ``moduli``: Kapranov coordinates and the linear map L_n
"""

from __future__ import annotations

__version__ = "0.1.0"

from .kernels import BACKEND
from .permutations import enumerate_sigma
from .ptcore import build_matrix, pullback_z, vanishes_on_pt, vanishes_on_torus
from .toric import check_conjecture, kernel_binomials, toric_ideal
from .lifts import closed_pt_ideal, lift_plucker, open_pt_generators, plucker_relations
from .moduli import build_L, verify_linear_iso

__all__ = [
    "BACKEND",
    "__version__",
    "build_L",
    "build_matrix",
    "check_conjecture",
    "closed_pt_ideal",
    "enumerate_sigma",
    "kernel_binomials",
    "lift_plucker",
    "open_pt_generators",
    "plucker_relations",
    "pullback_z",
    "toric_ideal",
    "vanishes_on_pt",
    "vanishes_on_torus",
    "verify_linear_iso",
]
