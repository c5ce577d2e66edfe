"""Recursive dual-family engine."""

from .family import DualFamily, InsertionOutcome, InsertionStatus
from .recursion import (
    biorthogonality_defect,
    compute_residual,
    grow_family,
    insert_atom,
    new_family,
    refresh_duals,
)

__all__ = [
    'DualFamily', 'InsertionOutcome', 'InsertionStatus',
    'new_family', 'compute_residual', 'insert_atom', 'grow_family',
    'refresh_duals', 'biorthogonality_defect',
]
