"""Versioned state of the recursive dual-family construction."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Tuple

import numpy as np

from libreBiortho.core import Grid, SampledFunction

class InsertionStatus(str, Enum):
    ACCEPTED = "accepted"
    REJECTED_DEPENDENT = "rejected_dependent"

@dataclass(frozen=True, eq=False)
class DualFamily:
    """Atoms alpha_1..alpha_k with their biorthogonal duals.

    sum_n |alpha_n><dual_n| is the orthogonal projector onto span(atoms).
    Instances are immutable snapshots; insertion returns a new version.
    """
    grid: Grid
    dependence_tol: float
    atoms: Tuple[SampledFunction, ...] = ()
    duals: Tuple[SampledFunction, ...] = ()
    residual_norms_sq: Tuple[float, ...] = ()

    def __post_init__(self):
        if not (len(self.atoms) == len(self.duals) == len(self.residual_norms_sq)):
            raise ValueError("atoms, duals and residual_norms_sq must have equal length")

    @property
    def k(self) -> int:
        return len(self.atoms)

    @property
    def version(self) -> int:
        return self.k

    def atom_matrix(self) -> np.ndarray:
        """Atom samples stacked as rows, shape (k, points)."""
        if not self.atoms:
            return np.empty((0, self.grid.points))
        return np.vstack([a.values for a in self.atoms])

    def dual_matrix(self) -> np.ndarray:
        """Dual samples stacked as rows, shape (k, points)."""
        if not self.duals:
            return np.empty((0, self.grid.points))
        return np.vstack([d.values for d in self.duals])

@dataclass(frozen=True, eq=False)
class InsertionOutcome:
    """Result of offering one candidate atom to a family."""
    status: InsertionStatus
    residual_norm_sq: float
    family: DualFamily
    residual: SampledFunction = field(repr=False)

    @property
    def accepted(self) -> bool:
        return self.status is InsertionStatus.ACCEPTED
