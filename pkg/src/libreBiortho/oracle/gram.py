"""Gram matrix of an atom family and its spectral decomposition."""

import logging
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from libreBiortho.config import Settings, get_settings
from libreBiortho.core import SampledFunction, check_same_grid
from libreBiortho.errors import IllConditioned, InvalidInput
from .jacobi import jacobi_eigh

logger = logging.getLogger(__name__)

@dataclass(frozen=True, eq=False)
class GramMatrix:
    """entries[m][n] = <alpha_m, alpha_n>."""
    entries: np.ndarray

    @property
    def k(self) -> int:
        return self.entries.shape[0]

@dataclass(frozen=True, eq=False)
class GramSpectrum:
    """Eigenpairs of a Gram matrix, eigenvalues descending."""
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    condition_number: float

    @property
    def lambda_max(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def lambda_min(self) -> float:
        return float(self.eigenvalues[-1])

    def reconstruct(self) -> np.ndarray:
        """sum_n lambda_n eta_n eta_n^T."""
        return (self.eigenvectors * self.eigenvalues) @ self.eigenvectors.T

    def inverse(self) -> np.ndarray:
        """sum_n eta_n lambda_n^-1 eta_n^T."""
        return (self.eigenvectors / self.eigenvalues) @ self.eigenvectors.T

def atom_matrix(atoms: Sequence[SampledFunction]) -> np.ndarray:
    """Stack atoms as rows after checking they share one grid."""
    atoms = list(atoms)
    if not atoms:
        raise InvalidInput("At least one atom is required")
    for atom in atoms[1:]:
        check_same_grid(atoms[0], atom)
    return np.vstack([a.values for a in atoms])

def gram(atoms: Sequence[SampledFunction]) -> GramMatrix:
    """Gram matrix of the atoms, symmetrized as (M + M^T) / 2."""
    rows = atom_matrix(atoms)
    step = atoms[0].grid.step
    entries = step * (rows @ rows.T)
    return GramMatrix(entries=(entries + entries.T) / 2.0)

def spectrum(g: GramMatrix, strict: bool = True, settings: Settings = None) -> GramSpectrum:
    """Jacobi eigen-decomposition of a Gram matrix.

    Raises IllConditioned when lambda_min <= ILL_CONDITIONED_RATIO * lambda_max
    (which covers non-PSD matrices) unless strict is False, in which case
    the condition number is reported as infinite.
    """
    numerics = (settings or get_settings()).numerics
    eigenvalues, eigenvectors, sweeps = jacobi_eigh(
        g.entries, tol=numerics.JACOBI_TOL, max_sweeps=numerics.JACOBI_MAX_SWEEPS
    )
    lambda_max, lambda_min = float(eigenvalues[0]), float(eigenvalues[-1])
    logger.debug(f"Jacobi converged in {sweeps} sweeps for k={g.k}")

    if lambda_max <= 0.0 or lambda_min <= numerics.ILL_CONDITIONED_RATIO * lambda_max:
        if strict:
            raise IllConditioned(lambda_min, lambda_max)
        if lambda_min < -numerics.PSD_TOL * max(lambda_max, 0.0):
            logger.warning(f"Gram matrix is not positive semi-definite: lambda_min={lambda_min:.3e}")
        condition = math.inf
    else:
        condition = lambda_max / lambda_min

    return GramSpectrum(
        eigenvalues=eigenvalues,
        eigenvectors=eigenvectors,
        condition_number=condition,
    )
