"""Direct (non-recursive) duals through the inverse Gram matrix.

Inversion always goes through the spectrum, G^-1 = sum eta_n lambda_n^-1 eta_n^T,
applied in atom coordinates. This is the verification path for the engine.
"""

import logging
from typing import List, Sequence

import numpy as np

from libreBiortho.core import SampledFunction, check_same_grid
from .gram import GramSpectrum, atom_matrix, gram, spectrum

logger = logging.getLogger(__name__)

def direct_duals(atoms: Sequence[SampledFunction]) -> List[SampledFunction]:
    """dual_n = sum_m (G^-1)_{nm} alpha_m."""
    rows = atom_matrix(atoms)
    spec = spectrum(gram(atoms))
    duals = spec.inverse() @ rows
    grid = atoms[0].grid
    return [SampledFunction(grid, d) for d in duals]

def direct_coefficients(atoms: Sequence[SampledFunction], f: SampledFunction) -> List[float]:
    """Least-squares coefficients c_n = <dual_n, f>."""
    atom_matrix(atoms)
    check_same_grid(atoms[0], f)
    step = f.grid.step
    return [step * float(np.dot(d.values, f.values)) for d in direct_duals(atoms)]

def direct_projection(atoms: Sequence[SampledFunction], f: SampledFunction) -> SampledFunction:
    """Orthogonal projection of f onto span(atoms) via the oracle coefficients."""
    coefficients = np.asarray(direct_coefficients(atoms, f))
    return SampledFunction(f.grid, coefficients @ atom_matrix(atoms))

def eigenfunctions(atoms: Sequence[SampledFunction], spec: GramSpectrum) -> List[SampledFunction]:
    """phi_n = (sum_m eta_{mn} alpha_m) / sqrt(lambda_n), orthonormal on the grid."""
    rows = atom_matrix(atoms)
    lifted = (spec.eigenvectors.T @ rows) / np.sqrt(spec.eigenvalues)[:, None]
    return [SampledFunction(atoms[0].grid, phi) for phi in lifted]
