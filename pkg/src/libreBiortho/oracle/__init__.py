"""Direct Gram-operator oracle."""

from .jacobi import jacobi_eigh
from .gram import GramMatrix, GramSpectrum, gram, spectrum
from .direct import direct_coefficients, direct_duals, direct_projection, eigenfunctions

__all__ = [
    'jacobi_eigh',
    'GramMatrix', 'GramSpectrum', 'gram', 'spectrum',
    'direct_duals', 'direct_coefficients', 'direct_projection', 'eigenfunctions',
]
