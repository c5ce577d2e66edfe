"""Discretized Hilbert-space primitives."""

from .models import Grid, SampledFunction
from .functions import axpy, check_same_grid, combine, inner, norm, norm_sq

__all__ = [
    'Grid', 'SampledFunction',
    'inner', 'norm_sq', 'norm', 'axpy', 'combine', 'check_same_grid',
]
