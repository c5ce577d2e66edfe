"""Inner products and linear combinations of sampled functions."""

import numpy as np

from libreBiortho.errors import GridMismatch, InvalidInput
from .models import SampledFunction

def check_same_grid(a, b) -> None:
    """Raise GridMismatch unless a.grid and b.grid share (start, end, points).

    Works for anything carrying a `grid`, so families check against functions too.
    """
    if a.grid != b.grid:
        raise GridMismatch(f"Grid mismatch: {a.grid!r} vs {b.grid!r}")

def inner(a: SampledFunction, b: SampledFunction) -> float:
    """Uniform-weight quadrature of the integral of a(t) * b(t).

    Real scalars only; a complex extension conjugates the first argument here.
    """
    check_same_grid(a, b)
    return a.grid.step * float(np.dot(a.values, b.values))

def norm_sq(a: SampledFunction) -> float:
    """Squared norm, inner(a, a)."""
    return inner(a, a)

def norm(a: SampledFunction) -> float:
    return float(np.sqrt(norm_sq(a)))

def axpy(y: SampledFunction, scale: float, x: SampledFunction) -> SampledFunction:
    """Return y + scale * x as a new function."""
    check_same_grid(y, x)
    return SampledFunction(y.grid, y.values + scale * x.values)

def combine(functions, coefficients) -> SampledFunction:
    """Linear combination sum(c_n * f_n) of functions sharing one grid."""
    functions = list(functions)
    if not functions:
        raise InvalidInput("combine() needs at least one function")
    for f in functions[1:]:
        check_same_grid(functions[0], f)
    coefficients = np.asarray(coefficients, dtype=np.float64)
    stacked = np.vstack([f.values for f in functions])
    return SampledFunction(functions[0].grid, coefficients @ stacked)
