"""Atom generators: shifted Mexican hats and synthetic test dictionaries."""

import logging
import math
from typing import List

import numpy as np

from libreBiortho.core import Grid, SampledFunction
from libreBiortho.errors import InvalidConfig
from .models import DictionaryKind, DictionarySpec

logger = logging.getLogger(__name__)

# 2 / (sqrt(3) * pi^(1/4))
MEXICAN_HAT_PEAK = 2.0 / (math.sqrt(3.0) * math.pi ** 0.25)

def mexican_hat(t: np.ndarray, shift: float = 0.0) -> np.ndarray:
    """Mexican hat profile exp(-u^2) (1 - u^2), u = t - shift, peak MEXICAN_HAT_PEAK."""
    u2 = (np.asarray(t, dtype=np.float64) - shift) ** 2
    return MEXICAN_HAT_PEAK * np.exp(-u2) * (1.0 - u2)

def mexican_hat_atom(n: int, grid: Grid) -> SampledFunction:
    """Atom alpha_n, the Mexican hat centred at t = n - 1."""
    if n < 1:
        raise InvalidConfig(f"Mexican hat index must be >= 1, got {n}")
    return SampledFunction.from_callable(grid, lambda t: mexican_hat(t, shift=n - 1))

def _random_smooth(spec: DictionarySpec) -> List[SampledFunction]:
    if spec.length_scale <= 0.0:
        raise InvalidConfig(f"length_scale must be positive, got {spec.length_scale}")
    if spec.bumps < 1:
        raise InvalidConfig(f"bumps must be >= 1, got {spec.bumps}")

    grid = spec.grid
    t = grid.abscissae()
    span = grid.end - grid.start
    lo, hi = grid.start + 0.1 * span, grid.end - 0.1 * span
    rng = np.random.default_rng(spec.seed)

    atoms = []
    for _ in range(spec.count):
        centers = rng.uniform(lo, hi, spec.bumps)
        widths = spec.length_scale * rng.uniform(0.5, 1.5, spec.bumps)
        amplitudes = rng.normal(0.0, 1.0, spec.bumps)
        values = np.zeros(grid.points)
        for c, w, a in zip(centers, widths, amplitudes):
            values += a * np.exp(-((t - c) / w) ** 2)
        atoms.append(SampledFunction(grid, values))
    return atoms

def _explicit_values(spec: DictionarySpec) -> List[SampledFunction]:
    if spec.values is None:
        raise InvalidConfig("explicit_values dictionaries need `values`")
    if len(spec.values) != spec.count:
        raise InvalidConfig(f"Expected {spec.count} value arrays, got {len(spec.values)}")
    atoms = []
    for i, row in enumerate(spec.values):
        if len(row) != spec.grid.points:
            raise InvalidConfig(f"Atom {i} has {len(row)} samples, grid has {spec.grid.points}")
        if not all(math.isfinite(v) for v in row):
            raise InvalidConfig(f"Atom {i} has non-finite samples")
        atoms.append(SampledFunction.from_values(spec.grid, row))
    return atoms

def build_dictionary(spec: DictionarySpec) -> List[SampledFunction]:
    """Generate the spec.count atoms of a dictionary on spec.grid."""
    if spec.kind == DictionaryKind.MEXICAN_HAT:
        atoms = [mexican_hat_atom(n, spec.grid) for n in range(1, spec.count + 1)]
    elif spec.kind == DictionaryKind.RANDOM_SMOOTH:
        atoms = _random_smooth(spec)
    elif spec.kind == DictionaryKind.EXPLICIT_VALUES:
        atoms = _explicit_values(spec)
    else:
        raise InvalidConfig(f"Unknown dictionary kind: {spec.kind}")

    logger.debug(f"Built {spec.kind.value} dictionary with {len(atoms)} atoms")
    return atoms
