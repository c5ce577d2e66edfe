import pytest
import sys
import os

import numpy as np

sys.path.append(os.path.join(os.path.dirname(__file__), '../src'))

from libreBiortho.core import Grid, SampledFunction
from libreBiortho.dictionaries import DictionaryKind, DictionarySpec, build_dictionary

# Continuous squared norm of the Mexican hat 2/(sqrt(3) pi^(1/4)) exp(-t^2) (1 - t^2)
HAT_NORM_SQ = 11.0 / (12.0 * np.sqrt(2.0))

@pytest.fixture
def two_point_grid():
    """Grid [0, 1] with two samples, step 1."""
    return Grid(start=0.0, end=1.0, points=2)

@pytest.fixture
def figure_grid():
    """Default figure grid [-5, 7] x 1201."""
    return Grid(start=-5.0, end=7.0, points=1201)

@pytest.fixture
def fine_grid():
    """Grid [-8, 8] x 3201 used for quadrature checks."""
    return Grid(start=-8.0, end=8.0, points=3201)

@pytest.fixture
def wide_grid():
    """Grid wide enough that hat tails are negligible; integer shifts are whole steps."""
    return Grid(start=-10.0, end=14.0, points=2401)

@pytest.fixture
def hats(figure_grid):
    """The five shifted Mexican hats on the figure grid."""
    spec = DictionarySpec(kind=DictionaryKind.MEXICAN_HAT, count=5, grid=figure_grid)
    return build_dictionary(spec)

@pytest.fixture
def rng():
    return np.random.default_rng(20240517)

def gaussian_atoms(grid, count, rng, spacing=0.35, width=0.2):
    """Well-conditioned atoms: jittered narrow Gaussians on distinct centres."""
    t = grid.abscissae()
    first = grid.start + 0.1 * (grid.end - grid.start)
    atoms = []
    for i in range(count):
        centre = first + i * spacing + rng.uniform(-0.03, 0.03)
        amplitude = rng.uniform(0.5, 2.0)
        atoms.append(SampledFunction(grid, amplitude * np.exp(-((t - centre) / width) ** 2)))
    return atoms

def random_targets(grid, count, seed):
    spec = DictionarySpec(kind=DictionaryKind.RANDOM_SMOOTH, count=count, grid=grid, seed=seed)
    return build_dictionary(spec)

def difference_norm(a, b):
    return float(np.sqrt(a.grid.step * np.sum((a.values - b.values) ** 2)))
