"""Test grid, sampled functions and inner products."""

import pytest
import numpy as np
from pydantic import ValidationError

from libreBiortho.core import Grid, SampledFunction, axpy, combine, inner, norm_sq
from libreBiortho.dictionaries import mexican_hat_atom
from libreBiortho.errors import GridMismatch, InvalidInput
from conftest import HAT_NORM_SQ

def test_grid_step_and_abscissae(figure_grid):
    """Test derived step and abscissae."""
    assert figure_grid.step == pytest.approx(0.01)
    t = figure_grid.abscissae()
    assert len(t) == 1201
    assert t[0] == -5.0
    assert t[137] == figure_grid.abscissa(137)

@pytest.mark.parametrize("start,end,points", [(0.0, 1.0, 1), (1.0, 1.0, 5), (2.0, 1.0, 5)])
def test_invalid_grid(start, end, points):
    """Test degenerate grids are rejected."""
    with pytest.raises(ValidationError):
        Grid(start=start, end=end, points=points)

def test_grids_compare_exactly():
    """Test grids compare by (start, end, points)."""
    assert Grid(start=0.0, end=1.0, points=11) == Grid(start=0, end=1, points=11)
    assert Grid(start=0.0, end=1.0, points=11) != Grid(start=0.0, end=1.0 + 1e-15, points=11)

def test_sampled_function_validation(two_point_grid):
    """Test length and finiteness invariants."""
    with pytest.raises(InvalidInput):
        SampledFunction.from_values(two_point_grid, [1.0, 2.0, 3.0])
    with pytest.raises(InvalidInput):
        SampledFunction.from_values(two_point_grid, [1.0, np.nan])
    with pytest.raises(InvalidInput):
        SampledFunction.from_values(two_point_grid, [np.inf, 0.0])

def test_sampled_function_is_a_value(two_point_grid):
    """Test values are copied and read-only."""
    source = np.array([1.0, 2.0])
    f = SampledFunction(two_point_grid, source)
    source[0] = 99.0
    assert f.values[0] == 1.0
    with pytest.raises(ValueError):
        f.values[0] = 5.0

def test_inner_constant(two_point_grid):
    """Test quadrature of constant one."""
    one = SampledFunction.from_values(two_point_grid, [1.0, 1.0])
    assert inner(one, one) == 2.0

def test_inner_sign_cancellation(two_point_grid):
    """Test orthogonal sign pattern."""
    a = SampledFunction.from_values(two_point_grid, [1.0, -1.0])
    b = SampledFunction.from_values(two_point_grid, [1.0, 1.0])
    assert inner(a, b) == 0.0
    assert inner(b, a) == 0.0

def test_inner_mexican_hat_quadrature(fine_grid):
    """Test the hat's squared norm against its closed form."""
    alpha = mexican_hat_atom(1, fine_grid)
    assert inner(alpha, alpha) == pytest.approx(HAT_NORM_SQ, abs=1e-4)
    assert norm_sq(alpha) == pytest.approx(HAT_NORM_SQ, abs=1e-4)

def test_inner_grid_mismatch(two_point_grid):
    """Test mixing grids raises."""
    other = Grid(start=0.0, end=2.0, points=2)
    with pytest.raises(GridMismatch):
        inner(SampledFunction.zeros(two_point_grid), SampledFunction.zeros(other))
    with pytest.raises(GridMismatch):
        axpy(SampledFunction.zeros(two_point_grid), 1.0, SampledFunction.zeros(other))

def test_norm_sq_examples(two_point_grid):
    """Test zero and constant two."""
    assert norm_sq(SampledFunction.zeros(two_point_grid)) == 0.0
    assert norm_sq(SampledFunction.from_values(two_point_grid, [2.0, 2.0])) == 8.0

def test_axpy(two_point_grid):
    """Test identity, cancellation and arithmetic."""
    x = SampledFunction.from_values(two_point_grid, [0.3, -1.7])
    zero = SampledFunction.zeros(two_point_grid)
    np.testing.assert_array_equal(axpy(zero, 1.0, x).values, x.values)
    np.testing.assert_array_equal(axpy(x, -1.0, x).values, [0.0, 0.0])

    y = SampledFunction.from_values(two_point_grid, [1.0, 2.0])
    ones = SampledFunction.from_values(two_point_grid, [1.0, 1.0])
    result = axpy(y, 3.0, ones)
    np.testing.assert_array_equal(result.values, [4.0, 5.0])
    np.testing.assert_array_equal(y.values, [1.0, 2.0])

def test_combine(two_point_grid):
    """Test linear combination helper."""
    a = SampledFunction.from_values(two_point_grid, [1.0, 0.0])
    b = SampledFunction.from_values(two_point_grid, [1.0, 1.0])
    np.testing.assert_array_equal(combine([a, b], [2.0, 1.0]).values, [3.0, 1.0])
    with pytest.raises(InvalidInput):
        combine([], [])

def test_inner_bilinear_and_symmetric(figure_grid, rng):
    """Test bilinearity and symmetry on random inputs."""
    for _ in range(20):
        a, b, c = (SampledFunction(figure_grid, rng.normal(size=figure_grid.points)) for _ in range(3))
        s = axpy(a, 1.0, b)
        lhs = abs(inner(s, c) - inner(a, c) - inner(b, c))
        bound = 1e-12 * (np.sqrt(norm_sq(a)) + np.sqrt(norm_sq(b))) * np.sqrt(norm_sq(c))
        assert lhs <= bound
        assert inner(a, b) == inner(b, a)

def test_cauchy_schwarz(figure_grid, rng):
    """Test the Cauchy-Schwarz inequality."""
    for _ in range(20):
        a = SampledFunction(figure_grid, rng.normal(size=figure_grid.points))
        b = SampledFunction(figure_grid, a.values + rng.normal(scale=1e-3, size=figure_grid.points))
        assert inner(a, b) ** 2 <= norm_sq(a) * norm_sq(b) * (1 + 1e-12)

def test_norm_sq_zero_iff_zero_values(figure_grid):
    """Test a single non-zero sample gives a positive norm."""
    values = np.zeros(figure_grid.points)
    assert norm_sq(SampledFunction(figure_grid, values)) == 0.0
    values[600] = 1e-150
    assert norm_sq(SampledFunction(figure_grid, values)) > 0.0
