"""scikit-learn adapter around the recursive dual family."""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from libreBiortho.core import Grid, SampledFunction
from libreBiortho.engine import grow_family, new_family
from .projection import project

class DualFamilyProjector(TransformerMixin, BaseEstimator):
    """Project samples onto the span of the rows passed to fit.

    Rows of X are functions sampled on a uniform grid starting at
    `grid_start` with spacing `grid_step`. `transform` returns expansion
    coefficients, `inverse_transform` maps coefficients back to samples.
    """

    def __init__(self, grid_start: float = 0.0, grid_step: float = 1.0,
                 dependence_tol: float = 1e-12):
        self.grid_start = grid_start
        self.grid_step = grid_step
        self.dependence_tol = dependence_tol

    def _grid(self, points: int) -> Grid:
        return Grid(
            start=self.grid_start,
            end=self.grid_start + self.grid_step * (points - 1),
            points=points,
        )

    def fit(self, X, y=None):
        X = check_array(X, dtype=np.float64, ensure_min_features=2)
        grid = self._grid(X.shape[1])
        outcomes = grow_family(
            new_family(grid, self.dependence_tol),
            (SampledFunction(grid, row) for row in X),
        )
        self.family_ = outcomes[-1].family if outcomes else new_family(grid, self.dependence_tol)
        self.accepted_ = np.array([i for i, o in enumerate(outcomes) if o.accepted], dtype=int)
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X):
        check_is_fitted(self, 'family_')
        X = check_array(X, dtype=np.float64)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"Expected {self.n_features_in_} features, got {X.shape[1]}")
        grid = self.family_.grid
        return np.array([
            project(self.family_, SampledFunction(grid, row)).coefficients for row in X
        ])

    def inverse_transform(self, X):
        check_is_fitted(self, 'family_')
        X = check_array(X, dtype=np.float64)
        return X @ self.family_.atom_matrix()
