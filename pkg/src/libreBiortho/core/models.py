"""Discretized Hilbert-space value types."""

import math
from dataclasses import dataclass
from typing import Callable, Sequence, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from libreBiortho.errors import InvalidInput

class Grid(BaseModel):
    """Uniform grid of sample abscissae on [start, end]."""
    start: float = Field(..., description="First abscissa")
    end: float = Field(..., description="Last abscissa")
    points: int = Field(..., ge=2, description="Number of samples, endpoints included")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode='after')
    def validate_interval(self):
        """Validate the interval is finite and non-degenerate."""
        if not (math.isfinite(self.start) and math.isfinite(self.end)):
            raise ValueError("Grid bounds must be finite")
        if self.end <= self.start:
            raise ValueError(f"Grid end ({self.end}) must be greater than start ({self.start})")
        return self

    @property
    def step(self) -> float:
        return (self.end - self.start) / (self.points - 1)

    def abscissa(self, i: int) -> float:
        """Abscissa of sample i."""
        return self.start + i * self.step

    def abscissae(self) -> np.ndarray:
        """All abscissae, computed exactly as abscissa(i)."""
        return self.start + np.arange(self.points) * self.step

@dataclass(frozen=True, eq=False)
class SampledFunction:
    """A real waveform sampled on a grid; values are read-only."""
    grid: Grid
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64, copy=True)
        if values.ndim != 1 or values.shape[0] != self.grid.points:
            raise InvalidInput(
                f"Expected {self.grid.points} samples, got shape {values.shape}"
            )
        if not np.all(np.isfinite(values)):
            raise InvalidInput("Sampled values must be finite")
        values.flags.writeable = False
        object.__setattr__(self, 'values', values)

    @classmethod
    def from_callable(cls, grid: Grid, fn: Callable[[np.ndarray], np.ndarray]) -> "SampledFunction":
        """Sample a vectorized callable at the grid abscissae."""
        return cls(grid, fn(grid.abscissae()))

    @classmethod
    def zeros(cls, grid: Grid) -> "SampledFunction":
        return cls(grid, np.zeros(grid.points))

    @classmethod
    def from_values(cls, grid: Grid, values: Union[Sequence[float], np.ndarray]) -> "SampledFunction":
        return cls(grid, np.asarray(values, dtype=np.float64))

    def __len__(self) -> int:
        return self.grid.points
