"""Command-line configuration model."""

import math
from typing import List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from libreBiortho.core import Grid

class RunConfig(BaseModel):
    """Validated flags shared by every subcommand."""
    grid_start: float = Field(default=-5.0, description="First abscissa")
    grid_end: float = Field(default=7.0, description="Last abscissa")
    grid_points: int = Field(default=1201, ge=2, description="Number of grid samples")
    atom_count: int = Field(default=5, ge=1, description="Number of dictionary atoms")
    dependence_tol: float = Field(default=1e-12, gt=0.0, lt=1.0, description="Relative dependence threshold")
    output_path: str = Field(default="", description="Prefix prepended to every output file name")
    target: Optional[str] = Field(default=None, description="CSV file with the target function")
    dual_index: int = Field(default=1, ge=1, description="Dual traced by the figures command")
    versions: List[int] = Field(default_factory=lambda: [1, 3, 5], description="Family versions traced")
    seed: int = Field(default=0, description="Seed for random test dictionaries and targets")
    log_level: str = Field(default="INFO", pattern="^(DEBUG|INFO|WARNING|ERROR|CRITICAL)$")

    @field_validator('versions')
    def validate_versions(cls, v):
        """Versions must be positive and strictly increasing."""
        if not v:
            raise ValueError("At least one version must be traced")
        if any(k < 1 for k in v) or any(b <= a for a, b in zip(v, v[1:])):
            raise ValueError("Versions must be positive and strictly increasing")
        return v

    @model_validator(mode='after')
    def validate_grid(self):
        """Fail early on a degenerate grid."""
        if not (math.isfinite(self.grid_start) and math.isfinite(self.grid_end)):
            raise ValueError("Grid bounds must be finite")
        if self.grid_end <= self.grid_start:
            raise ValueError(f"--grid-end ({self.grid_end}) must exceed --grid-start ({self.grid_start})")
        return self

    @property
    def grid(self) -> Grid:
        return Grid(start=self.grid_start, end=self.grid_end, points=self.grid_points)

    def output_file(self, name: str) -> str:
        return f"{self.output_path}{name}"
