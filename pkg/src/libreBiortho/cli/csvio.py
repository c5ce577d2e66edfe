"""CSV serialization of sampled functions and result tables."""

import logging
import os
from typing import Optional, Sequence

import numpy as np
import pandas as pd

from libreBiortho.core import Grid, SampledFunction
from libreBiortho.errors import GridMismatch, InvalidInput

logger = logging.getLogger(__name__)

# 17 significant digits round-trip every double exactly
FLOAT_FORMAT = "%.17g"

def _ensure_parent(path: str) -> None:
    parent = os.path.dirname(path)
    if parent:
        os.makedirs(parent, exist_ok=True)

def write_table(path: str, frame: pd.DataFrame) -> str:
    """Write a DataFrame deterministically; returns the path."""
    _ensure_parent(path)
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    logger.info(f"Wrote {len(frame)} rows to {path}")
    return path

def functions_frame(functions: Sequence[SampledFunction],
                    names: Optional[Sequence[str]] = None) -> pd.DataFrame:
    """Columns t,value for one function, t,v1,v2,... for several."""
    if not functions:
        raise InvalidInput("Nothing to write")
    grid = functions[0].grid
    if any(f.grid != grid for f in functions):
        raise GridMismatch("All written functions must share one grid")
    if names is None:
        names = ["value"] if len(functions) == 1 else [f"v{i}" for i in range(1, len(functions) + 1)]
    columns = {"t": grid.abscissae()}
    columns.update({name: f.values for name, f in zip(names, functions)})
    return pd.DataFrame(columns)

def write_functions(path: str, functions: Sequence[SampledFunction],
                    names: Optional[Sequence[str]] = None) -> str:
    return write_table(path, functions_frame(functions, names))

def read_function(path: str, grid: Grid, column: Optional[str] = None) -> SampledFunction:
    """Read a `t,value` CSV and check its abscissae against grid."""
    frame = pd.read_csv(path, float_precision="round_trip")
    if "t" not in frame.columns or len(frame.columns) < 2:
        raise InvalidInput(f"{path}: expected a 't' column and at least one value column")
    column = column or next(c for c in frame.columns if c != "t")

    t = frame["t"].to_numpy(dtype=np.float64)
    if len(t) != grid.points or not np.allclose(t, grid.abscissae(), rtol=0.0, atol=1e-9 * grid.step):
        raise GridMismatch(
            f"{path}: abscissae do not match grid [{grid.start}, {grid.end}] x {grid.points}"
        )
    return SampledFunction(grid, frame[column].to_numpy(dtype=np.float64))
