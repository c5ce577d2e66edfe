"""Models describing atom families."""

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field

from libreBiortho.core import Grid

class DictionaryKind(str, Enum):
    MEXICAN_HAT = "mexican_hat"
    RANDOM_SMOOTH = "random_smooth"
    EXPLICIT_VALUES = "explicit_values"

class DictionarySpec(BaseModel):
    """Parametric description of an atom family."""
    kind: DictionaryKind = Field(..., description="Generator to use")
    count: int = Field(..., ge=1, description="Number of atoms N")
    grid: Grid = Field(..., description="Grid shared by all atoms")

    # RandomSmooth
    seed: int = Field(default=0, description="Seed of the random generator")
    length_scale: float = Field(default=0.5, description="Typical bump width (abscissa units)")
    bumps: int = Field(default=3, description="Gaussian bumps per atom")

    # ExplicitValues
    values: Optional[List[List[float]]] = Field(default=None, description="One sample list per atom")

    model_config = ConfigDict(frozen=True)
