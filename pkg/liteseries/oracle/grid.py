from dataclasses import dataclass
from typing import Tuple

import numpy as np
import pandas as pd

from ..errors import GridError
from ..kernel.params import ParamSet


@dataclass(frozen=True)
class Grid:
    """Uniform rectangle [y_min, y_max] x [z_start, z_end]; ny points in y, nz steps in z."""

    y_min: float
    y_max: float
    ny: int
    z_start: float
    z_end: float
    nz: int

    def __post_init__(self):
        if self.ny < 3:
            raise GridError(f"ny must be at least 3, got {self.ny}")
        if not self.y_max > self.y_min:
            raise GridError(f"empty y-range [{self.y_min}, {self.y_max}]")
        if not self.z_start > 0:
            raise GridError(f"z_start must be strictly positive, got {self.z_start}")
        if not self.z_end > self.z_start:
            raise GridError(f"z_end {self.z_end} must exceed z_start {self.z_start}")
        if self.nz < 1:
            raise GridError(f"nz must be at least 1, got {self.nz}")

    @property
    def dy(self) -> float:
        return (self.y_max - self.y_min) / (self.ny - 1)

    @property
    def dz(self) -> float:
        return (self.z_end - self.z_start) / self.nz

    @property
    def y_values(self) -> np.ndarray:
        return np.linspace(self.y_min, self.y_max, self.ny)

    def z_at(self, step: int) -> float:
        return self.z_start + step * self.dz

    def refined(self, factor: int) -> "Grid":
        return Grid(self.y_min, self.y_max, self.ny, self.z_start, self.z_end, self.nz * factor)

    def widened(self, extra: int) -> "Grid":
        """Same spacing, `extra` more points on each side in y."""
        dy = self.dy
        return Grid(self.y_min - extra * dy, self.y_max + extra * dy, self.ny + 2 * extra, self.z_start, self.z_end, self.nz)


@dataclass(frozen=True)
class GridSolution:
    """Retained z-levels of the oracle; slices[k, i] is u at (y_i, z_levels[k])."""

    grid: Grid
    params: ParamSet
    z_levels: np.ndarray
    slices: np.ndarray
    theta: float = 0.5

    def __post_init__(self):
        if self.slices.shape != (len(self.z_levels), self.grid.ny):
            raise GridError(f"slices shape {self.slices.shape} does not match the grid")

    @property
    def y(self) -> np.ndarray:
        return self.grid.y_values

    def level_index(self, z: float) -> int:
        """Nearest retained level; z must lie inside [z_start, z_end]."""
        tolerance = 1e-9 * max(1.0, abs(self.grid.z_end))
        if z < self.grid.z_start - tolerance or z > self.grid.z_end + tolerance:
            raise GridError(f"z={z} outside [{self.grid.z_start}, {self.grid.z_end}]")
        return int(np.argmin(np.abs(self.z_levels - z)))

    def slice_at(self, z: float) -> Tuple[float, np.ndarray]:
        k = self.level_index(z)
        return float(self.z_levels[k]), self.slices[k]

    def final(self) -> np.ndarray:
        return self.slices[-1]

    def to_frame(self) -> pd.DataFrame:
        ny = self.grid.ny
        return pd.DataFrame({
            "y": np.tile(self.y, len(self.z_levels)),
            "z": np.repeat(self.z_levels, ny),
            "u": self.slices.reshape(-1),
        })


@dataclass(frozen=True)
class ErrorMetrics:
    max_abs: float
    rms: float
    at_point: Tuple[float, float]
