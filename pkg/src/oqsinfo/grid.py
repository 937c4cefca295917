"""Uniform symmetric grids, trapezoid weights and sampled density fields."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

NORM_TOL = 1e-6
NEGATIVE_TOL = 1e-12


@dataclass(frozen=True)
class Grid1D:
    """Odd number of equally spaced nodes on ``[-half_width, half_width]``."""

    half_width: float = 8.0
    points: int = 2001

    def __post_init__(self):
        if not self.half_width > 0:
            raise ValueError(f"half_width must be > 0, got {self.half_width!r}")
        if int(self.points) != self.points or self.points < 3 or self.points % 2 == 0:
            raise ValueError(f"points must be an odd integer >= 3, got {self.points!r}")

    @property
    def spacing(self) -> float:
        return 2.0 * self.half_width / (self.points - 1)

    @cached_property
    def nodes(self) -> np.ndarray:
        # symmetric construction keeps x[i] == -x[-1-i] and x[mid] == 0 exactly
        half = self.spacing * np.arange(1, self.points // 2 + 1)
        nodes = np.concatenate([-half[::-1], [0.0], half])
        nodes.setflags(write=False)
        return nodes

    @cached_property
    def weights(self) -> np.ndarray:
        w = np.full(self.points, self.spacing)
        w[0] = w[-1] = 0.5 * self.spacing
        w.setflags(write=False)
        return w

    def integrate(self, values) -> float:
        return float(np.sum(self.weights * np.asarray(values)))

    def refined(self, factor: int = 2) -> "Grid1D":
        """Same interval with the spacing divided by ``factor``."""
        return Grid1D(self.half_width, (self.points - 1) * factor + 1)


@dataclass(frozen=True)
class Grid2D:
    """Tensor product of two 1D grids; arrays are indexed ``[i_first, i_second]``."""

    first: Grid1D = field(default_factory=lambda: Grid1D(8.0, 401))
    second: Grid1D = None

    def __post_init__(self):
        if self.second is None:
            object.__setattr__(self, "second", self.first)

    @classmethod
    def square(cls, half_width: float = 8.0, points: int = 401) -> "Grid2D":
        g = Grid1D(half_width, points)
        return cls(g, g)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.first.points, self.second.points)

    def mesh(self) -> tuple[np.ndarray, np.ndarray]:
        return np.meshgrid(self.first.nodes, self.second.nodes, indexing="ij")

    @cached_property
    def weights(self) -> np.ndarray:
        w = np.outer(self.first.weights, self.second.weights)
        w.setflags(write=False)
        return w

    def integrate(self, values) -> float:
        return float(np.sum(self.weights * np.asarray(values)))

    def refined(self, factor: int = 2) -> "Grid2D":
        return Grid2D(self.first.refined(factor), self.second.refined(factor))


def _clamped(values: np.ndarray) -> np.ndarray:
    values = np.asarray(values, dtype=float)
    if values.size and values.min() < -NEGATIVE_TOL:
        raise ValueError(f"density has negative values down to {values.min():.3e}")
    return np.where(values < 0.0, 0.0, values)


@dataclass(frozen=True, eq=False)
class DensityField:
    """Nonnegative density sampled on a :class:`Grid1D` or :class:`Grid2D`.

    Values in ``(-1e-12, 0)`` are clamped to zero on construction; anything
    more negative is rejected.
    """

    grid: Grid1D | Grid2D
    values: np.ndarray

    def __post_init__(self):
        values = _clamped(self.values)
        expected = (self.grid.points,) if isinstance(self.grid, Grid1D) else self.grid.shape
        if values.shape != expected:
            raise ValueError(f"values shape {values.shape} does not match grid {expected}")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def ndim(self) -> int:
        return self.values.ndim

    @cached_property
    def norm(self) -> float:
        return self.grid.integrate(self.values)

    @property
    def is_normalized(self) -> bool:
        return abs(self.norm - 1.0) <= NORM_TOL

    def marginal(self, axis: int) -> "DensityField":
        """Integrate out one variable of a 2D field, keeping ``axis``."""
        if not isinstance(self.grid, Grid2D):
            raise ValueError("marginal needs a 2D field")
        if axis == 0:
            return DensityField(self.grid.first, np.sum(self.values * self.grid.second.weights, axis=1))
        if axis == 1:
            return DensityField(self.grid.second, np.sum(self.grid.first.weights[:, None] * self.values, axis=0))
        raise ValueError("axis must be 0 or 1")

    @classmethod
    def product(cls, a: "DensityField", b: "DensityField") -> "DensityField":
        """Joint field ``a(x) b(y)`` of two independent 1D fields."""
        return cls(Grid2D(a.grid, b.grid), np.outer(a.values, b.values))
