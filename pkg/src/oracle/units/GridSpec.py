import numpy as np

from geometry.units.GeometryError import OutOfRange

MIN_POINTS = 16
INFLATION = 1e-6

class GridSpec:
  """A regular n^k grid of cell centers over the inflated bounding box of some points."""
  n: int
  lo: np.ndarray
  hi: np.ndarray

  def __init__(self, points: np.ndarray, n: int):
    if n < MIN_POINTS:
      raise OutOfRange(f'A counting grid needs at least {MIN_POINTS} points per axis, got {n}.')

    points = np.atleast_2d(np.asarray(points, dtype=float))
    self.n = int(n)
    self.lo = points.min(axis=0) - INFLATION
    self.hi = points.max(axis=0) + INFLATION

  def __repr__(self):
    return f'GridSpec({self.n}^{self.dim} over [{", ".join(f"{a:.4g}..{b:.4g}" for a, b in zip(self.lo, self.hi))}])'

  @property
  def dim(self) -> int:
    return len(self.lo)

  @property
  def step(self) -> np.ndarray:
    return (self.hi - self.lo) / self.n

  @property
  def cell_volume(self) -> float:
    return float(np.prod(self.step))

  @property
  def box_volume(self) -> float:
    return float(np.prod(self.hi - self.lo))

  def axis(self, index: int) -> np.ndarray:
    return self.lo[index] + (np.arange(self.n) + 0.5) * self.step[index]

  def slab(self, i: int) -> np.ndarray:
    """Cell centers whose first coordinate is the i-th center along axis 0."""
    rest = np.meshgrid(*[self.axis(k) for k in range(1, self.dim)], indexing='ij')
    rest = np.column_stack([grid.ravel() for grid in rest]) if rest else np.empty((1, 0))
    return np.column_stack([np.full(len(rest), self.axis(0)[i]), rest])

  def centers(self) -> np.ndarray:
    grids = np.meshgrid(*[self.axis(k) for k in range(self.dim)], indexing='ij')
    return np.column_stack([grid.ravel() for grid in grids])
