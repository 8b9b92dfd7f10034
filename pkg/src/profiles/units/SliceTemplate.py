import math

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from geometry.units.ConvexBody import ConvexBody
from geometry.units.Direction import Direction

class SliceTemplate:
  # Between two consecutive vertex offsets the section keeps its combinatorics.
  lo: float
  hi: float
  base: np.ndarray
  drift: np.ndarray
  hull_points: np.ndarray
  simplices: np.ndarray
  valid: bool

  def __init__(self, K: ConvexBody, u: Direction, lo: float, hi: float):
    self.lo = lo
    self.hi = hi

    heights = K.vertices @ u.u
    middle = 0.5 * (lo + hi)
    below, above = heights < middle, heights > middle
    low, high = K.vertices[below], K.vertices[above]
    h_low, h_high = heights[below], heights[above]

    # Crossing of segment [a, b] with <x, u> = p is base + p * drift.
    span = (h_high[None, :] - h_low[:, None])[:, :, None]
    direction = (high[None, :, :] - low[:, None, :]) / span
    base = low[:, None, :] - h_low[:, None, None] * direction

    self.base = base.reshape(-1, K.dim) @ u.basis.T
    self.drift = direction.reshape(-1, K.dim) @ u.basis.T
    self.valid = True

    points = self.base + middle * self.drift
    if points.shape[1] == 1:
      self.hull_points = np.array([int(np.argmin(points[:, 0])), int(np.argmax(points[:, 0]))])
      self.simplices = np.zeros((0, 1), dtype=int)
      return

    try:
      hull = ConvexHull(points)
    except QhullError:
      self.valid = False
      return
    self.hull_points = hull.vertices
    self.simplices = hull.simplices

  def __repr__(self):
    return f'SliceTemplate(({self.lo:.6g}, {self.hi:.6g}), {len(self.base)} crossings)'

  def area(self, p: float) -> float:
    points = self.base + p * self.drift
    if points.shape[1] == 1:
      return float(points[self.hull_points[1], 0] - points[self.hull_points[0], 0])

    apex = points[self.hull_points].mean(axis=0)
    spokes = points[self.simplices] - apex[None, None, :]
    return float(np.abs(np.linalg.det(spokes)).sum() / math.factorial(points.shape[1]))
