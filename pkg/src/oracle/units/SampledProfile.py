import numpy as np

from geometry.units.Direction import Direction

class SampledProfile:
  u: Direction
  offsets: np.ndarray
  areas: np.ndarray
  step: float

  def __init__(self, u: Direction, offsets: np.ndarray, areas: np.ndarray):
    self.u = u
    self.offsets = np.asarray(offsets, dtype=float)
    self.areas = np.asarray(areas, dtype=float)
    self.step = float(self.offsets[1] - self.offsets[0])

  def __repr__(self):
    return f'SampledProfile(u={self.u}, {len(self.offsets)} offset(s), Q~{self.Q:.6g} at p~{self.peak:.6g})'

  @property
  def Q(self) -> float:
    return float(self.areas.max())

  @property
  def peak(self) -> float:
    return float(self.offsets[int(np.argmax(self.areas))])

  def plateau(self, rel: float = 0.02) -> tuple[float, float]:
    """Offsets whose sampled area is within rel of the sampled maximum."""
    near = self.offsets[self.areas >= (1 - rel) * self.Q]
    return float(near.min()), float(near.max())

  def volume(self) -> float:
    return float(self.areas.sum() * self.step)
