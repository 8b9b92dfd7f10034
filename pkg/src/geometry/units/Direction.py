import numpy as np

from geometry.units.GeometryError import ZeroDirection
from geometry.routines.frames import complement_basis
from geometry.constants.tolerances import EPS_GEOM

class Direction:
  u: np.ndarray

  def __init__(self, vector, tol: float = EPS_GEOM):
    vector = np.asarray(vector, dtype=float).ravel()
    norm = float(np.linalg.norm(vector))
    if not np.isfinite(norm) or norm <= tol:
      raise ZeroDirection(f'Direction {vector.tolist()} has zero length.')

    self.u = vector / norm
    self.u.flags.writeable = False

  @classmethod
  def coerce(cls, value) -> 'Direction':
    return value if isinstance(value, Direction) else cls(value)

  def __repr__(self):
    return f'Direction({", ".join(f"{c:.6g}" for c in self.u)})'

  def __neg__(self) -> 'Direction':
    return Direction(-self.u)

  @property
  def dim(self) -> int:
    return len(self.u)

  @property
  def basis(self) -> np.ndarray:
    return complement_basis(self.u)

  def angle(self, other: 'Direction') -> float:
    return float(np.arccos(np.clip(np.dot(self.u, Direction.coerce(other).u), -1.0, 1.0)))
