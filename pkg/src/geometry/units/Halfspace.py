import numpy as np

from geometry.units.GeometryError import ZeroDirection
from geometry.constants.tolerances import EPS_GEOM

class Halfspace:
  normal: np.ndarray
  offset: float

  def __init__(self, normal, offset: float):
    normal = np.asarray(normal, dtype=float).ravel()
    norm = float(np.linalg.norm(normal))
    if norm <= EPS_GEOM:
      raise ZeroDirection(f'Halfspace normal {normal.tolist()} has zero length.')

    self.normal = normal / norm
    self.offset = float(offset) / norm
    self.normal.flags.writeable = False

  def __repr__(self):
    return f'Halfspace(<{", ".join(f"{c:.6g}" for c in self.normal)}, x> <= {self.offset:.6g})'

  def signed_distance(self, x) -> float:
    return float(np.dot(self.normal, x) - self.offset)

  def contains(self, x, tol: float = EPS_GEOM) -> bool:
    return self.signed_distance(x) <= tol

  def on_boundary(self, x, tol: float = EPS_GEOM) -> bool:
    return abs(self.signed_distance(x)) <= tol
