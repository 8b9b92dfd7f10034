import numpy as np
from scipy.optimize import nnls

from geometry.units.ConvexBody import ConvexBody
from geometry.units.GeometryError import DimensionMismatch
from geometry.routines.kernel import contains
from geometry.constants.tolerances import EPS_GEOM

def distance_to(K: ConvexBody, x, tol: float = EPS_GEOM) -> float:
  """Euclidean distance from x to K; 0 inside."""
  x = np.asarray(x, dtype=float)
  if contains(K, x, tol * K.scale): return 0.0
  if len(K.vertices) == 1: return float(np.linalg.norm(K.vertices[0] - x))

  # Nearest convex combination of the vertices; the sum-to-one row is enforced by weight.
  spokes = K.vertices - x
  weight = 1e3 * max(1.0, float(np.abs(spokes).max()))
  system = np.vstack([spokes.T, weight * np.ones(len(spokes))])
  target = np.concatenate([np.zeros(K.dim), [weight]])
  w, _ = nnls(system, target)

  if w.sum() <= 0: return float(np.linalg.norm(spokes, axis=1).min())
  w = w / w.sum()
  return float(np.linalg.norm(w @ spokes))

def hausdorff(K: ConvexBody, L: ConvexBody) -> float:
  if K.dim != L.dim:
    raise DimensionMismatch(f'Hausdorff distance between bodies of dimensions {K.dim} and {L.dim}.')

  return max(
    max(distance_to(L, vertex) for vertex in K.vertices),
    max(distance_to(K, vertex) for vertex in L.vertices)
  )
