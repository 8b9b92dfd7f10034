import logging

import numpy as np

from geometry.units.ConvexBody import ConvexBody
from geometry.units.GeometryError import DimensionMismatch, DegenerateBody
from geometry.routines.kernel import measure, centroid, dilate, diameter
from geometry.routines.distances import hausdorff
from geometry.constants.tolerances import EPS_GEOM, EPS_WIT

def detect_homothety(A: ConvexBody, B: ConvexBody, tol: float = EPS_WIT, allow_flat: bool = False) -> tuple[float, np.ndarray] | None:
  """
  Closed-form candidate B = lam*A + t from measures and centers of mass, then verified.

  With allow_flat, bodies of equal intrinsic dimension k are compared through
  their k-volumes; two points are homothetic with lam = 1.
  """
  if A.dim != B.dim:
    raise DimensionMismatch(f'Cannot compare bodies of dimensions {A.dim} and {B.dim}.')
  if not allow_flat and not (A.full_dimensional and B.full_dimensional):
    raise DegenerateBody(f'Homothety test needs full-dimensional bodies, got {A} and {B}.')
  if A.intrinsic_dim != B.intrinsic_dim: return None

  k = A.intrinsic_dim
  lam = 1.0 if k == 0 else (measure(B) / measure(A)) ** (1 / k)
  t = centroid(B) - lam * centroid(A)

  residual = hausdorff(B, dilate(A, lam, t))
  accepted = residual <= max(tol * diameter(B), EPS_GEOM)
  logging.getLogger('EQUALITY').debug(f'Homothety candidate lam={lam:.12g} has residual {residual:.3e}: {"accepted" if accepted else "rejected"}.')
  return (lam, t) if accepted else None
