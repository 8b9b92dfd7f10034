import itertools
import logging

import numpy as np
from scipy.optimize import linprog
from scipy.spatial import HalfspaceIntersection, QhullError

from geometry.units.ConvexBody import ConvexBody
from geometry.units.Direction import Direction
from geometry.units.Halfspace import Halfspace
from geometry.units.GeometryError import DegenerateBody, NotATranslate, OutOfRange
from geometry.routines.kernel import section, project, lift, centroid, translate, stretch, support, diameter
from geometry.routines.distances import hausdorff
from geometry.constants.tolerances import EPS_GEOM, EPS_OFF, EPS_WIT
from profiles.routines.profile import build_profile, level_bounds

def max_slab_stretch(K: ConvexBody, u, tol: float = EPS_WIT) -> tuple[Direction, float] | None:
  """Direction and length of the translation carrying the lowest maximal section onto the highest."""
  u = Direction.coerce(u)
  if not K.full_dimensional:
    raise DegenerateBody(f'Cannot find the maximal slab of flat body {K}.')

  prof = build_profile(K, u)
  if prof.q_hi - prof.q_lo <= EPS_OFF * max(1.0, prof.width): return None

  bottom, top = section(K, u, prof.q_lo), section(K, u, prof.q_hi)
  shift = centroid(top) - centroid(bottom)
  mismatch = hausdorff(translate(bottom, shift), top)
  if mismatch > tol * diameter(K):
    raise NotATranslate(f'Maximal sections of {K} at {prof.q_lo:.9g} and {prof.q_hi:.9g} differ by {mismatch:.3e} after matching centers.')

  w = shift @ u.basis + (prof.q_hi - prof.q_lo) * u.u
  logging.getLogger('EQUALITY').debug(f'Maximal slab of {K} along {u} spans [{prof.q_lo:.9g}, {prof.q_hi:.9g}]; stretch vector {np.round(w, 9).tolist()}.')
  return Direction(w), float(np.linalg.norm(w))



def erode(K: ConvexBody, v, lam: float) -> ConvexBody | None:
  """
  The Minkowski erosion K - [0, lam*v] = K intersected with K - lam*v, from the facets.
  Flat K is eroded inside its affine hull. Returns None when the erosion is empty.
  """
  v = Direction.coerce(v)
  if lam < 0:
    raise OutOfRange(f'Stretch length must be non-negative, got {lam}.')
  if lam == 0 or K.intrinsic_dim == 0: return K if lam == 0 else None

  local = v.u @ K.basis.T
  if np.linalg.norm(v.u - local @ K.basis) > EPS_GEOM: return None

  offsets = K.intrinsic_offsets - lam * np.maximum(0.0, K.intrinsic_normals @ local)
  points = intersect_halfspaces(K.intrinsic_normals, offsets, EPS_GEOM * K.scale)
  if points is None: return None
  return ConvexBody.span(K.origin + points @ K.basis)

def intersect_halfspaces(normals: np.ndarray, offsets: np.ndarray, tol: float) -> np.ndarray | None:
  k = normals.shape[1]
  if k == 1:
    upper = min(b for a, b in zip(normals[:, 0], offsets) if a > 0)
    lower = max(-b for a, b in zip(normals[:, 0], offsets) if a < 0)
    return None if lower > upper + tol else np.array([[lower], [max(lower, upper)]])

  # Chebyshev center: maximize r subject to <a, x> + r <= b.
  objective = np.zeros(k + 1)
  objective[-1] = -1.0
  found = linprog(objective, A_ub=np.column_stack([normals, np.ones(len(normals))]), b_ub=offsets, bounds=[(None, None)] * k + [(0, None)])
  if not found.success: return None

  center, radius = found.x[:-1], found.x[-1]
  if radius > 1e3 * tol:
    try:
      return HalfspaceIntersection(np.column_stack([normals, -offsets]), center).intersections
    except QhullError:
      logging.getLogger('EQUALITY').warning(f'Halfspace intersection failed at inradius {radius:.3e}; enumerating vertices.')

  # Flat or nearly flat erosion: enumerate vertices as feasible solutions of k tight constraints.
  vertices = list()
  for rows in itertools.combinations(range(len(normals)), k):
    system = normals[list(rows)]
    if abs(np.linalg.det(system)) < 1e-12: continue
    point = np.linalg.solve(system, offsets[list(rows)])
    if np.all(normals @ point - offsets <= tol): vertices.append(point)

  return np.array(vertices) if len(vertices) > 0 else None

def stretch_residual(K: ConvexBody, v, lam: float) -> float:
  eroded = erode(K, v, lam)
  if eroded is None: return float('inf')
  return hausdorff(stretch(eroded, v, lam), K)

def destretch(K: ConvexBody, v, lam: float, tol: float = EPS_WIT) -> ConvexBody | None:
  if lam == 0: return K

  eroded = erode(K, v, lam)
  if eroded is None: return None
  residual = hausdorff(stretch(eroded, v, lam), K)

  logging.getLogger('EQUALITY').debug(f'De-stretching {K} by {lam:.9g} along {v}: round-trip residual {residual:.3e}.')
  return eroded if residual <= tol * diameter(K) else None

def max_destretch(K: ConvexBody, v, tol: float = 1e-9) -> float:
  """Largest lam with K = K' + [0, lam*v], by bisection on the nondecreasing round-trip residual."""
  v = Direction.coerce(v)
  limit = tol * diameter(K)
  lo, hi = 0.0, support(K, v.u) + support(K, -v.u)

  if stretch_residual(K, v, hi) <= limit: return hi
  while hi - lo > 1e-12 * max(1.0, hi):
    middle = 0.5 * (lo + hi)
    if stretch_residual(K, v, middle) <= limit: lo = middle
    else: hi = middle

  logging.getLogger('EQUALITY').debug(f'Maximal de-stretch of {K} along {v} is {lo:.12g}.')
  return lo if lo > 1e-8 * diameter(K) else 0.0

def union_destretch(K: ConvexBody, u, v, lam: float, n_levels: int = 256) -> ConvexBody:
  """
  Planar de-stretch assembled level by level: the hull of the lower level
  sections and of the upper ones pulled back by lam*v.
  """
  u, v = Direction.coerce(u), Direction.coerce(v)
  if K.dim != 2:
    raise OutOfRange(f'The level-set de-stretch is implemented for d = 2 only, got d = {K.dim}.')

  prof = build_profile(K, u)
  points = [lift(section(K, u, prof.p_min), u, prof.p_min).vertices, lift(section(K, u, prof.p_max), u, prof.p_max).vertices - lam * v.u]
  for s in prof.Q * np.arange(1, n_levels + 1) / n_levels:
    k_minus, k_plus = level_bounds(prof, s)
    points.append(lift(section(K, u, k_minus), u, k_minus).vertices)
    points.append(lift(section(K, u, k_plus), u, k_plus).vertices - lam * v.u)

  return ConvexBody.span(np.vstack(points))



def hyperplane_residual(A_prime: ConvexBody, v, H: Halfspace) -> float:
  """Hausdorff gap between the shadows along v of A_prime and of its section by the boundary of H."""
  v = Direction.coerce(v)
  u = Direction(H.normal)
  cut = section(A_prime, u, H.offset, EPS_GEOM)
  if cut is None: return float('inf')
  return hausdorff(project(A_prime, v), project(lift(cut, u, H.offset), v))
