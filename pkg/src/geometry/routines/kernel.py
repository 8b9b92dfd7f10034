import math

import numpy as np
from scipy.spatial.distance import pdist

from geometry.units.ConvexBody import ConvexBody
from geometry.units.Direction import Direction
from geometry.units.GeometryError import DimensionMismatch, Unsupported, ZeroDirection, OutOfRange
from geometry.constants.tolerances import EPS_GEOM, MIN_DIM, MAX_DIM

def hull(points, dim: int) -> ConvexBody:
  if not MIN_DIM <= dim <= MAX_DIM:
    raise Unsupported(f'Bodies of dimension {dim} are not supported; expected {MIN_DIM} to {MAX_DIM}.')
  if len(points) == 0:
    raise DimensionMismatch('A hull needs at least one point.')
  for index, point in enumerate(points):
    if len(point) != dim:
      raise DimensionMismatch(f'Point {index} has dimension {len(point)}, expected {dim}.')

  return ConvexBody.span(np.asarray(points, dtype=float))

def minkowski_combination(A: ConvexBody, B: ConvexBody, alpha: float, beta: float) -> ConvexBody:
  if A.dim != B.dim:
    raise DimensionMismatch(f'Cannot combine bodies of dimensions {A.dim} and {B.dim}.')
  if alpha <= 0 or beta <= 0:
    raise OutOfRange(f'Minkowski coefficients must be positive, got {alpha} and {beta}.')

  sums = alpha * A.vertices[:, None, :] + beta * B.vertices[None, :, :]
  return ConvexBody.span(sums.reshape(-1, A.dim))



def volume(K: ConvexBody) -> float:
  if not K.full_dimensional: return 0.0
  return measure(K)

def measure(K: ConvexBody) -> float:
  """Intrinsic k-volume of K, k = intrinsic_dim; a single point measures 0."""
  if K.intrinsic_dim == 0: return 0.0
  return float(cone_volumes(K).sum())

def cone_volumes(K: ConvexBody) -> np.ndarray:
  # Fan from the vertex centroid over the triangulated boundary.
  apex = K.coordinates(K.vertices).mean(axis=0)
  spokes = K.boundary - apex[None, None, :]
  return np.abs(np.linalg.det(spokes)) / math.factorial(K.intrinsic_dim)

def centroid(K: ConvexBody) -> np.ndarray:
  if K.intrinsic_dim == 0: return K.vertices[0].copy()

  apex = K.coordinates(K.vertices).mean(axis=0)
  weights = cone_volumes(K)
  if weights.sum() <= 0: return K.vertices.mean(axis=0)

  cone_centers = (K.boundary.sum(axis=1) + apex) / (K.intrinsic_dim + 1)
  center = (weights[:, None] * cone_centers).sum(axis=0) / weights.sum()
  return K.origin + center @ K.basis

def diameter(K: ConvexBody) -> float:
  if len(K.vertices) < 2: return 0.0
  return float(pdist(K.vertices).max())



def support(K: ConvexBody, v) -> float:
  v = np.asarray(v, dtype=float).ravel()
  if len(v) != K.dim:
    raise DimensionMismatch(f'Direction of dimension {len(v)} queries a body of dimension {K.dim}.')
  if np.linalg.norm(v) <= EPS_GEOM:
    raise ZeroDirection(f'Support function queried with zero vector {v.tolist()}.')

  return float(np.max(K.vertices @ v))

def face(K: ConvexBody, v, tol: float = EPS_GEOM) -> ConvexBody:
  v = Direction.coerce(v)
  heights = K.vertices @ v.u
  top = heights >= heights.max() - tol * K.scale
  return ConvexBody.span(K.vertices[top])

def project(K: ConvexBody, u) -> ConvexBody:
  u = Direction.coerce(u)
  return ConvexBody.span(K.vertices @ u.basis.T)

def section(K: ConvexBody, u, p: float, tol: float = EPS_GEOM) -> ConvexBody | None:
  """
  Slice K with the hyperplane <x, u> = p, in the same u-perp coordinates as project().

  The slice is the hull of the vertices lying on the plane and of the crossing
  points of every segment joining vertices on opposite sides. Returns None when
  the plane misses K.
  """
  u = Direction.coerce(u)
  heights = K.vertices @ u.u - p
  band = tol * K.scale
  if heights.min() > band or heights.max() < -band: return None

  on = np.abs(heights) <= band
  below, above = heights < -band, heights > band

  low, high = K.vertices[below], K.vertices[above]
  h_low, h_high = heights[below], heights[above]
  ratio = h_low[:, None] / (h_low[:, None] - h_high[None, :])
  crossings = low[:, None, :] + ratio[:, :, None] * (high[None, :, :] - low[:, None, :])

  points = np.vstack([K.vertices[on], crossings.reshape(-1, K.dim)])
  return ConvexBody.span(points @ u.basis.T)

def lift(S: ConvexBody, u, p: float) -> ConvexBody:
  u = Direction.coerce(u)
  if S.dim != u.dim - 1:
    raise DimensionMismatch(f'A section of dimension {S.dim} cannot be lifted along a direction in R^{u.dim}.')
  return ConvexBody.span(S.vertices @ u.basis + p * u.u)



def contains(K: ConvexBody, x, tol: float = EPS_GEOM) -> bool:
  return bool(contains_many(K, np.asarray(x, dtype=float)[None, :], tol)[0])

def contains_many(K: ConvexBody, X: np.ndarray, tol: float = EPS_GEOM) -> np.ndarray:
  X = np.atleast_2d(np.asarray(X, dtype=float))
  if X.shape[1] != K.dim:
    raise DimensionMismatch(f'Points of dimension {X.shape[1]} tested against a body of dimension {K.dim}.')

  if K.full_dimensional:
    return np.all(X @ K.normals.T - K.offsets[None, :] <= tol, axis=1)

  coords = K.coordinates(X)
  residual = np.linalg.norm((X - K.origin) - coords @ K.basis, axis=1)
  inside = residual <= tol
  if K.intrinsic_dim > 0:
    inside &= np.all(coords @ K.intrinsic_normals.T - K.intrinsic_offsets[None, :] <= tol, axis=1)
  return inside



def translate(K: ConvexBody, t) -> ConvexBody:
  return ConvexBody.span(K.vertices + np.asarray(t, dtype=float))

def dilate(K: ConvexBody, factor: float, t=None) -> ConvexBody:
  shift = np.zeros(K.dim) if t is None else np.asarray(t, dtype=float)
  return ConvexBody.span(factor * K.vertices + shift)

def stretch(K: ConvexBody, v, length: float) -> ConvexBody:
  """K + [0, length*v]."""
  v = Direction.coerce(v)
  return ConvexBody.span(np.vstack([K.vertices, K.vertices + length * v.u]))
