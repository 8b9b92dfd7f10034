import logging

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from geometry.units.Halfspace import Halfspace
from geometry.units.GeometryError import DimensionMismatch, Unsupported, OutOfRange
from geometry.routines.frames import affine_frame
from geometry.constants.tolerances import EPS_GEOM, MAX_DIM

class ConvexBody:
  # Points live in an affine frame of dimension intrinsic_dim; facets and the boundary triangulation use frame coordinates.
  dim: int
  intrinsic_dim: int
  vertices: np.ndarray
  facets: list[Halfspace]
  normals: np.ndarray
  offsets: np.ndarray
  origin: np.ndarray
  basis: np.ndarray
  intrinsic_normals: np.ndarray
  intrinsic_offsets: np.ndarray
  boundary: np.ndarray

  def __init__(self, vertices: np.ndarray, origin: np.ndarray, basis: np.ndarray, intrinsic_normals: np.ndarray, intrinsic_offsets: np.ndarray, boundary: np.ndarray):
    self.dim = vertices.shape[1]
    self.intrinsic_dim = basis.shape[0]
    self.vertices = vertices
    self.origin = origin
    self.basis = basis
    self.intrinsic_normals = intrinsic_normals
    self.intrinsic_offsets = intrinsic_offsets
    self.boundary = boundary

    if self.intrinsic_dim == self.dim:
      self.normals = intrinsic_normals @ basis
      self.offsets = intrinsic_offsets + self.normals @ origin
    else:
      self.normals = np.zeros((0, self.dim))
      self.offsets = np.zeros(0)
    self.facets = [Halfspace(normal, offset) for normal, offset in zip(self.normals, self.offsets)]

    for array in (self.vertices, self.origin, self.basis, self.intrinsic_normals, self.intrinsic_offsets, self.boundary, self.normals, self.offsets):
      array.flags.writeable = False

  def __repr__(self):
    return f'ConvexBody(dim={self.dim}, intrinsic_dim={self.intrinsic_dim}, vertices={len(self.vertices)}, facets={len(self.facets)})'

  @property
  def full_dimensional(self) -> bool:
    return self.intrinsic_dim == self.dim

  @property
  def scale(self) -> float:
    return max(1.0, float(np.abs(self.vertices).max()))

  def coordinates(self, points: np.ndarray) -> np.ndarray:
    return (np.atleast_2d(points) - self.origin) @ self.basis.T



  @classmethod
  def span(cls, points, tol: float = EPS_GEOM) -> 'ConvexBody':
    points = np.asarray(points, dtype=float)
    if points.ndim != 2 or len(points) == 0:
      raise DimensionMismatch(f'Expected a non-empty list of equal-length points, got an array of shape {points.shape}.')
    if not 1 <= points.shape[1] <= MAX_DIM:
      raise Unsupported(f'Bodies of dimension {points.shape[1]} are not supported.')
    if not np.all(np.isfinite(points)):
      raise OutOfRange('Points must have finite coordinates.')

    scale = max(1.0, float(np.abs(points).max()))
    origin, basis = affine_frame(points, tol * scale)
    coords = (points - origin) @ basis.T

    if basis.shape[0] == 0:
      return cls(points[:1].copy(), points[0].copy(), basis, np.zeros((0, 0)), np.zeros(0), np.zeros((0, 0, 0)))

    if basis.shape[0] == 1:
      lo, hi = int(np.argmin(coords[:, 0])), int(np.argmax(coords[:, 0]))
      return cls(
        points[[lo, hi]].copy(),
        origin,
        basis,
        np.array([[-1.0], [1.0]]),
        np.array([-coords[lo, 0], coords[hi, 0]]),
        coords[[lo, hi]][:, None, :].copy()
      )

    try:
      hull = ConvexHull(coords)
    except QhullError:
      # Qhull rejects nearly flat inputs that the frame still counts as full rank.
      logging.getLogger('GEOMETRY').warning(f'Qhull rejected {len(points)} points as flat; retrying in joggled mode.')
      hull = ConvexHull(coords, qhull_options='QJ')

    normals, offsets = merge_facets(hull.equations[:, :-1], -hull.equations[:, -1], tol * scale)
    extreme = [i for i in hull.vertices if is_extreme(coords[i], normals, offsets, tol * scale)]
    if len(extreme) == 0: extreme = list(hull.vertices)

    return cls(points[extreme].copy(), origin, basis, normals, offsets, coords[hull.simplices].copy())

def merge_facets(normals: np.ndarray, offsets: np.ndarray, tol: float) -> tuple[np.ndarray, np.ndarray]:
  # Qhull triangulates facets; coplanar triangles carry the same equation.
  kept = list()
  for index in range(len(normals)):
    duplicate = any(
      np.max(np.abs(normals[index] - normals[other])) <= 1e-8 and abs(offsets[index] - offsets[other]) <= max(tol, 1e-8)
      for other in kept
    )
    if not duplicate: kept.append(index)

  return normals[kept].copy(), offsets[kept].copy()

def is_extreme(point: np.ndarray, normals: np.ndarray, offsets: np.ndarray, tol: float) -> bool:
  incident = np.abs(normals @ point - offsets) <= max(tol, 1e-12)
  if np.count_nonzero(incident) < normals.shape[1]: return False
  return np.linalg.matrix_rank(normals[incident], tol=1e-6) == normals.shape[1]
