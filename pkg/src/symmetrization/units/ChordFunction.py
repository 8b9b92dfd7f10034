import numpy as np

from geometry.units.ConvexBody import ConvexBody
from geometry.units.Direction import Direction
from geometry.units.GeometryError import DegenerateBody
from geometry.routines.kernel import project

class ChordFunction:
  body: ConvexBody
  u: Direction
  base: ConvexBody
  rising: np.ndarray
  falling: np.ndarray

  def __init__(self, body: ConvexBody, u: Direction):
    if not body.full_dimensional:
      raise DegenerateBody(f'{body} has no chords along {u}.')

    self.body = body
    self.u = u
    self.base = project(body, u)

    slopes = body.normals @ u.u
    # Rows (a.E^T, a.u, b): facets bounding the chord from above or below.
    rows = np.column_stack([body.normals @ u.basis.T, slopes, body.offsets])
    self.rising = rows[slopes > 1e-12]
    self.falling = rows[slopes < -1e-12]

  def __repr__(self):
    return f'ChordFunction({self.body}, u={self.u})'

  def upper(self, Y: np.ndarray) -> np.ndarray:
    Y = np.atleast_2d(Y)
    bounds = (self.rising[:, -1][None, :] - Y @ self.rising[:, :-2].T) / self.rising[:, -2][None, :]
    return bounds.min(axis=1)

  def lower(self, Y: np.ndarray) -> np.ndarray:
    Y = np.atleast_2d(Y)
    bounds = (self.falling[:, -1][None, :] - Y @ self.falling[:, :-2].T) / self.falling[:, -2][None, :]
    return -bounds.max(axis=1)

  def length(self, Y: np.ndarray) -> np.ndarray:
    return np.maximum(self.upper(Y) + self.lower(Y), 0.0)
