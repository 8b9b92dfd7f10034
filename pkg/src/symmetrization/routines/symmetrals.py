import itertools
import logging

import numpy as np

from geometry.units.ConvexBody import ConvexBody
from geometry.units.Direction import Direction
from geometry.units.GeometryError import DegenerateBody, Unsupported, OutOfRange, DimensionMismatch
from geometry.routines.kernel import contains_many
from geometry.constants.tolerances import EPS_GEOM
from profiles.units.SectionProfile import SectionProfile
from symmetrization.units.ChordFunction import ChordFunction

def steiner(K: ConvexBody, u, grid_n: int = 40) -> ConvexBody:
  u = Direction.coerce(u)
  if u.dim != K.dim:
    raise DimensionMismatch(f'Direction in R^{u.dim} cannot symmetrize a body in R^{K.dim}.')
  if not K.full_dimensional:
    raise DegenerateBody(f'Cannot symmetrize flat body {K}.')
  if K.dim > 2 and grid_n < 8:
    raise OutOfRange(f'Steiner symmetrization needs grid_n >= 8, got {grid_n}.')

  chords = ChordFunction(K, u)
  samples = base_samples(chords.base, grid_n) if K.dim > 2 else np.unique(K.vertices @ u.basis.T, axis=0)
  half = 0.5 * chords.length(samples)

  lifted = samples @ u.basis
  points = np.vstack([lifted + half[:, None] * u.u, lifted - half[:, None] * u.u])
  logging.getLogger('SYMMETRIZATION').debug(f'Steiner symmetral of {K} along {u} from {len(samples)} chords.')
  return ConvexBody.span(points)

def base_samples(base: ConvexBody, grid_n: int) -> np.ndarray:
  """Grid points lo + i*(hi - lo)/grid_n inside the shadow, plus its vertices; nested when grid_n doubles."""
  lo, hi = base.vertices.min(axis=0), base.vertices.max(axis=0)
  axes = [lo[j] + np.arange(grid_n + 1) * (hi[j] - lo[j]) / grid_n for j in range(base.dim)]
  grid = np.array(list(itertools.product(*axes)))
  grid = grid[contains_many(base, grid, EPS_GEOM * base.scale)]
  return np.vstack([grid, base.vertices])

def schwarz(K: ConvexBody, u, n_slices: int = 64, m_ring: int = 64) -> ConvexBody:
  u = Direction.coerce(u)
  if K.dim != 3:
    raise Unsupported(f'Schwarz rounding is implemented for d = 3 only, got d = {K.dim}.')
  if u.dim != K.dim:
    raise DimensionMismatch(f'Direction in R^{u.dim} cannot round a body in R^{K.dim}.')
  if not K.full_dimensional:
    raise DegenerateBody(f'Cannot round flat body {K}.')
  if n_slices < 8 or m_ring < 8:
    raise OutOfRange(f'Schwarz rounding needs n_slices, m_ring >= 8, got {n_slices}, {m_ring}.')

  prof = SectionProfile(K, u)
  angles = 2 * np.pi * np.arange(m_ring) / m_ring
  circle = np.column_stack([np.cos(angles), np.sin(angles)]) @ u.basis

  rings = list()
  for p in np.linspace(prof.p_min, prof.p_max, n_slices):
    radius = rounding_radius(prof.area(p))
    rings.append(p * u.u[None, :] + radius * circle)

  logging.getLogger('SYMMETRIZATION').debug(f'Schwarz rounding of {K} along {u} on {n_slices} slices of {m_ring} ring points.')
  return ConvexBody.span(np.vstack(rings))

def rounding_radius(area: float) -> float:
  return float(np.sqrt(max(area, 0.0) / np.pi))
