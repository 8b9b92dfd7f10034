import logging

import numpy as np

from geometry.units.ConvexBody import ConvexBody
from geometry.units.Direction import Direction
from geometry.units.GeometryError import DegenerateBody, OutOfRange
from geometry.routines.kernel import contains_many
from oracle.units.GridSpec import GridSpec
from oracle.units.SampledProfile import SampledProfile

# Only contains_many and raw vertices are used here, never volume, section or profiles.

def grid_volume(K: ConvexBody, n: int = 200, monte_carlo: bool = False, seed: int = None) -> float:
  if not K.full_dimensional:
    raise DegenerateBody(f'Grid volume needs a full-dimensional body, got intrinsic dimension {K.intrinsic_dim}.')

  grid = GridSpec(K.vertices, n)
  if monte_carlo:
    return monte_carlo_volume(K, grid, seed)

  # Slab counts are integers, so the total does not depend on the order of summation.
  count = sum(int(np.count_nonzero(contains_many(K, grid.slab(i), 0.0))) for i in range(grid.n))
  logging.getLogger('ORACLE').debug(f'{count} of {grid.n ** grid.dim} cell centers of {grid} lie in {K}.')
  return count * grid.cell_volume

def monte_carlo_volume(K: ConvexBody, grid: GridSpec, seed: int = None) -> float:
  rng = np.random.Generator(np.random.PCG64(seed))
  batch = grid.n ** (grid.dim - 1)
  count = 0
  for _ in range(grid.n):
    samples = rng.uniform(grid.lo, grid.hi, size=(batch, grid.dim))
    count += int(np.count_nonzero(contains_many(K, samples, 0.0)))

  logging.getLogger('ORACLE').debug(f'{count} of {batch * grid.n} uniform samples from seed {seed} lie in {K}.')
  return grid.box_volume * count / (batch * grid.n)

def grid_section_profile(K: ConvexBody, u, n_offsets: int = 64, n_grid: int = 100) -> SampledProfile:
  if not K.full_dimensional:
    raise DegenerateBody(f'Grid sections need a full-dimensional body, got intrinsic dimension {K.intrinsic_dim}.')
  if n_offsets < 2:
    raise OutOfRange(f'A sampled profile needs at least 2 offsets, got {n_offsets}.')

  u = Direction.coerce(u)
  heights = K.vertices @ u.u
  lo, hi = heights.min(), heights.max()
  offsets = lo + (np.arange(n_offsets) + 0.5) * (hi - lo) / n_offsets

  grid = GridSpec(K.vertices @ u.basis.T, n_grid)
  plane = grid.centers() @ u.basis
  areas = np.array([np.count_nonzero(contains_many(K, plane + p * u.u, 0.0)) for p in offsets]) * grid.cell_volume

  profile = SampledProfile(u, offsets, areas)
  logging.getLogger('ORACLE').debug(f'Sampled {profile}, layered volume {profile.volume():.6g}.')
  return profile
