import itertools
import logging

import numpy as np

from geometry.units.ConvexBody import ConvexBody
from geometry.units.GeometryError import DegenerateSample, OutOfRange, Unsupported
from geometry.routines.kernel import hull
from geometry.constants.tolerances import MIN_DIM, MAX_DIM

RESAMPLE_ATTEMPTS = 8

def cube(d: int) -> ConvexBody:
  return hull(list(itertools.product([0.0, 1.0], repeat=d)), d)

def box(lengths) -> ConvexBody:
  return hull(list(itertools.product(*[[0.0, float(length)] for length in lengths])), len(lengths))

def simplex(d: int) -> ConvexBody:
  return hull(np.vstack([np.zeros(d), np.eye(d)]), d)

def cross_polytope(d: int) -> ConvexBody:
  return hull(np.vstack([np.eye(d), -np.eye(d)]), d)

def cone(d: int, height: float = 1.0) -> ConvexBody:
  """Pyramid over the unit (d-1)-cube with its apex above the center."""
  base = [list(corner) + [0.0] for corner in itertools.product([0.0, 1.0], repeat=d - 1)]
  apex = [0.5] * (d - 1) + [height]
  return hull(base + [apex], d)

def random_body(d: int, n_points: int, seed: int) -> ConvexBody:
  """Hull of n_points uniform points in the unit ball from the PCG64 stream of seed."""
  if not MIN_DIM <= d <= MAX_DIM:
    raise Unsupported(f'Random bodies are drawn in dimensions {MIN_DIM} to {MAX_DIM}, got {d}.')
  if n_points < d + 1:
    raise OutOfRange(f'A full-dimensional body in R^{d} needs at least {d + 1} points, got {n_points}.')

  rng = np.random.Generator(np.random.PCG64(seed))
  for attempt in range(RESAMPLE_ATTEMPTS):
    directions = rng.standard_normal((n_points, d))
    directions /= np.linalg.norm(directions, axis=1)[:, None]
    radii = rng.uniform(0.0, 1.0, size=n_points) ** (1 / d)
    body = hull(directions * radii[:, None], d)
    if body.full_dimensional: return body

    logging.getLogger('HARNESS').warning(f'Draw {attempt + 1} for seed {seed} is flat; resampling.')

  raise DegenerateSample(f'Seed {seed} produced no full-dimensional hull in R^{d} after {RESAMPLE_ATTEMPTS} draws.')
