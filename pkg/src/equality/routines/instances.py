import logging

import numpy as np

from geometry.units.ConvexBody import ConvexBody
from geometry.units.Direction import Direction
from geometry.units.GeometryError import Unsupported, DegenerateSample
from geometry.routines.kernel import dilate, stretch, volume
from bonnesen.units.BonnesenReport import BonnesenReport
from bonnesen.routines.chain import verify_chain
from harness.units.Scenario import Scenario

GENERATED_EQUALITY_TOL = 1e-9

def build_equality_instance(kind: Scenario.Kind, seed: int, d: int) -> Scenario:
  """
  A pair stretched along u from two homothetic copies of a cone whose apex
  projects into its base, so the base is the unique maximal section.
  """
  if d not in (2, 3):
    raise Unsupported(f'Equality instances are generated for d = 2 or 3, got d = {d}.')

  rng = np.random.Generator(np.random.PCG64(seed))
  u = random_direction(rng, d)
  base = cone_base(rng, u)
  weights = rng.dirichlet(np.ones(len(base)))
  apex = weights @ base + rng.uniform(0.5, 1.5) * u.u
  cone = ConvexBody.span(np.vstack([base, apex]))

  rho = rng.uniform(0.5, 2.0, size=2)
  shifts = rng.uniform(-1.0, 1.0, size=(2, d))
  lengths = np.zeros(2) if kind == Scenario.Kind.HOMOTHETY else rng.uniform(0.2, 1.5, size=2)
  alpha = float(rng.uniform(0.2, 0.8))

  A = stretch(dilate(cone, rho[0], shifts[0]), u, lengths[0])
  B = stretch(dilate(cone, rho[1], shifts[1]), u, lengths[1])
  mode = BonnesenReport.Mode.PROJECTION if kind == Scenario.Kind.PROJECTION_STRETCH else BonnesenReport.Mode.SECTION

  scenario = Scenario(A, B, alpha, 1 - alpha, u, mode, seed=seed)
  scenario.kind = kind
  scenario.truth = {'rho': rho.tolist(), 'shifts': shifts.tolist(), 'lengths': lengths.tolist(), 'v': u.u.tolist(), 'base': cone}

  report = verify_chain(A, B, scenario.alpha, scenario.beta, u, mode, GENERATED_EQUALITY_TOL)
  if not report.equality_bonnesen:
    logging.getLogger('EQUALITY').error(f'Generated {scenario} misses equality: gap {report.gap_bonnesen:.3e}.')
  else:
    logging.getLogger('EQUALITY').debug(f'Generated {scenario}, gap {report.gap_bonnesen:.3e}.')
  return scenario

def random_direction(rng: np.random.Generator, d: int) -> Direction:
  while True:
    draw = rng.standard_normal(d)
    if np.linalg.norm(draw) > 1e-3: return Direction(draw)

def cone_base(rng: np.random.Generator, u: Direction, attempts: int = 8) -> np.ndarray:
  """Vertices of a random full-dimensional polytope in u-perp, in ambient coordinates."""
  d = u.dim
  for _ in range(attempts):
    if d == 2:
      local = np.array([[rng.uniform(-1.0, -0.3)], [rng.uniform(0.3, 1.0)]])
    else:
      radii = np.sqrt(rng.uniform(0.0, 1.0, size=6))
      angles = rng.uniform(0.0, 2 * np.pi, size=6)
      local = np.column_stack([radii * np.cos(angles), radii * np.sin(angles)])

    flat = ConvexBody.span(local)
    if flat.full_dimensional and volume(flat) > 0.05:
      return flat.vertices @ u.basis

  raise DegenerateSample(f'No usable cone base after {attempts} draws.')
