import concurrent.futures
import functools
import logging
import time

import numpy as np

from geometry.routines.kernel import volume
from geometry.units.Direction import Direction
from geometry.units.GeometryError import OutOfRange
from profiles.routines.profile import build_profile, layer_cake_volume
from symmetrization.routines.inclusions import check_steiner_inclusion, check_schwarz_inclusion
from bonnesen.units.BonnesenReport import BonnesenReport
from bonnesen.routines.chain import verify_chain
from harness.components.Tolerances import Tolerances
from harness.units.FuzzReport import FuzzReport
from harness.routines.bodies import random_body

FUZZ_MODES = {
  'section': [BonnesenReport.Mode.SECTION],
  'projection': [BonnesenReport.Mode.PROJECTION],
  'both': [BonnesenReport.Mode.SECTION, BonnesenReport.Mode.PROJECTION]
}
POINTS_PER_DIM = 6
LAYER_CAKE_LEVELS = 512
LAYER_CAKE_TOL = 5e-3
INCLUSION_EVERY = 10
STEINER_GRID = 20
SCHWARZ_SLICES = 64

def run_fuzz(trials: int, d: int, base_seed: int, mode: str, tolerances: Tolerances = None, workers: int = 1) -> FuzzReport:
  if trials < 1:
    raise OutOfRange(f'A fuzz campaign needs at least one trial, got {trials}.')
  if mode not in FUZZ_MODES:
    raise OutOfRange(f'Unknown fuzz mode "{mode}", expected one of {sorted(FUZZ_MODES)}.')

  tolerances = Tolerances() if tolerances is None else tolerances
  report = FuzzReport(trials, d, base_seed, mode)
  trial = functools.partial(run_trial, d=d, base_seed=base_seed, mode=mode, eps_eq=tolerances.eps_eq)

  logging.getLogger('HARNESS').info(f'Fuzzing {trials} trial(s) in R^{d} from seed {base_seed} ({mode}, {tolerances}).')
  if workers > 1:
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
      for outcome in pool.map(trial, range(trials)): report.absorb(outcome)
  else:
    for outcome in map(trial, range(trials)): report.absorb(outcome)

  report.finalize()
  for violation in report.violations:
    logging.getLogger('HARNESS').error(f'Seed {violation["seed"]} violates {violation["invariant"]}: {violation.get("margin")}')
  logging.getLogger('HARNESS').info(f'{report}.')
  return report

def run_trial(index: int, d: int, base_seed: int, mode: str, eps_eq: float) -> dict[str, list]:
  """One independent trial; its seed is base_seed + index so it replays alone."""
  seed = base_seed + index
  outcome = {'violations': list(), 'equality_hits': list(), 'gaps': list(), 'timing': dict()}
  violate = lambda invariant, margin, **extra: outcome['violations'].append({'seed': seed, 'invariant': invariant, 'margin': margin, **extra})

  try:
    started = time.perf_counter()
    rng = np.random.Generator(np.random.PCG64(seed))
    seed_A, seed_B = (int(draw) for draw in rng.integers(0, 2 ** 62, size=2))
    A = random_body(d, POINTS_PER_DIM * d, seed_A)
    B = random_body(d, POINTS_PER_DIM * d, seed_B)
    alpha = float(rng.uniform(0.1, 0.9))
    u = Direction(rng.standard_normal(d))
    outcome['timing']['bodies'] = time.perf_counter() - started

    started = time.perf_counter()
    for chain_mode in FUZZ_MODES[mode]:
      report = verify_chain(A, B, alpha, 1 - alpha, u, chain_mode, eps_eq)
      for link, gap in report.violations():
        violate(link, gap, mode=chain_mode.name.lower())
      if report.equality_bonnesen:
        outcome['equality_hits'].append({'seed': seed, 'mode': chain_mode.name.lower(), 'gap_bonnesen': report.gap_bonnesen})
      outcome['gaps'].append({'seed': seed, 'mode': chain_mode.name.lower(), 'lhs': report.lhs, 'gap_bonnesen': report.gap_bonnesen, 'gap_holder': report.gap_holder})
    outcome['timing']['chain'] = time.perf_counter() - started

    started = time.perf_counter()
    exact = volume(A)
    layered = layer_cake_volume(build_profile(A, u), LAYER_CAKE_LEVELS)
    if abs(layered - exact) > LAYER_CAKE_TOL * exact:
      violate('layer_cake', (layered - exact) / exact)
    outcome['timing']['layer_cake'] = time.perf_counter() - started

    if d == 3 and index % INCLUSION_EVERY == 0:
      started = time.perf_counter()
      holds, margin = check_steiner_inclusion(A, B, alpha, 1 - alpha, u, STEINER_GRID)
      if not holds: violate('steiner_inclusion', margin)
      holds, margin = check_schwarz_inclusion(A, B, alpha, 1 - alpha, u, SCHWARZ_SLICES)
      if not holds: violate('schwarz_inclusion', margin)
      outcome['timing']['inclusions'] = time.perf_counter() - started
  except Exception as error:
    logging.getLogger('HARNESS').error(f'Seed {seed} raised {type(error).__name__}: {error}')
    violate('exception', None, message=f'{type(error).__name__}: {error}')

  return outcome
