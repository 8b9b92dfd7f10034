import logging

import numpy as np

from geometry.units.ConvexBody import ConvexBody
from geometry.units.Direction import Direction
from geometry.units.GeometryError import DimensionMismatch, Unsupported
from geometry.routines.kernel import minkowski_combination, diameter
from geometry.constants.tolerances import EPS_INCL
from profiles.units.SectionProfile import SectionProfile
from symmetrization.units.ChordFunction import ChordFunction
from symmetrization.routines.symmetrals import steiner, base_samples, rounding_radius

def check_steiner_inclusion(A: ConvexBody, B: ConvexBody, alpha: float, beta: float, u, grid_n: int = 40) -> tuple[bool, float]:
  """
  Compare half-chords of alpha*S(A) + beta*S(B) against those of S(alpha*A + beta*B).

  Both sides are symmetric through u-perp, so the inclusion holds iff the
  right side's half-chord dominates on the shadow of the left side.
  """
  u = Direction.coerce(u)
  if A.dim != B.dim:
    raise DimensionMismatch(f'Cannot compare symmetrals of bodies of dimensions {A.dim} and {B.dim}.')

  combined = minkowski_combination(A, B, alpha, beta)
  left = minkowski_combination(steiner(A, u, grid_n), steiner(B, u, grid_n), alpha, beta)

  right_chords = ChordFunction(combined, u)
  left_chords = ChordFunction(left, u)
  # In the plane the left side is exact and its chords are linear between projected vertices.
  samples = base_samples(left_chords.base, grid_n) if A.dim > 2 else np.unique(left.vertices @ u.basis.T, axis=0)

  margins = 0.5 * right_chords.length(samples) - 0.5 * left_chords.length(samples)
  min_margin = float(margins.min())
  holds = min_margin >= -EPS_INCL * diameter(combined)

  if not holds:
    logging.getLogger('SYMMETRIZATION').error(f'Steiner inclusion fails along {u}: half-chord deficit {-min_margin:.3e}.')
  return holds, min_margin

def check_schwarz_inclusion(A: ConvexBody, B: ConvexBody, alpha: float, beta: float, u, n_slices: int = 64) -> tuple[bool, float]:
  u = Direction.coerce(u)
  if A.dim != 3 or B.dim != 3:
    raise Unsupported(f'Schwarz inclusion is implemented for d = 3 only, got {A.dim} and {B.dim}.')

  combined = minkowski_combination(A, B, alpha, beta)
  profile_A, profile_B, profile_C = SectionProfile(A, u), SectionProfile(B, u), SectionProfile(combined, u)

  margins = list()
  for tau in np.linspace(0.0, 1.0, n_slices):
    p_A = profile_A.p_min + tau * profile_A.width
    p_B = profile_B.p_min + tau * profile_B.width
    p_C = min(max(alpha * p_A + beta * p_B, profile_C.p_min), profile_C.p_max)

    radius_C = rounding_radius(profile_C.area(p_C))
    margins.append(radius_C - alpha * rounding_radius(profile_A.area(p_A)) - beta * rounding_radius(profile_B.area(p_B)))

  min_margin = float(min(margins))
  holds = min_margin >= -EPS_INCL * diameter(combined)

  if not holds:
    logging.getLogger('SYMMETRIZATION').error(f'Schwarz inclusion fails along {u}: radius deficit {-min_margin:.3e}.')
  return holds, min_margin
