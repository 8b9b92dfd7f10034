import logging

import numpy as np

from geometry.units.ConvexBody import ConvexBody
from geometry.units.Direction import Direction
from geometry.units.GeometryError import DimensionMismatch, DegenerateBody, OutOfRange
from geometry.routines.kernel import minkowski_combination, volume, project, diameter
from geometry.constants.tolerances import EPS_EQ, EPS_INCL
from profiles.routines.profile import build_profile, level_bounds
from symmetrization.routines.symmetrals import steiner
from bonnesen.units.BonnesenReport import BonnesenReport
from bonnesen.routines.bounds import bm_bound, bonnesen_bound, holder_ratios, normalize_pair

def check_pair(A: ConvexBody, B: ConvexBody, alpha: float, beta: float) -> None:
  if A.dim != B.dim:
    raise DimensionMismatch(f'Cannot compare bodies of dimensions {A.dim} and {B.dim}.')
  if not (A.full_dimensional and B.full_dimensional):
    raise DegenerateBody(f'Both bodies must be full-dimensional, got {A} and {B}.')
  if not (alpha > 0 and beta > 0):
    raise OutOfRange(f'Coefficients must be positive, got alpha = {alpha}, beta = {beta}.')

def reference_volumes(A: ConvexBody, B: ConvexBody, u: Direction, mode: BonnesenReport.Mode) -> tuple[float, float]:
  match(mode):
    case BonnesenReport.Mode.SECTION:
      return build_profile(A, u).Q, build_profile(B, u).Q
    case BonnesenReport.Mode.PROJECTION:
      return volume(project(A, u)), volume(project(B, u))

def verify_chain(A: ConvexBody, B: ConvexBody, alpha: float, beta: float, u, mode: BonnesenReport.Mode, eps_eq: float = EPS_EQ) -> BonnesenReport:
  u = Direction.coerce(u)
  check_pair(A, B, alpha, beta)
  if u.dim != A.dim:
    raise DimensionMismatch(f'Direction in R^{u.dim} used with bodies in R^{A.dim}.')

  d = A.dim
  volA, volB = volume(A), volume(B)
  M, N = reference_volumes(A, B, u, mode)
  lhs = volume(minkowski_combination(A, B, alpha, beta))

  report = BonnesenReport(
    mode,
    lhs,
    M,
    N,
    bonnesen_bound(volA, volB, M, N, alpha, beta, d),
    bm_bound(volA, volB, alpha, beta, d),
    holder_ratios(volA, volB, M, N, d),
    eps_eq
  )

  logging.getLogger('BONNESEN').debug(f'{report}, gaps ({report.gap_bonnesen:.3e}, {report.gap_holder:.3e}).')
  for link, gap in report.violations():
    logging.getLogger('BONNESEN').error(f'{mode.name} chain broken at the {link} link: gap {gap:.6e} below -{eps_eq:g} * lhs.')
  return report

def verify_chain_via_steiner(A: ConvexBody, B: ConvexBody, alpha: float, beta: float, u, grid_n: int = 40, eps_eq: float = EPS_EQ) -> BonnesenReport:
  """Section-mode chain on the Steiner symmetrals, whose central sections are the projections."""
  u = Direction.coerce(u)
  check_pair(A, B, alpha, beta)
  return verify_chain(steiner(A, u, grid_n), steiner(B, u, grid_n), alpha, beta, u, BonnesenReport.Mode.SECTION, eps_eq)

def check_level_chain(A: ConvexBody, B: ConvexBody, alpha: float, beta: float, u, n_levels: int = 64) -> tuple[bool, float]:
  """
  After rescaling both maximal sections to 1, every level t in (0, 1] satisfies
  c+((alpha+beta)^(d-1) t) >= alpha a+(t) + beta b+(t) and the mirrored bound for c-.
  Returns whether both hold and the smallest margin found.
  """
  u = Direction.coerce(u)
  check_pair(A, B, alpha, beta)

  A, B = normalize_pair(A, B, build_profile(A, u).Q, build_profile(B, u).Q)
  C = minkowski_combination(A, B, alpha, beta)
  profile_A, profile_B, profile_C = build_profile(A, u), build_profile(B, u), build_profile(C, u)

  scale = (alpha + beta) ** (A.dim - 1)
  margins = list()
  for t in np.arange(1, n_levels + 1) / n_levels:
    a_minus, a_plus = level_bounds(profile_A, min(t, profile_A.Q))
    b_minus, b_plus = level_bounds(profile_B, min(t, profile_B.Q))
    c_minus, c_plus = level_bounds(profile_C, min(scale * t, profile_C.Q))
    margins.append(c_plus - (alpha * a_plus + beta * b_plus))
    margins.append((alpha * a_minus + beta * b_minus) - c_minus)

  min_margin = float(min(margins))
  holds = min_margin >= -EPS_INCL * diameter(C)
  if not holds:
    logging.getLogger('BONNESEN').error(f'Level-bound chain fails along {u}: margin {min_margin:.3e}.')
  return holds, min_margin
