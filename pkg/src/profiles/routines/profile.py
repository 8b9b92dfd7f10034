import logging

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from geometry.units.ConvexBody import ConvexBody
from geometry.units.Direction import Direction
from geometry.units.GeometryError import DegenerateBody, DimensionMismatch, OutOfRange
from geometry.constants.tolerances import EPS_OFF, EPS_VOL, PLATEAU_LEVEL
from profiles.units.SectionProfile import SectionProfile

# Relative bracket width above which collapsing a near-flat maximum to one offset is reported.
COLLAPSE_WIDTH = 1e-3

def build_profile(K: ConvexBody, u) -> SectionProfile:
  u = Direction.coerce(u)
  if u.dim != K.dim:
    raise DimensionMismatch(f'Direction in R^{u.dim} cannot profile a body in R^{K.dim}.')
  if not K.full_dimensional:
    raise DegenerateBody(f'Cannot profile {K}: sections of a flat body have no (d-1)-volume.')

  prof = SectionProfile(K, u)
  prof.Q, prof.peak = scan_maximum(prof)
  prof.q_lo, prof.q_hi = locate_plateau(prof)

  logging.getLogger('PROFILES').debug(f'Built {prof}.')
  return prof

def scan_maximum(prof: SectionProfile) -> tuple[float, float]:
  """Scan every breakpoint interval and refine inside it with a bounded golden/parabolic search."""
  best_area, best_offset = -1.0, prof.p_min
  for p in prof.breakpoints:
    if prof.area(p) > best_area: best_area, best_offset = prof.area(p), float(p)

  for lo, hi in zip(prof.breakpoints[:-1], prof.breakpoints[1:]):
    found = minimize_scalar(lambda p: -prof.area(p), bounds=(lo, hi), method='bounded', options={'xatol': 1e-2 * EPS_OFF * max(1.0, hi - lo)})
    if -found.fun > best_area: best_area, best_offset = -float(found.fun), float(found.x)

  return best_area, best_offset

def locate_plateau(prof: SectionProfile) -> tuple[float, float]:
  level = prof.Q * (1 - PLATEAU_LEVEL)
  raw_lo = lower_crossing(prof, level, prof.peak)
  raw_hi = upper_crossing(prof, level, prof.peak)

  snap = EPS_OFF * max(1.0, prof.width)
  inside = [float(p) for p in prof.breakpoints if raw_lo - snap <= p <= raw_hi + snap]
  logging.getLogger('PROFILES').debug(f'Plateau bracket [{raw_lo:.12g}, {raw_hi:.12g}] holds {len(inside)} breakpoint(s).')

  if len(inside) >= 2: return inside[0], inside[-1]
  if raw_hi - raw_lo > COLLAPSE_WIDTH * max(1.0, prof.width):
    logging.getLogger('PROFILES').warning(f'Near-flat maximum along {prof.u}: bracket [{raw_lo:.9g}, {raw_hi:.9g}] has no plateau between breakpoints; snapped to a single maximal section.')
  if len(inside) == 1: return inside[0], inside[0]
  return prof.peak, prof.peak



def lower_crossing(prof: SectionProfile, s: float, peak: float) -> float:
  if prof.area(prof.p_min) >= s: return prof.p_min
  if prof.area(peak) < s: return peak

  previous = prof.p_min
  nodes = [float(p) for p in prof.breakpoints if prof.p_min < p < peak] + [peak]
  for node in nodes:
    if prof.area(node) >= s:
      return brentq(lambda p: prof.area(p) - s, previous, node, xtol=EPS_OFF * 1e-2 * max(1.0, node - previous))
    previous = node

  return peak

def upper_crossing(prof: SectionProfile, s: float, peak: float) -> float:
  if prof.area(prof.p_max) >= s: return prof.p_max
  if prof.area(peak) < s: return peak

  previous = peak
  nodes = [float(p) for p in prof.breakpoints if peak < p < prof.p_max] + [prof.p_max]
  for node in nodes:
    if prof.area(node) < s:
      return brentq(lambda p: prof.area(p) - s, previous, node, xtol=EPS_OFF * 1e-2 * max(1.0, node - previous))
    previous = node

  return prof.p_max

def level_bounds(prof: SectionProfile, s: float) -> tuple[float, float]:
  if s <= 0 or s > prof.Q * (1 + EPS_VOL):
    raise OutOfRange(f'Level {s} lies outside (0, Q] for Q = {prof.Q}.')
  if s >= prof.Q * (1 - PLATEAU_LEVEL): return prof.q_lo, prof.q_hi

  return lower_crossing(prof, s, prof.q_lo), upper_crossing(prof, s, prof.q_hi)

def layer_cake_volume(prof: SectionProfile, n_levels: int) -> float:
  if n_levels < 16:
    raise OutOfRange(f'Layer-cake integration needs at least 16 levels, got {n_levels}.')

  levels = prof.Q * (np.arange(n_levels) + 0.5) / n_levels
  chords = [k_plus - k_minus for k_minus, k_plus in (level_bounds(prof, s) for s in levels)]
  return float(np.sum(chords) * prof.Q / n_levels)

def max_sections(prof: SectionProfile) -> tuple[ConvexBody, ConvexBody]:
  return prof.section_at(prof.q_lo), prof.section_at(prof.q_hi)
