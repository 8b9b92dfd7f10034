import bisect

import numpy as np

from geometry.units.ConvexBody import ConvexBody
from geometry.units.Direction import Direction
from geometry.routines.kernel import section, volume
from geometry.constants.tolerances import EPS_GEOM
from profiles.units.SliceTemplate import SliceTemplate

class SectionProfile:
  body: ConvexBody
  u: Direction
  p_min: float
  p_max: float
  Q: float
  q_lo: float
  q_hi: float
  peak: float
  breakpoints: np.ndarray
  templates: dict[int, SliceTemplate]
  exact: dict[float, float]

  def __init__(self, body: ConvexBody, u: Direction):
    self.body = body
    self.u = u
    offsets = np.unique(body.vertices @ u.u)
    # Offsets closer than the predicate tolerance are one breakpoint.
    keep = np.concatenate([[True], np.diff(offsets) > EPS_GEOM * body.scale])
    self.breakpoints = offsets[keep]
    self.breakpoints.flags.writeable = False
    self.p_min = float(self.breakpoints[0])
    self.p_max = float(self.breakpoints[-1])
    self.Q = None
    self.q_lo = None
    self.q_hi = None
    self.peak = None
    self.templates = dict()
    self.exact = dict()

  def __repr__(self):
    return f'SectionProfile(u={self.u}, support=[{self.p_min:.6g}, {self.p_max:.6g}], Q={self.Q}, plateau=[{self.q_lo}, {self.q_hi}])'

  @property
  def width(self) -> float:
    return self.p_max - self.p_min

  def area(self, p: float) -> float:
    p = float(p)
    if p < self.p_min or p > self.p_max: return 0.0

    index = bisect.bisect_left(self.breakpoints, p)
    if index < len(self.breakpoints) and self.breakpoints[index] == p:
      return self.exact_area(p)

    template = self.template(index - 1)
    if not template.valid: return self.exact_area(p)
    return template.area(p)

  def exact_area(self, p: float) -> float:
    if p not in self.exact:
      slab = section(self.body, self.u, p)
      self.exact[p] = 0.0 if slab is None or not slab.full_dimensional else volume(slab)
    return self.exact[p]

  def template(self, index: int) -> SliceTemplate:
    if index not in self.templates:
      self.templates[index] = SliceTemplate(self.body, self.u, float(self.breakpoints[index]), float(self.breakpoints[index + 1]))
    return self.templates[index]

  def section_at(self, p: float) -> ConvexBody | None:
    return section(self.body, self.u, p)

  def sample(self, n: int) -> tuple[np.ndarray, np.ndarray]:
    offsets = np.linspace(self.p_min, self.p_max, n)
    return offsets, np.array([self.area(p) for p in offsets])
