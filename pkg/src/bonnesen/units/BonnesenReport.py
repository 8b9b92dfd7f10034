import enum

class BonnesenReport:
  class Mode(enum.Enum):
    SECTION = 0
    PROJECTION = 1

  mode: Mode
  lhs: float
  M: float
  N: float
  bonnesen_rhs: float
  bm_rhs: float
  gap_bonnesen: float
  gap_holder: float
  equality_bonnesen: bool
  equality_holder: bool
  holder_ratio_lhs: float
  holder_ratio_rhs: float
  eps_eq: float

  def __init__(self, mode: Mode, lhs: float, M: float, N: float, bonnesen_rhs: float, bm_rhs: float, holder_ratios: tuple[float, float], eps_eq: float):
    self.mode = mode
    self.lhs = lhs
    self.M = M
    self.N = N
    self.bonnesen_rhs = bonnesen_rhs
    self.bm_rhs = bm_rhs
    self.gap_bonnesen = lhs - bonnesen_rhs
    self.gap_holder = bonnesen_rhs - bm_rhs
    self.holder_ratio_lhs, self.holder_ratio_rhs = holder_ratios
    self.eps_eq = eps_eq
    self.equality_bonnesen = abs(self.gap_bonnesen) <= eps_eq * lhs
    self.equality_holder = abs(self.holder_ratio_lhs - self.holder_ratio_rhs) <= eps_eq * max(holder_ratios)

  def __repr__(self):
    return f'BonnesenReport({self.mode.name}: lhs={self.lhs:.9g} >= bonnesen={self.bonnesen_rhs:.9g} >= bm={self.bm_rhs:.9g})'

  def violations(self) -> list[tuple[str, float]]:
    """Chain links that fail beyond eps_eq * lhs, with their gaps."""
    failed = list()
    if self.gap_bonnesen < -self.eps_eq * self.lhs: failed.append(('bonnesen', self.gap_bonnesen))
    if self.gap_holder < -self.eps_eq * self.lhs: failed.append(('holder', self.gap_holder))
    return failed
