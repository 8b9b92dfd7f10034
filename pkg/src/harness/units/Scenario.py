import enum

from geometry.units.ConvexBody import ConvexBody
from geometry.units.Direction import Direction
from geometry.units.GeometryError import DimensionMismatch, OutOfRange
from bonnesen.units.BonnesenReport import BonnesenReport
from harness.components.Tolerances import Tolerances

class Scenario:
  class Kind(enum.Enum):
    HOMOTHETY = 0
    SECTION_STRETCH = 1
    PROJECTION_STRETCH = 2

  A: ConvexBody
  B: ConvexBody
  alpha: float
  beta: float
  u: Direction
  mode: BonnesenReport.Mode
  tolerances: Tolerances
  seed: int
  kind: Kind
  truth: dict[str, object]

  def __init__(self, A: ConvexBody, B: ConvexBody, alpha: float, beta: float, u: Direction, mode: BonnesenReport.Mode, tolerances: Tolerances = None, seed: int = None):
    if A.dim != B.dim:
      raise DimensionMismatch(f'Scenario bodies have dimensions {A.dim} and {B.dim}.')
    if not (alpha > 0 and beta > 0):
      raise OutOfRange(f'Scenario coefficients must be positive, got {alpha} and {beta}.')

    self.A = A
    self.B = B
    self.alpha = alpha
    self.beta = beta
    self.u = u
    self.mode = mode
    self.tolerances = Tolerances() if tolerances is None else tolerances
    self.seed = seed
    self.kind = None
    self.truth = dict()

  def __repr__(self):
    return ''.join([
      f'{self.kind.name} ' if self.kind is not None else '',
      f'scenario in R^{self.A.dim} ({self.mode.name}, alpha={self.alpha:.6g}, beta={self.beta:.6g}, u={self.u})',
      f' from seed {self.seed}' if self.seed is not None else ''
    ])
