import enum

import numpy as np

from geometry.units.ConvexBody import ConvexBody
from geometry.units.Direction import Direction
from geometry.units.Halfspace import Halfspace
from geometry.routines.kernel import dilate, stretch, diameter
from geometry.routines.distances import hausdorff
from geometry.constants.tolerances import EPS_WIT
from equality.routines.stretching import hyperplane_residual

class EqualityWitness:
  # STRETCHED_PAIR: A = A_prime + [0, lambda_A v], B = B_prime + [0, lambda_B v], B_prime = hom[0]*A_prime + hom[1].
  class Kind(enum.Enum):
    HOMOTHETIC = 0
    STRETCHED_PAIR = 1
    NO_EQUALITY = 2

  kind: Kind
  lam: float
  t: np.ndarray
  v: Direction
  lambda_A: float
  lambda_B: float
  A_prime: ConvexBody
  B_prime: ConvexBody
  H: Halfspace
  hom: tuple[float, np.ndarray]
  diagnostic: str
  residuals: dict[str, float]

  def __init__(self, kind: Kind):
    self.kind = kind
    self.lam = None
    self.t = None
    self.v = None
    self.lambda_A = None
    self.lambda_B = None
    self.A_prime = None
    self.B_prime = None
    self.H = None
    self.hom = None
    self.diagnostic = None
    self.residuals = dict()

  @classmethod
  def homothetic(cls, lam: float, t: np.ndarray) -> 'EqualityWitness':
    witness = cls(cls.Kind.HOMOTHETIC)
    witness.lam, witness.t = lam, np.asarray(t, dtype=float)
    return witness

  @classmethod
  def stretched(cls, v: Direction, lambda_A: float, lambda_B: float, A_prime: ConvexBody, B_prime: ConvexBody, hom: tuple[float, np.ndarray], H: Halfspace = None) -> 'EqualityWitness':
    witness = cls(cls.Kind.STRETCHED_PAIR)
    witness.v = v
    witness.lambda_A, witness.lambda_B = lambda_A, lambda_B
    witness.A_prime, witness.B_prime = A_prime, B_prime
    witness.hom = hom
    witness.H = H
    return witness

  @classmethod
  def none(cls, diagnostic: str) -> 'EqualityWitness':
    witness = cls(cls.Kind.NO_EQUALITY)
    witness.diagnostic = diagnostic
    return witness

  def __repr__(self):
    match(self.kind):
      case EqualityWitness.Kind.HOMOTHETIC:
        return f'Homothetic(lam={self.lam:.9g}, t={np.round(self.t, 9).tolist()})'
      case EqualityWitness.Kind.STRETCHED_PAIR:
        return f'StretchedPair(v={self.v}, lambda_A={self.lambda_A:.9g}, lambda_B={self.lambda_B:.9g}, rho={self.hom[0]:.9g})'
      case EqualityWitness.Kind.NO_EQUALITY:
        return f'NoEquality({self.diagnostic})'

  def verify(self, A: ConvexBody, B: ConvexBody) -> dict[str, float]:
    residuals = dict()
    match(self.kind):
      case EqualityWitness.Kind.HOMOTHETIC:
        residuals['homothety'] = hausdorff(B, dilate(A, self.lam, self.t))
      case EqualityWitness.Kind.STRETCHED_PAIR:
        residuals['stretch_A'] = hausdorff(A, stretch(self.A_prime, self.v, self.lambda_A))
        residuals['stretch_B'] = hausdorff(B, stretch(self.B_prime, self.v, self.lambda_B))
        residuals['homothety'] = hausdorff(self.B_prime, dilate(self.A_prime, *self.hom))
        if self.H is not None:
          residuals['hyperplane'] = hyperplane_residual(self.A_prime, self.v, self.H)

    self.residuals = residuals
    return residuals

  def holds(self, A: ConvexBody, B: ConvexBody, tol: float = EPS_WIT) -> bool:
    if self.kind == EqualityWitness.Kind.NO_EQUALITY: return False
    if self.kind == EqualityWitness.Kind.STRETCHED_PAIR and not max(self.lambda_A, self.lambda_B) > 0: return False

    limit = tol * max(diameter(A), diameter(B))
    return all(residual <= limit for residual in self.verify(A, B).values())
