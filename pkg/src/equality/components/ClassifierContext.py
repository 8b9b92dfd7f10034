import logging

from geometry.units.ConvexBody import ConvexBody
from geometry.units.Direction import Direction
from geometry.units.GeometryError import PreconditionViolated, DimensionMismatch
from bonnesen.units.BonnesenReport import BonnesenReport
from bonnesen.routines.chain import verify_chain

class ClassifierContext:
  A: ConvexBody
  B: ConvexBody
  alpha: float
  beta: float
  u: Direction
  mode: BonnesenReport.Mode
  eps_eq: float
  eps_wit: float
  report: BonnesenReport
  diagnostics: list[str]

  def __init__(self, A: ConvexBody, B: ConvexBody, alpha: float, beta: float, u, mode: BonnesenReport.Mode, eps_eq: float, eps_wit: float):
    if A.dim != B.dim:
      raise DimensionMismatch(f'Cannot classify bodies of dimensions {A.dim} and {B.dim}.')

    self.A = A
    self.B = B
    # Equality is invariant under rescaling (alpha, beta); work with alpha + beta = 1.
    self.alpha = alpha / (alpha + beta)
    self.beta = beta / (alpha + beta)
    self.u = Direction.coerce(u)
    self.mode = mode
    self.eps_eq = eps_eq
    self.eps_wit = eps_wit
    self.report = None
    self.diagnostics = list()



  def require_equality(self) -> None:
    self.report = verify_chain(self.A, self.B, self.alpha, self.beta, self.u, self.mode, self.eps_eq)
    if not self.report.equality_bonnesen:
      raise PreconditionViolated(f'{self.mode.name} Bonnesen inequality is strict: gap {self.report.gap_bonnesen:.6e} exceeds {self.eps_eq:g} * lhs.')

  def reject(self, message: str) -> None:
    logging.getLogger('EQUALITY').info(f'No equality witness: {message}')
    self.diagnostics.append(message)

  def step(self, message: str) -> None:
    logging.getLogger('EQUALITY').debug(message)

