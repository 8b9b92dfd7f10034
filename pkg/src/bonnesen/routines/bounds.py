from geometry.units.ConvexBody import ConvexBody
from geometry.units.GeometryError import NonPositiveVolume, OutOfRange
from geometry.routines.kernel import dilate

def check_positive(**quantities: float) -> None:
  for name, value in quantities.items():
    if not value > 0:
      raise NonPositiveVolume(f'{name} must be positive, got {value}.')

def check_coefficients(alpha: float, beta: float, d: int) -> None:
  if not (alpha > 0 and beta > 0):
    raise OutOfRange(f'Coefficients must be positive, got alpha = {alpha}, beta = {beta}.')
  if d < 2:
    raise OutOfRange(f'Bounds need d >= 2, got {d}.')

def bm_bound(volA: float, volB: float, alpha: float, beta: float, d: int) -> float:
  check_positive(volA=volA, volB=volB)
  check_coefficients(alpha, beta, d)
  return (alpha * volA ** (1 / d) + beta * volB ** (1 / d)) ** d

def bonnesen_bound(volA: float, volB: float, M: float, N: float, alpha: float, beta: float, d: int) -> float:
  check_positive(volA=volA, volB=volB, M=M, N=N)
  check_coefficients(alpha, beta, d)
  return (alpha * M ** (1 / (d - 1)) + beta * N ** (1 / (d - 1))) ** (d - 1) * (alpha * volA / M + beta * volB / N)

def holder_ratios(volA: float, volB: float, M: float, N: float, d: int) -> tuple[float, float]:
  check_positive(volA=volA, volB=volB, M=M, N=N)
  return volA ** (1 / d) / M ** (1 / (d - 1)), volB ** (1 / d) / N ** (1 / (d - 1))

def normalize_pair(A: ConvexBody, B: ConvexBody, M: float, N: float) -> tuple[ConvexBody, ConvexBody]:
  """Rescale so that both reference (d-1)-volumes become 1."""
  check_positive(M=M, N=N)
  return dilate(A, M ** (-1 / (A.dim - 1))), dilate(B, N ** (-1 / (B.dim - 1)))
