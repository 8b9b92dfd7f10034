from geometry.units.ConvexBody import ConvexBody
from geometry.units.Halfspace import Halfspace
from geometry.units.GeometryError import NotATranslate
from geometry.routines.kernel import stretch, diameter
from geometry.constants.tolerances import EPS_EQ, EPS_WIT
from profiles.routines.profile import build_profile
from bonnesen.units.BonnesenReport import BonnesenReport
from equality.units.EqualityWitness import EqualityWitness
from equality.components.ClassifierContext import ClassifierContext
from equality.routines.homothety import detect_homothety
from equality.routines.stretching import max_slab_stretch, destretch, max_destretch, hyperplane_residual

STRETCH_ANGLE_TOL = 1e-6

def classify_section_equality(A: ConvexBody, B: ConvexBody, alpha: float, beta: float, u, eps_eq: float = EPS_EQ, eps_wit: float = EPS_WIT) -> EqualityWitness:
  classifier_ctx = ClassifierContext(A, B, alpha, beta, u, BonnesenReport.Mode.SECTION, eps_eq, eps_wit)
  classifier_ctx.require_equality()

  witness = homothetic_witness(classifier_ctx)
  if witness is not None: return witness

  try:
    stretch_A, stretch_B = max_slab_stretch(A, classifier_ctx.u, eps_wit), max_slab_stretch(B, classifier_ctx.u, eps_wit)
  except NotATranslate as error:
    return fail(classifier_ctx, str(error))

  if stretch_A is None and stretch_B is None:
    return fail(classifier_ctx, 'neither body has a slab of maximal sections, yet they are not homothetic')
  if stretch_A is not None and stretch_B is not None and stretch_A[0].angle(stretch_B[0]) > STRETCH_ANGLE_TOL:
    return fail(classifier_ctx, f'maximal slabs stretch along different directions {stretch_A[0]} and {stretch_B[0]}')

  v = (stretch_A or stretch_B)[0]
  lambda_A = stretch_A[1] if stretch_A is not None else 0.0
  lambda_B = stretch_B[1] if stretch_B is not None else 0.0
  classifier_ctx.step(f'Section classifier: stretch along {v} with lengths {lambda_A:.9g}, {lambda_B:.9g}.')

  A_prime, B_prime = destretch(A, v, lambda_A, eps_wit), destretch(B, v, lambda_B, eps_wit)
  if A_prime is None or B_prime is None:
    return fail(classifier_ctx, f'de-stretching along {v} does not reproduce {"A" if A_prime is None else "B"}')

  hom = detect_homothety(A_prime, B_prime, eps_wit, allow_flat=True)
  if hom is None:
    return fail(classifier_ctx, 'de-stretched bodies are not homothetic')

  H = Halfspace(classifier_ctx.u.u, build_profile(A, classifier_ctx.u).q_lo)
  if hyperplane_residual(A_prime, v, H) > eps_wit * max_diameter(A, B):
    return fail(classifier_ctx, f'the shadow of A\' along {v} is not the shadow of its maximal section')

  witness = canonicalize(EqualityWitness.stretched(v, lambda_A, lambda_B, A_prime, B_prime, hom, H))
  return checked(classifier_ctx, witness)

def classify_projection_equality(A: ConvexBody, B: ConvexBody, alpha: float, beta: float, u, eps_eq: float = EPS_EQ, eps_wit: float = EPS_WIT) -> EqualityWitness:
  classifier_ctx = ClassifierContext(A, B, alpha, beta, u, BonnesenReport.Mode.PROJECTION, eps_eq, eps_wit)
  classifier_ctx.require_equality()

  witness = homothetic_witness(classifier_ctx)
  if witness is not None: return witness

  v = classifier_ctx.u
  lambda_A, lambda_B = max_destretch(A, v), max_destretch(B, v)
  classifier_ctx.step(f'Projection classifier: maximal de-stretch lengths {lambda_A:.9g}, {lambda_B:.9g} along {v}.')
  if lambda_A == 0 and lambda_B == 0:
    return fail(classifier_ctx, f'neither body is a stretch along {v}, yet they are not homothetic')

  A_prime, B_prime = destretch(A, v, lambda_A, eps_wit), destretch(B, v, lambda_B, eps_wit)
  if A_prime is None or B_prime is None:
    return fail(classifier_ctx, f'de-stretching along {v} does not reproduce {"A" if A_prime is None else "B"}')

  hom = detect_homothety(A_prime, B_prime, eps_wit, allow_flat=True)
  if hom is None:
    return fail(classifier_ctx, 'de-stretched bodies are not homothetic')

  return checked(classifier_ctx, EqualityWitness.stretched(v, lambda_A, lambda_B, A_prime, B_prime, hom))



def canonicalize(witness: EqualityWitness) -> EqualityWitness:
  """
  Move the largest common stretch into the bases: with B' = rho*A' + t, take
  s = min(lambda_A, lambda_B / rho), so one length becomes 0 and lambda_B - rho*lambda_A is unchanged.
  """
  if witness.kind != EqualityWitness.Kind.STRETCHED_PAIR: return witness

  rho = witness.hom[0]
  common = min(witness.lambda_A, witness.lambda_B / rho)
  if common <= 0: return witness

  return EqualityWitness.stretched(
    witness.v,
    max(witness.lambda_A - common, 0.0),
    max(witness.lambda_B - rho * common, 0.0),
    stretch(witness.A_prime, witness.v, common),
    stretch(witness.B_prime, witness.v, rho * common),
    witness.hom,
    witness.H
  )

def homothetic_witness(classifier_ctx: ClassifierContext) -> EqualityWitness | None:
  hom = detect_homothety(classifier_ctx.A, classifier_ctx.B, classifier_ctx.eps_wit)
  if hom is None: return None

  classifier_ctx.step(f'Bodies are homothetic with ratio {hom[0]:.9g}.')
  return checked(classifier_ctx, EqualityWitness.homothetic(*hom))

def checked(classifier_ctx: ClassifierContext, witness: EqualityWitness) -> EqualityWitness:
  if witness.holds(classifier_ctx.A, classifier_ctx.B, classifier_ctx.eps_wit): return witness
  return fail(classifier_ctx, f'{witness} fails its own reconstruction, residuals {witness.residuals}')

def fail(classifier_ctx: ClassifierContext, message: str) -> EqualityWitness:
  classifier_ctx.reject(message)
  return EqualityWitness.none(message)

def max_diameter(A: ConvexBody, B: ConvexBody) -> float:
  return max(diameter(A), diameter(B))
