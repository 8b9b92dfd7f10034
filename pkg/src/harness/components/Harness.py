import errorhandler
import argparse
import logging
import json
import sys
import os

from geometry.units.ConvexBody import ConvexBody
from geometry.units.Direction import Direction
from geometry.units.GeometryError import GeometryError, PreconditionViolated
from geometry.routines.kernel import volume, minkowski_combination
from symmetrization.routines.symmetrals import steiner, schwarz
from bonnesen.units.BonnesenReport import BonnesenReport
from bonnesen.routines.chain import verify_chain
from equality.units.EqualityWitness import EqualityWitness
from equality.routines.classifiers import classify_section_equality, classify_projection_equality
from equality.routines.instances import build_equality_instance
from oracle.routines.grid import grid_volume
from harness.components.Tolerances import Tolerances
from harness.units.Scenario import Scenario
from harness.routines.fuzz import run_fuzz
from harness.routines.serializers import *

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NO_EQUALITY = 2
EXIT_PRECONDITION = 3

MODES = {'section': BonnesenReport.Mode.SECTION, 'projection': BonnesenReport.Mode.PROJECTION}
KINDS = {'homothety': Scenario.Kind.HOMOTHETY, 'section-stretch': Scenario.Kind.SECTION_STRETCH, 'projection-stretch': Scenario.Kind.PROJECTION_STRETCH}

class Harness():
  args: argparse.Namespace
  tolerances: Tolerances
  bodies: dict[str, ConvexBody]

  def __init__(self, args: argparse.Namespace):
    for path in (getattr(args, key, None) for key in ('body', 'A', 'B')):
      if path is not None and not os.path.isfile(path):
        logging.getLogger('HARNESS').critical(f'The path "{path}" does not point to an existing file.')
        sys.exit(EXIT_ERROR)

    self.args = args
    self.tolerances = Tolerances.from_args(args)
    self.bodies = dict()

  def __enter__(self):
    return self

  def __exit__(self, exc_type, exc_value, traceback):
    pass



  def run(self, error_handler: errorhandler.ErrorHandler) -> int:
    logging.getLogger('HARNESS').debug(f'Running "{self.args.command}" with {self.tolerances}.')
    try:
      match(self.args.command):
        case 'vol': code = self.vol()
        case 'sum': code = self.sum()
        case 'bound': code = self.bound()
        case 'symmetrize': code = self.symmetrize()
        case 'classify': code = self.classify()
        case 'gen-equality': code = self.gen_equality()
        case 'fuzz': code = self.fuzz()
    except GeometryError as error:
      logging.getLogger('HARNESS').error(f'{type(error).__name__}: {error}')
      return EXIT_ERROR

    if self.args.command == 'classify': return code
    return EXIT_ERROR if error_handler.fired else code

  def body(self, path: str) -> ConvexBody:
    if path not in self.bodies:
      try:
        self.bodies[path] = load_body(path)
      except (json.JSONDecodeError, UnicodeDecodeError, TypeError, ValueError) as error:
        logging.getLogger('HARNESS').critical(f'"{path}" is not a body file: {error}')
        sys.exit(EXIT_ERROR)
      logging.getLogger('HARNESS').debug(f'Loaded {self.bodies[path]} from "{path}".')
    return self.bodies[path]

  def direction(self) -> Direction:
    try:
      return Direction([float(component) for component in self.args.u.split(',')])
    except ValueError:
      logging.getLogger('HARNESS').critical(f'Direction "{self.args.u}" is not a comma-separated list of numbers.')
      sys.exit(EXIT_ERROR)

  def emit(self, data: dict, output: str = None) -> None:
    if output is None:
      print(json.dumps(data, indent=2))
    else:
      save_json(data, output)
      logging.getLogger('HARNESS').info(f'Wrote "{output}".')



  def vol(self) -> int:
    K = self.body(self.args.body)
    exact = volume(K)
    print(f'{exact:.15g}')

    if getattr(self.args, 'oracle', None) is not None:
      counted = grid_volume(K, self.args.oracle)
      logging.getLogger('ORACLE').info(f'Grid volume at n={self.args.oracle} is {counted:.15g} ({(counted - exact) / exact:+.3%} relative).')
    return EXIT_OK

  def sum(self) -> int:
    combined = minkowski_combination(self.body(self.args.A), self.body(self.args.B), self.args.alpha, self.args.beta)
    logging.getLogger('HARNESS').info(f'Combined body {combined} has volume {volume(combined):.15g}.')
    self.emit(body_to_json(combined), self.args.output)
    return EXIT_OK

  def bound(self) -> int:
    report = verify_chain(self.body(self.args.A), self.body(self.args.B), self.args.alpha, self.args.beta, self.direction(), MODES[self.args.mode], self.tolerances.eps_eq)
    self.emit(report_to_json(report))
    return EXIT_OK

  def symmetrize(self) -> int:
    K, u = self.body(self.args.body), self.direction()
    match(self.args.method):
      case 'steiner': result = steiner(K, u, self.args.grid)
      case 'schwarz': result = schwarz(K, u, self.args.slices, self.args.ring)

    logging.getLogger('HARNESS').info(f'{self.args.method.capitalize()} symmetral has volume {volume(result):.15g} against {volume(K):.15g}.')
    self.emit(body_to_json(result), self.args.output)
    return EXIT_OK

  def classify(self) -> int:
    A, B, u = self.body(self.args.A), self.body(self.args.B), self.direction()
    classifier = classify_section_equality if MODES[self.args.mode] == BonnesenReport.Mode.SECTION else classify_projection_equality

    try:
      witness = classifier(A, B, self.args.alpha, self.args.beta, u, self.tolerances.eps_eq, self.tolerances.eps_wit)
    except PreconditionViolated as error:
      logging.getLogger('HARNESS').info(f'Precondition violated: {error}')
      self.emit({'kind': 'precondition_violated', 'diagnostic': str(error)})
      return EXIT_PRECONDITION

    self.emit(witness_to_json(witness))
    return EXIT_NO_EQUALITY if witness.kind == EqualityWitness.Kind.NO_EQUALITY else EXIT_OK

  def gen_equality(self) -> int:
    scenario = build_equality_instance(KINDS[self.args.kind], self.args.seed, self.args.dim)
    if self.args.output is None:
      self.emit({'scenario': scenario_to_json(scenario), 'A': body_to_json(scenario.A), 'B': body_to_json(scenario.B)})
      return EXIT_OK

    save_json(body_to_json(scenario.A), f'{self.args.output}.A.json')
    save_json(body_to_json(scenario.B), f'{self.args.output}.B.json')
    save_json(scenario_to_json(scenario), f'{self.args.output}.scenario.json')
    logging.getLogger('HARNESS').info(f'Wrote {scenario} to "{self.args.output}.*.json".')
    return EXIT_OK

  def fuzz(self) -> int:
    report = run_fuzz(self.args.trials, self.args.dim, self.args.seed, self.args.mode, self.tolerances, self.args.workers)
    if self.args.csv is not None: save_gaps_csv(report, self.args.csv)
    self.emit(fuzz_report_to_json(report), self.args.report)
    return EXIT_OK if report.passed else EXIT_ERROR
