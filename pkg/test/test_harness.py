import contextlib
import errorhandler
import argparse
import unittest
import tempfile
import json
import csv
import io
import sys
import os
from unittest import mock

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.realpath(__file__))), 'src'))

from geometry.units.Direction import Direction
from geometry.units.GeometryError import DegenerateSample, DimensionMismatch, OutOfRange, Unsupported
from geometry.routines.kernel import volume
from bonnesen.units.BonnesenReport import BonnesenReport
from bonnesen.routines.chain import verify_chain
from equality.units.EqualityWitness import EqualityWitness
from equality.routines.classifiers import classify_section_equality
from equality.routines.instances import build_equality_instance
from harness.components.Tolerances import Tolerances
from harness.components.Harness import Harness, EXIT_OK, EXIT_ERROR, EXIT_NO_EQUALITY, EXIT_PRECONDITION
from harness.units.Scenario import Scenario
from harness.units.FuzzReport import FuzzReport
from harness.routines.bodies import cube, box, cone, cross_polytope, random_body
from harness.routines.fuzz import run_fuzz, run_trial
from harness.routines.serializers import *

BODIES_DIR = os.path.join(os.path.dirname(os.path.realpath(__file__)), 'bodies')

def body_path(name: str) -> str:
  return os.path.join(BODIES_DIR, f'{name}.json')

def namespace(command: str, **kwargs) -> argparse.Namespace:
  return argparse.Namespace(command=command, eps_eq=None, eps_wit=None, debug=False, **kwargs)

def run_harness(args: argparse.Namespace) -> tuple[int, str]:
  output = io.StringIO()
  with contextlib.redirect_stdout(output):
    with Harness(args) as harness:
      code = harness.run(errorhandler.ErrorHandler())
  return code, output.getvalue()



class BodiesTest(unittest.TestCase):
  def test_named_bodies(self):
    self.assertAlmostEqual(volume(box([2, 3, 1])), 6.0, places=12)
    self.assertAlmostEqual(volume(cone(3)), 1 / 3, places=12)
    self.assertEqual(len(cross_polytope(4).vertices), 8)

  def test_random_bodies_are_deterministic(self):
    first, second = random_body(3, 20, 42), random_body(3, 20, 42)
    np.testing.assert_array_equal(first.vertices, second.vertices)
    self.assertTrue(first.full_dimensional)
    self.assertTrue(np.all(np.linalg.norm(first.vertices, axis=1) <= 1.0))

  def test_smallest_random_body(self):
    self.assertEqual(len(random_body(2, 3, 1).vertices), 3)

  def test_errors(self):
    with self.assertRaises(Unsupported): random_body(5, 20, 1)
    with self.assertRaises(OutOfRange): random_body(3, 3, 1)

  def test_degenerate_draws_give_up(self):
    flat = box([1, 1, 0])
    with mock.patch('harness.routines.bodies.hull', lambda points, d: flat):
      with self.assertRaises(DegenerateSample): random_body(3, 10, 1)



class TolerancesTest(unittest.TestCase):
  def test_defaults(self):
    with mock.patch.dict(os.environ, {}, clear=True):
      tolerances = Tolerances()
    self.assertEqual(tolerances.profile, Tolerances.Profile.DEFAULT)
    self.assertEqual(tolerances.as_tuple(), (1e-9, 1e-6, 1e-6, 1e-6))

  def test_strict_profile_from_the_environment(self):
    with mock.patch.dict(os.environ, {'BONNESEN_TOLERANCE_PROFILE': 'strict'}):
      tolerances = Tolerances(eps_eq=1e-4)
    self.assertEqual(tolerances.profile, Tolerances.Profile.STRICT)
    self.assertAlmostEqual(tolerances.eps_eq, 1e-5, delta=1e-20)
    self.assertAlmostEqual(tolerances.eps_wit, 1e-7, delta=1e-20)

  def test_unknown_profile_falls_back(self):
    with self.assertLogs('HARNESS', level='WARNING'):
      tolerances = Tolerances(profile='sloppy')
    self.assertEqual(tolerances.profile, Tolerances.Profile.DEFAULT)

  def test_from_args(self):
    tolerances = Tolerances.from_args(argparse.Namespace(eps_eq=1e-3, eps_wit=None))
    self.assertEqual(tolerances.eps_eq, 1e-3 * tolerances.profile.value)



class ScenarioTest(unittest.TestCase):
  def test_validation(self):
    u = Direction([0, 0, 1])
    with self.assertRaises(DimensionMismatch): Scenario(cube(2), cube(3), 0.5, 0.5, u, BonnesenReport.Mode.SECTION)
    with self.assertRaises(OutOfRange): Scenario(cube(3), cube(3), 0.0, 0.5, u, BonnesenReport.Mode.SECTION)

  def test_json(self):
    scenario = build_equality_instance(Scenario.Kind.HOMOTHETY, 7, 2)
    data = scenario_to_json(scenario)
    self.assertEqual(data['kind'], 'homothety')
    self.assertEqual(data['seed'], 7)
    self.assertEqual(data['mode'], 'section')
    self.assertEqual(set(data['truth']), {'rho', 'shifts', 'lengths', 'v'})
    json.dumps(data)



class SerializerTest(unittest.TestCase):
  def test_body_files(self):
    K = load_body(body_path('square_with_interior'))
    self.assertEqual(len(K.vertices), 4)
    self.assertAlmostEqual(volume(K), 1.0, places=12)

    with tempfile.TemporaryDirectory() as directory:
      path = os.path.join(directory, 'octahedron.json')
      save_json(body_to_json(cross_polytope(3)), path)
      self.assertAlmostEqual(volume(load_body(path)), 4 / 3, places=12)

  def test_missing_keys(self):
    with self.assertRaises(DimensionMismatch): body_from_json({'vertices': [[0, 0], [1, 0], [0, 1]]})
    with self.assertRaises(DimensionMismatch): body_from_json([[0, 0], [1, 0]])

  def test_report_fields(self):
    data = report_to_json(verify_chain(cube(2), box([1, 2]), 0.5, 0.5, [0, 1], BonnesenReport.Mode.SECTION))
    self.assertEqual(set(data), {'mode', 'lhs', 'M', 'N', 'bonnesen_rhs', 'bm_rhs', 'gap_bonnesen', 'gap_holder', 'equality_bonnesen', 'equality_holder', 'holder_ratio_lhs', 'holder_ratio_rhs'})
    self.assertEqual(data['mode'], 'section')
    self.assertIs(data['equality_bonnesen'], True)
    json.dumps(data)

  def test_witness_fields(self):
    data = witness_to_json(classify_section_equality(cube(2), box([1, 2]), 0.5, 0.5, [0, 1]))
    self.assertEqual(data['kind'], 'stretched_pair')
    self.assertEqual(data['A_prime']['dim'], 2)
    self.assertEqual(data['H']['normal'], [0.0, 1.0])
    self.assertTrue(all(value <= 1e-6 for value in data['residuals'].values()))
    json.dumps(data)



class FuzzTest(unittest.TestCase):
  def test_small_campaign(self):
    report = run_fuzz(3, 3, 1000, 'both')
    self.assertTrue(report.passed, report.violations)
    self.assertEqual(report.trials, 3)
    self.assertEqual(len(report.gaps), 6)
    self.assertEqual(sorted({entry['seed'] for entry in report.gaps}), [1000, 1001, 1002])
    self.assertIn('chain', report.timing)

  def test_trials_replay_alone(self):
    first = run_trial(4, 2, 50, 'section', 1e-6)
    second = run_trial(0, 2, 54, 'section', 1e-6)
    self.assertEqual(first['gaps'], second['gaps'])

  def test_loose_tolerance_counts_hits(self):
    report = run_fuzz(2, 2, 7, 'projection', Tolerances(eps_eq=10.0, profile='default'))
    self.assertEqual(len(report.equality_hits), 2)
    self.assertTrue(report.passed)

  def test_report_json_and_csv(self):
    report = run_fuzz(2, 2, 3, 'section')
    data = fuzz_report_to_json(report, timing=False)
    self.assertEqual(data, {'trials': 2, 'dim': 2, 'base_seed': 3, 'mode': 'section', 'violations': [], 'equality_hits': report.equality_hits})

    with tempfile.TemporaryDirectory() as directory:
      path = os.path.join(directory, 'gaps.csv')
      save_gaps_csv(report, path)
      with open(path, 'r', encoding='utf-8') as file:
        rows = list(csv.DictReader(file))
    self.assertEqual([int(row['seed']) for row in rows], [3, 4])

  def test_absorb_and_sort(self):
    report = FuzzReport(2, 3, 0, 'section')
    report.absorb({'violations': [{'seed': 1, 'invariant': 'bm'}], 'equality_hits': [], 'gaps': [], 'timing': {'chain': 1.0}})
    report.absorb({'violations': [{'seed': 0, 'invariant': 'bonnesen'}], 'equality_hits': [], 'gaps': [], 'timing': {'chain': 0.5}})
    report.finalize()
    self.assertEqual([violation['seed'] for violation in report.violations], [0, 1])
    self.assertEqual(report.timing['chain'], 1.5)
    self.assertFalse(report.passed)

  def test_worker_pool_matches_serial_run(self):
    serial = run_fuzz(4, 2, 300, 'both', workers=1)
    pooled = run_fuzz(4, 2, 300, 'both', workers=3)
    self.assertEqual(fuzz_report_to_json(pooled, timing=False), fuzz_report_to_json(serial, timing=False))
    self.assertEqual(pooled.gaps, serial.gaps)

  def test_errors(self):
    with self.assertRaises(OutOfRange): run_fuzz(0, 3, 0, 'section')
    with self.assertRaises(OutOfRange): run_fuzz(1, 3, 0, 'sideways')



class HarnessTest(unittest.TestCase):
  def test_vol(self):
    code, output = run_harness(namespace('vol', body=body_path('octahedron'), oracle=None))
    self.assertEqual(code, EXIT_OK)
    self.assertAlmostEqual(float(output), 4 / 3, places=12)

  def test_vol_with_oracle(self):
    with self.assertLogs('ORACLE', level='INFO') as logs:
      code, output = run_harness(namespace('vol', body=body_path('triangle'), oracle=400))
    self.assertEqual(code, EXIT_OK)
    self.assertAlmostEqual(float(output), 0.5, places=12)
    self.assertIn('Grid volume at n=400', logs.output[-1])

  def test_bound(self):
    code, output = run_harness(namespace('bound', A=body_path('cube'), B=body_path('octahedron'), alpha=0.5, beta=0.5, u='0,0,1', mode='section'))
    self.assertEqual(code, EXIT_OK)
    self.assertAlmostEqual(json.loads(output)['bonnesen_rhs'], 1.214256, places=6)

  def test_classify_exit_codes(self):
    code, output = run_harness(namespace('classify', A=body_path('cube'), B=body_path('cube'), alpha=0.5, beta=0.5, u='0,0,1', mode='section'))
    self.assertEqual(code, EXIT_OK)
    self.assertEqual(json.loads(output)['kind'], 'homothetic')

    code, output = run_harness(namespace('classify', A=body_path('cube'), B=body_path('octahedron'), alpha=0.5, beta=0.5, u='0,0,1', mode='section'))
    self.assertEqual(code, EXIT_PRECONDITION)
    self.assertEqual(json.loads(output)['kind'], 'precondition_violated')

  def test_classify_without_witness(self):
    with mock.patch('harness.components.Harness.classify_section_equality', return_value=EqualityWitness.none('maximal sections are not translates')):
      code, output = run_harness(namespace('classify', A=body_path('cube'), B=body_path('cube'), alpha=0.5, beta=0.5, u='0,0,1', mode='section'))
    self.assertEqual(code, EXIT_NO_EQUALITY)
    self.assertEqual(json.loads(output)['kind'], 'no_equality')

  def test_gen_equality_files(self):
    with tempfile.TemporaryDirectory() as directory:
      prefix = os.path.join(directory, 'pair')
      code, _ = run_harness(namespace('gen-equality', kind='section-stretch', seed=3, dim=3, output=prefix))
      self.assertEqual(code, EXIT_OK)
      A, B = load_body(f'{prefix}.A.json'), load_body(f'{prefix}.B.json')
      with open(f'{prefix}.scenario.json', 'r', encoding='utf-8') as file:
        scenario = json.load(file)

    report = verify_chain(A, B, scenario['alpha'], scenario['beta'], scenario['u'], BonnesenReport.Mode.SECTION, 1e-6)
    self.assertTrue(report.equality_bonnesen)

  def test_geometry_errors_exit_with_one(self):
    with self.assertLogs('HARNESS', level='ERROR'):
      code, _ = run_harness(namespace('bound', A=body_path('flat'), B=body_path('cube'), alpha=0.5, beta=0.5, u='0,0,1', mode='section'))
    self.assertEqual(code, EXIT_ERROR)

  def test_missing_file(self):
    with self.assertRaises(SystemExit) as raised:
      Harness(namespace('vol', body=body_path('nonexistent'), oracle=None))
    self.assertEqual(raised.exception.code, EXIT_ERROR)

  def test_malformed_file(self):
    with self.assertRaises(SystemExit) as raised:
      run_harness(namespace('vol', body=body_path('malformed'), oracle=None))
    self.assertEqual(raised.exception.code, EXIT_ERROR)



if __name__ == '__main__':
  unittest.main()
