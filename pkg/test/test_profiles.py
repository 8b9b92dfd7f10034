import unittest
import math
import sys
import os

import numpy as np
from scipy.integrate import quad

sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.realpath(__file__))), 'src'))

from geometry.units.Direction import Direction
from geometry.units.GeometryError import DegenerateBody, DimensionMismatch, OutOfRange
from geometry.routines.kernel import hull, volume, section, stretch
from geometry.routines.distances import hausdorff
from geometry.constants.tolerances import EPS_VOL
from profiles.routines.profile import build_profile, level_bounds, layer_cake_volume, max_sections
from harness.routines.bodies import cube, cross_polytope, random_body

E3 = [0.0, 0.0, 1.0]



class BuildProfileTest(unittest.TestCase):
  def test_cube_is_one_plateau(self):
    prof = build_profile(cube(3), E3)
    self.assertAlmostEqual(prof.Q, 1.0, places=9)
    self.assertEqual((prof.p_min, prof.p_max), (0.0, 1.0))
    self.assertAlmostEqual(prof.q_lo, 0.0, places=7)
    self.assertAlmostEqual(prof.q_hi, 1.0, places=7)

  def test_octahedron_has_a_unique_maximum(self):
    prof = build_profile(cross_polytope(3), E3)
    self.assertAlmostEqual(prof.Q, 2.0, places=9)
    self.assertAlmostEqual(prof.q_lo, 0.0, places=7)
    self.assertAlmostEqual(prof.q_hi, 0.0, places=7)

  def test_octahedron_profile_formula(self):
    prof = build_profile(cross_polytope(3), E3)
    for p in np.linspace(-0.95, 0.95, 17):
      self.assertAlmostEqual(prof.area(p), 2 * (1 - abs(p)) ** 2, places=9)

  def test_maximum_matches_dense_scan(self):
    prof = build_profile(random_body(3, 30, 3), [0.2, 0.5, -0.7])
    _, areas = prof.sample(10000)
    self.assertGreaterEqual(prof.Q, areas.max() * (1 - 1e-9))
    self.assertLessEqual(abs(prof.Q - areas.max()) / prof.Q, 1e-4)

  def test_interval_area_matches_exact_section(self):
    K = random_body(3, 25, 17)
    u = Direction([1.0, -1.0, 0.5])
    prof = build_profile(K, u)
    for p in np.linspace(prof.p_min, prof.p_max, 23)[1:-1]:
      exact = section(K, u, p)
      self.assertAlmostEqual(prof.area(p), volume(exact), delta=1e-9 * max(1.0, prof.Q))

  def test_ordering_and_unimodality(self):
    prof = build_profile(random_body(3, 30, 8), [0.0, 1.0, 1.0])
    self.assertTrue(prof.p_min <= prof.q_lo <= prof.q_hi <= prof.p_max)
    self.assertAlmostEqual(prof.area(prof.q_lo), prof.Q, delta=EPS_VOL * prof.Q)
    self.assertAlmostEqual(prof.area(prof.q_hi), prof.Q, delta=EPS_VOL * prof.Q)

    offsets, areas = prof.sample(200)
    self.assertTrue(np.all(areas <= prof.Q * (1 + EPS_VOL)))
    rising, falling = offsets <= prof.q_lo, offsets >= prof.q_hi
    self.assertTrue(np.all(np.diff(areas[rising]) >= -EPS_VOL * prof.Q))
    self.assertTrue(np.all(np.diff(areas[falling]) <= EPS_VOL * prof.Q))

  def test_plateau_of_a_stretched_body(self):
    K = stretch(cross_polytope(3), E3, 0.5)
    prof = build_profile(K, E3)
    self.assertAlmostEqual(prof.Q, 2.0, places=9)
    self.assertAlmostEqual(prof.q_lo, 0.0, places=7)
    self.assertAlmostEqual(prof.q_hi, 0.5, places=7)

    bottom, top = max_sections(prof)
    self.assertLessEqual(hausdorff(bottom, top), 1e-6)

  def test_max_sections_are_translates(self):
    K = hull([[0, 0, 0], [2, 0, 0], [0, 1, 0], [2, 1, 0], [1, 0, 1], [3, 0, 1], [1, 1, 1], [3, 1, 1], [3, 0.5, 2]], 3)
    prof = build_profile(K, E3)
    self.assertLess(prof.q_lo + 0.5, prof.q_hi)

    bottom, top = max_sections(prof)
    shift = top.vertices.mean(axis=0) - bottom.vertices.mean(axis=0)
    moved = hull(bottom.vertices + shift, 2)
    self.assertLessEqual(hausdorff(moved, top), 1e-6)

  def test_near_flat_maximum_is_snapped_with_a_warning(self):
    shrink = 5e-8
    top = [[shrink, shrink, 1], [1 - shrink, shrink, 1], [shrink, 1 - shrink, 1], [1 - shrink, 1 - shrink, 1]]
    K = hull([[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0]] + top, 3)
    with self.assertLogs('PROFILES', level='WARNING'):
      prof = build_profile(K, E3)
    self.assertEqual((prof.q_lo, prof.q_hi), (0.0, 0.0))

    with self.assertNoLogs('PROFILES', level='WARNING'):
      build_profile(cube(3), E3)

  def test_errors(self):
    flat = hull([[0, 0, 0], [1, 0, 0], [0, 1, 0]], 3)
    with self.assertRaises(DegenerateBody): build_profile(flat, E3)
    with self.assertRaises(DimensionMismatch): build_profile(cube(3), [1.0, 0.0])



class LevelBoundsTest(unittest.TestCase):
  def test_cube_levels(self):
    prof = build_profile(cube(3), E3)
    for s in (1e-3, 0.25, 0.9, 1.0):
      k_minus, k_plus = level_bounds(prof, s)
      self.assertAlmostEqual(k_minus, 0.0, places=7)
      self.assertAlmostEqual(k_plus, 1.0, places=7)

  def test_octahedron_levels(self):
    prof = build_profile(cross_polytope(3), E3)
    k_minus, k_plus = level_bounds(prof, 1.0)
    self.assertAlmostEqual(k_minus, -(1 - 1 / math.sqrt(2)), delta=1e-6)
    self.assertAlmostEqual(k_plus, 1 - 1 / math.sqrt(2), delta=1e-6)

    k_minus, k_plus = level_bounds(prof, 2.0)
    self.assertAlmostEqual(k_minus, 0.0, places=7)
    self.assertAlmostEqual(k_plus, 0.0, places=7)

  def test_consistency(self):
    prof = build_profile(random_body(3, 30, 12), [0.6, 0.0, 0.8])
    delta = 1e-4 * prof.width
    for s in prof.Q * np.array([0.05, 0.3, 0.6, 0.9, 0.99]):
      k_minus, k_plus = level_bounds(prof, s)
      self.assertGreaterEqual(prof.area(k_minus), s - EPS_VOL * prof.Q)
      self.assertGreaterEqual(prof.area(k_plus), s - EPS_VOL * prof.Q)
      if k_plus < prof.p_max: self.assertLess(prof.area(k_plus + delta), s)
      if k_minus > prof.p_min: self.assertLess(prof.area(k_minus - delta), s)

  def test_positive_measure_caps_clamp_to_the_support(self):
    # A box-topped cone: every level below the cap area is reached at p_max.
    K = hull([[0, 0, 0], [2, 0, 0], [0, 2, 0], [2, 2, 0], [0.5, 0.5, 1], [1.5, 0.5, 1], [0.5, 1.5, 1], [1.5, 1.5, 1]], 3)
    prof = build_profile(K, E3)
    self.assertEqual(level_bounds(prof, 0.5)[1], prof.p_max)

  def test_out_of_range(self):
    prof = build_profile(cube(3), E3)
    with self.assertRaises(OutOfRange): level_bounds(prof, 0.0)
    with self.assertRaises(OutOfRange): level_bounds(prof, 1.1)



class LayerCakeTest(unittest.TestCase):
  def test_cube(self):
    self.assertAlmostEqual(layer_cake_volume(build_profile(cube(3), E3), 64), 1.0, delta=1e-6)

  def test_octahedron(self):
    estimate = layer_cake_volume(build_profile(cross_polytope(3), E3), 1024)
    self.assertLessEqual(abs(estimate - 4 / 3) / (4 / 3), 1e-3)

  def test_random_body(self):
    K = random_body(3, 30, 5)
    estimate = layer_cake_volume(build_profile(K, [0.3, 0.3, 0.9]), 1024)
    self.assertLessEqual(abs(estimate - volume(K)) / volume(K), 5e-3)

  def test_offset_integration_agrees(self):
    K = random_body(3, 30, 6)
    prof = build_profile(K, [1.0, 2.0, 2.0])
    integral, _ = quad(prof.area, prof.p_min, prof.p_max, points=prof.breakpoints[1:-1], limit=400)
    self.assertAlmostEqual(integral, volume(K), delta=1e-6 * volume(K))

  def test_too_few_levels(self):
    with self.assertRaises(OutOfRange): layer_cake_volume(build_profile(cube(3), E3), 8)



if __name__ == '__main__':
  unittest.main()
