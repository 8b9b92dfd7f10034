import json
import csv

import numpy as np

from geometry.units.ConvexBody import ConvexBody
from geometry.units.GeometryError import DimensionMismatch
from geometry.routines.kernel import hull
from bonnesen.units.BonnesenReport import BonnesenReport
from equality.units.EqualityWitness import EqualityWitness
from harness.units.Scenario import Scenario
from harness.units.FuzzReport import FuzzReport

def body_to_json(K: ConvexBody) -> dict:
  return {'dim': K.dim, 'vertices': K.vertices.tolist()}

def body_from_json(data: dict) -> ConvexBody:
  if not isinstance(data, dict) or 'dim' not in data or 'vertices' not in data:
    raise DimensionMismatch('A body needs the keys "dim" and "vertices".')
  return hull(data['vertices'], int(data['dim']))

def load_body(path: str) -> ConvexBody:
  with open(path, 'r', encoding='utf-8') as file:
    return body_from_json(json.load(file))

def save_json(data: dict, path: str) -> None:
  with open(path, 'w', encoding='utf-8') as file:
    json.dump(data, file, indent=2)



def report_to_json(report: BonnesenReport) -> dict:
  return {
    'mode': report.mode.name.lower(),
    'lhs': report.lhs,
    'M': report.M,
    'N': report.N,
    'bonnesen_rhs': report.bonnesen_rhs,
    'bm_rhs': report.bm_rhs,
    'gap_bonnesen': report.gap_bonnesen,
    'gap_holder': report.gap_holder,
    'equality_bonnesen': bool(report.equality_bonnesen),
    'equality_holder': bool(report.equality_holder),
    'holder_ratio_lhs': report.holder_ratio_lhs,
    'holder_ratio_rhs': report.holder_ratio_rhs
  }

def witness_to_json(witness: EqualityWitness) -> dict:
  data = {'kind': witness.kind.name.lower()}
  match(witness.kind):
    case EqualityWitness.Kind.HOMOTHETIC:
      data.update({'lambda': witness.lam, 't': witness.t.tolist()})
    case EqualityWitness.Kind.STRETCHED_PAIR:
      data.update({
        'v': witness.v.u.tolist(),
        'lambda_A': witness.lambda_A,
        'lambda_B': witness.lambda_B,
        'A_prime': body_to_json(witness.A_prime),
        'B_prime': body_to_json(witness.B_prime),
        'hom': {'lambda': witness.hom[0], 't': np.asarray(witness.hom[1]).tolist()},
        'H': None if witness.H is None else {'normal': witness.H.normal.tolist(), 'offset': witness.H.offset}
      })
    case EqualityWitness.Kind.NO_EQUALITY:
      data['diagnostic'] = witness.diagnostic

  data['residuals'] = dict(witness.residuals)
  return data

def scenario_to_json(scenario: Scenario) -> dict:
  return {
    'kind': None if scenario.kind is None else scenario.kind.name.lower(),
    'seed': scenario.seed,
    'alpha': scenario.alpha,
    'beta': scenario.beta,
    'u': scenario.u.u.tolist(),
    'mode': scenario.mode.name.lower(),
    'tolerances': dict(zip(['eps_geom', 'eps_vol', 'eps_eq', 'eps_wit'], scenario.tolerances.as_tuple())),
    'truth': {key: value for key, value in scenario.truth.items() if not isinstance(value, ConvexBody)}
  }

def fuzz_report_to_json(report: FuzzReport, timing: bool = True) -> dict:
  data = {
    'trials': report.trials,
    'dim': report.dim,
    'base_seed': report.base_seed,
    'mode': report.mode,
    'violations': report.violations,
    'equality_hits': report.equality_hits
  }
  if timing: data['timing'] = dict(sorted(report.timing.items()))
  return data

def save_gaps_csv(report: FuzzReport, path: str) -> None:
  with open(path, 'w', encoding='utf-8', newline='') as file:
    writer = csv.DictWriter(file, fieldnames=['seed', 'mode', 'lhs', 'gap_bonnesen', 'gap_holder'])
    writer.writeheader()
    writer.writerows(report.gaps)
