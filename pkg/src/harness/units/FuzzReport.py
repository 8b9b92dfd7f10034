import collections

class FuzzReport:
  trials: int
  dim: int
  base_seed: int
  mode: str
  violations: list[dict[str, object]]
  equality_hits: list[dict[str, object]]
  gaps: list[dict[str, object]]
  timing: dict[str, float]

  def __init__(self, trials: int, dim: int, base_seed: int, mode: str):
    self.trials = trials
    self.dim = dim
    self.base_seed = base_seed
    self.mode = mode
    self.violations = list()
    self.equality_hits = list()
    self.gaps = list()
    self.timing = collections.defaultdict(float)

  def __repr__(self):
    return f'FuzzReport({self.trials} trial(s) in R^{self.dim} from seed {self.base_seed}: {len(self.violations)} violation(s), {len(self.equality_hits)} equality hit(s))'

  def absorb(self, outcome: dict[str, list]) -> None:
    self.violations.extend(outcome['violations'])
    self.equality_hits.extend(outcome['equality_hits'])
    self.gaps.extend(outcome['gaps'])
    for phase, seconds in outcome['timing'].items():
      self.timing[phase] += seconds

  def finalize(self) -> None:
    key = lambda entry: (entry['seed'], entry.get('mode', ''), entry.get('invariant', ''))
    self.violations.sort(key=key)
    self.equality_hits.sort(key=key)
    self.gaps.sort(key=key)

  @property
  def passed(self) -> bool:
    return len(self.violations) == 0
