import argparse
import logging
import enum
import os

from geometry.constants.tolerances import EPS_GEOM, EPS_VOL, EPS_EQ, EPS_WIT

PROFILE_VARIABLE = 'BONNESEN_TOLERANCE_PROFILE'

class Tolerances:
  class Profile(enum.Enum):
    DEFAULT = 1.0
    STRICT = 0.1

  profile: Profile
  eps_geom: float
  eps_vol: float
  eps_eq: float
  eps_wit: float

  def __init__(self, eps_eq: float = None, eps_wit: float = None, profile: str = None):
    name = (os.environ.get(PROFILE_VARIABLE, 'default') if profile is None else profile).strip().upper()
    if name not in Tolerances.Profile.__members__:
      logging.getLogger('HARNESS').warning(f'Unknown tolerance profile "{name.lower()}" in {PROFILE_VARIABLE}; using default.')
      name = 'DEFAULT'

    self.profile = Tolerances.Profile[name]
    self.eps_geom = EPS_GEOM
    self.eps_vol = EPS_VOL
    self.eps_eq = (EPS_EQ if eps_eq is None else eps_eq) * self.profile.value
    self.eps_wit = (EPS_WIT if eps_wit is None else eps_wit) * self.profile.value

  @classmethod
  def from_args(cls, args: argparse.Namespace) -> 'Tolerances':
    return cls(getattr(args, 'eps_eq', None), getattr(args, 'eps_wit', None))

  def __repr__(self):
    return f'Tolerances({self.profile.name}: geom={self.eps_geom:g}, vol={self.eps_vol:g}, eq={self.eps_eq:g}, wit={self.eps_wit:g})'

  def as_tuple(self) -> tuple[float, float, float, float]:
    return self.eps_geom, self.eps_vol, self.eps_eq, self.eps_wit
