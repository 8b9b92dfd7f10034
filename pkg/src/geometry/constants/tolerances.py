# Predicates: coplanarity, extremality, membership.
EPS_GEOM = 1e-9
# Relative, for volume comparisons.
EPS_VOL = 1e-6
# Relative to lhs, for equality detection in the inequality chain.
EPS_EQ = 1e-6
# Relative to diameter, for witness reconstruction.
EPS_WIT = 1e-6
# Offsets along a direction, relative to the support width.
EPS_OFF = 1e-7
# Relative to diameter, for symmetrization inclusions.
EPS_INCL = 1e-6
# Relative drop from Q that still counts as the maximal section.
PLATEAU_LEVEL = 1e-9

MIN_DIM = 2
MAX_DIM = 4
