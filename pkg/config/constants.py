"""
Numeric constants for the Schreier/Baernstein toolkit.
Contains tolerances, enumeration guards, sampling ranges and parameter grids.
"""

# Tolerances
ORACLE_RTOL = 1e-12  # fast norm vs brute-force oracle
IDENTITY_TOL = 1e-10  # algebraic identities that accumulate rounding
INCLUSION_ATOL = 1e-9  # ||x||_Z <= C ||x||_Y + tol
JAMESON_ATOL = 1e-9
DOMINATION_MARGIN = 1e-9  # probe ratio must exceed C * (1 + margin)

# Brute-force enumeration guards
SCHREIER_ORACLE_MAX_SUPPORT = 20
CHAIN_ORACLE_MAX_SUPPORT = 12

# Random vector sampling
MIN_SAMPLE_SUPPORT = 1
MAX_SAMPLE_SUPPORT = 40
MAX_SAMPLE_INDEX = 10_000
COEFFICIENT_LAWS = ("uniform", "exponential", "spike", "flat")

# Dyadic-block (case iv) checks
MAX_DYADIC_DEPTH = 6
REARRANGEMENT_Q_GRID = (1.0, 2.0, 3.0)

# Parameter grid for order and inclusion checks
PARAMETER_GRID = (1.0, 1.25, 1.5, 2.0, 2.5, 3.0, 10.0)

# Domination probe
PROBE_GEOMETRIC_RATIOS = (0.25, 0.5, 0.75, 1.5, 2.0)

# Reports
CERTIFICATE_SAMPLE_SIZE = 20
