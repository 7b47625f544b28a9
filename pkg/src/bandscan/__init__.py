"""Solver and verification tools for the Scanner/Invader spectrum-scanning game.

The band-placement step is solved by uniform tilings (:mod:`bandscan.tiling`);
the width-selection step with linearized detection probability has closed-form
equilibria (:mod:`bandscan.equilibrium`), which :mod:`bandscan.oracle` checks
by brute force on a grid.
"""

from .model import (Band, GameParams, ParameterError, REFERENCE_PARAMS,
                    derived_constants, payoff_invader, payoff_scanner,
                    payoff_scanner_expected, validate_params)
from .tiling import (TilingSolution, bands_intersect, build_tilings,
                     detection_probability_exact, simulate_detection,
                     verify_saddle_bounds)
from .equilibrium import (BestResponse, Equilibrium, best_response_invader,
                          best_response_scanner, solve, solve_known_type,
                          solve_unknown_type)
from .oracle import GridSpec, NashCertificate, certify_equilibrium, find_grid_nash
from .sweep import SweepRow, SweepSpec, run_sweep
from .formats import load_config, parse_config

__version__ = "0.1.0"
