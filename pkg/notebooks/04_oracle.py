# # Checking closed-form equilibria by brute force
#
# Every closed-form answer can be audited on a grid: no grid deviation may
# gain more than K*h, with K a payoff-gradient bound and h the grid step.

# +
from bandscan import REFERENCE_PARAMS, solve_known_type
from bandscan.formats import format_certificate
from bandscan.oracle import GridSpec, certify_equilibrium, find_grid_nash

# -
p = REFERENCE_PARAMS.replace(F=0.0)
eq = solve_known_type(p)
print(format_certificate(certify_equilibrium(p, (eq.x, eq.y), GridSpec(2001, 2001))))

# -
# A nudged Scanner width is caught.
cert = certify_equilibrium(p, (eq.x + 0.05, eq.y), GridSpec(2001, 2001))
print(cert.passed, cert.eps_scanner, cert.tolerance)

# -
# The exhaustive search recovers the same point as a grid fixed point.
print(find_grid_nash(p, GridSpec(501, 501)))

# -
# When the Scanner is indifferent at an interior width, its grid replies
# flip between the two ends and the discretized game has no pure fixed
# point, though the closed-form point still certifies.
p = REFERENCE_PARAMS.replace(c=0.3, F=0.15)
eq = solve_known_type(p)
print(eq.case_id, eq.x, eq.y, find_grid_nash(p, GridSpec(501, 501)),
      certify_equilibrium(p, (eq.x, eq.y), GridSpec(501, 501)).passed)
