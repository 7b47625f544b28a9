# # When the Scanner does not know what drives the Invader
#
# With probability q the Invader profits from bandwidth; otherwise it always
# takes the narrowest band a. The Scanner weighs both types.

# +
import numpy as np

from bandscan import REFERENCE_PARAMS, SweepSpec, run_sweep, solve_unknown_type
from bandscan.sweep import jump_rows, q_threshold

# -
base = REFERENCE_PARAMS.replace(F=0.2)
for c in (0.2, 0.3):
    spec = SweepSpec("q", 0.001, 0.999, 400, base.replace(c=c))
    rows = run_sweep(spec)
    xs = np.array([r.x for r in rows])
    print(f"c={c}: x ranges over [{xs.min():.4f}, {xs.max():.4f}], "
          f"jumps at {[round(r.param_value, 4) for r in jump_rows(rows)]}")

# -
# The switch happens where the Scanner's indifference level reaches c.
print("q* =", q_threshold(base.replace(c=0.3)))

# -
# At q = 0 only the narrow type remains and the Scanner answers it directly.
for F in (0.2, 0.45):
    eq = solve_unknown_type(base.replace(c=0.3, q=0.0, F=F))
    print(F, eq.case_id, eq.x, eq.y)
