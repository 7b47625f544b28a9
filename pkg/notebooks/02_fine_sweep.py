# # How the fine shapes the bandwidth choices
#
# Widths are chosen against the linearized detection probability x + y.
# Sweeping the fine F shows the Scanner switching from the narrowest scan to
# a wider one at a single threshold, while the Invader shrinks its band
# continuously.

# +
from bandscan import REFERENCE_PARAMS, SweepSpec, run_sweep
from bandscan.sweep import fine_threshold, jump_rows, switch_points

# -
for c in (0.2, 0.3):
    spec = SweepSpec("F", 0.0, 0.39, 400, REFERENCE_PARAMS.replace(c=c))
    rows = run_sweep(spec)
    (at,) = switch_points(spec, rows)
    print(f"c={c}: predicted switch F*={fine_threshold(spec.fixed):.4f}, located {at:.6f}")
    for row in rows[::40]:
        print(f"  F={row.param_value:.3f} {row.case_id:>3} x={row.x:.4f} y={row.y:.4f} "
              f"p={row.p_detect_linear:.4f} v_S={row.v_S:+.4f} v_I={row.v_I:+.4f}")
    for row in jump_rows(rows):
        print(f"  jump at F={row.param_value:.6f}")

# -
# The linear detection model and the exact tiling value can differ in either
# direction; the exact value is a diagnostic only and never feeds back into
# the width choices.
spec = SweepSpec("F", 0.0, 0.39, 14, REFERENCE_PARAMS)
for row in run_sweep(spec):
    print(f"F={row.param_value:.3f} linear={row.p_detect_linear:.4f} exact={row.p_detect_exact:.4f}")
