"""Parameter sweeps over the fine F or the type probability q."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .equilibrium import KNOWN, UNKNOWN, solve
from .model import GameParams, ParameterError

CSV_HEADER = ("param", "case", "x", "y", "p_lin", "p_exact", "v_S", "v_I", "jump")
SWEEPABLE = ("F", "q")


@dataclass(frozen=True)
class SweepSpec:
    parameter: str
    start: float
    stop: float
    steps: int
    fixed: GameParams
    regime: str | None = None

    def __post_init__(self):
        if self.parameter not in SWEEPABLE:
            raise ParameterError(f"can only sweep {SWEEPABLE}, got {self.parameter!r}")
        if not self.start < self.stop:
            raise ParameterError(f"sweep needs from < to, got {self.start} >= {self.stop}")
        if self.steps < 2:
            raise ParameterError("sweep needs at least 2 steps")

    @property
    def solver_regime(self) -> str:
        if self.regime is not None:
            return self.regime
        return UNKNOWN if self.parameter == "q" else KNOWN

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.steps)

    @property
    def step(self) -> float:
        return (self.stop - self.start) / (self.steps - 1)

    @property
    def jump_threshold(self) -> float:
        # within one table case x moves at most ~2 per unit of the swept
        # parameter, so a genuine discontinuity dwarfs this
        return 5 * self.step * (self.fixed.b - self.fixed.a)


@dataclass(frozen=True)
class SweepRow:
    param_value: float
    case_id: str
    x: float
    y: float
    p_detect_linear: float
    p_detect_exact: float
    v_S: float
    v_I: float
    jump_flag: bool

    def csv_fields(self):
        nums = (self.param_value,)
        tail = (self.x, self.y, self.p_detect_linear, self.p_detect_exact, self.v_S, self.v_I)
        return ([f"{nums[0]:.6f}", self.case_id] + [f"{v:.6f}" for v in tail]
                + [str(int(self.jump_flag))])


def solve_at(spec: SweepSpec, value: float):
    try:
        p = spec.fixed.replace(**{spec.parameter: float(value)})
    except ParameterError as err:
        raise ParameterError(f"{spec.parameter}={value}: {err}", err.key) from None
    return solve(p, spec.solver_regime)


def run_sweep(spec: SweepSpec) -> list:
    rows = []
    prev_x = None
    for v in spec.values():
        eq = solve_at(spec, v)
        jump = prev_x is not None and abs(eq.x - prev_x) > spec.jump_threshold
        rows.append(SweepRow(float(v), eq.case_id, eq.x, eq.y, eq.p_detect,
                             eq.p_exact, eq.v_S, eq.v_I, jump))
        prev_x = eq.x
    return rows


def write_csv(rows, fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow(r.csv_fields())


def sweep_csv(spec: SweepSpec) -> str:
    buf = io.StringIO()
    write_csv(run_sweep(spec), buf)
    return buf.getvalue()


def jump_rows(rows) -> list:
    return [r for r in rows if r.jump_flag]


def locate_switch(spec: SweepSpec, lo: float, hi: float, tol: float = 1e-12) -> float:
    """Bisect for the parameter value where the solver leaves the case it has at ``lo``.

    Returns the smallest value (to ``tol``) already in the new case.
    """
    case_lo = solve_at(spec, lo).case_id
    if solve_at(spec, hi).case_id == case_lo:
        raise ParameterError(f"no case change between {lo} and {hi}")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if solve_at(spec, mid).case_id == case_lo:
            lo = mid
        else:
            hi = mid
    return hi


def switch_points(spec: SweepSpec, rows=None) -> list:
    """Refined locations of every flagged jump in x."""
    rows = run_sweep(spec) if rows is None else rows
    out = []
    for prev, row in zip(rows, rows[1:]):
        if row.jump_flag:
            out.append(locate_switch(spec, prev.param_value, row.param_value))
    return out


def fine_threshold(p: GameParams, regime: str = KNOWN) -> float:
    """Fine at which the indifference level R reaches c (Scanner stops playing a)."""
    if regime == KNOWN:
        return p.C_S - p.V * p.c
    return p.C_S - (1 - p.q) * p.V * p.a - p.q * p.V * p.c


def q_threshold(p: GameParams) -> float:
    """Type probability at which R reaches c, from C_S - F - (1-q) V a = q V c."""
    return (p.C_S - p.F - p.V * p.a) / (p.V * (p.c - p.a))
