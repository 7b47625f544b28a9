"""Brute-force grid checks of equilibrium candidates.

Both strategy intervals are discretized uniformly (endpoints included) and
payoffs are evaluated exhaustively. Nothing here uses the closed-form
solution; candidates are only ever scored against grid deviations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import (GameParams, ParameterError, invader_payoff_raw,
                    scanner_payoff_for)

TIE_TOL = 1e-12


@dataclass(frozen=True)
class GridSpec:
    n_x: int = 501
    n_y: int = 501

    def __post_init__(self):
        if self.n_x < 2 or self.n_y < 2:
            raise ParameterError("grids need at least 2 points per axis")

    def axes(self, p: GameParams):
        return np.linspace(p.a, p.b, self.n_x), np.linspace(p.a, p.c, self.n_y)

    def steps(self, p: GameParams):
        return (p.b - p.a) / (self.n_x - 1), (p.c - p.a) / (self.n_y - 1)


@dataclass(frozen=True)
class NashCertificate:
    candidate: tuple
    eps_scanner: float
    eps_invader: float
    tolerance: float
    lipschitz: float
    step: float
    passed: bool
    grid: GridSpec
    regime: str
    q: float

    def csv_row(self) -> str:
        x, y = self.candidate
        return (f"{x:.6f},{y:.6f},{self.eps_scanner:.3e},{self.eps_invader:.3e},"
                f"{self.tolerance:.3e},{'pass' if self.passed else 'fail'}")

    CSV_HEADER = "x,y,eps_scanner,eps_invader,tolerance,result"


def lipschitz_bound(p: GameParams) -> float:
    """Bound on both players' own-strategy payoff slopes over the strategy box.

    |d v_S / dx| = |F + V y - C_S| <= F + V c + C_S (the type-averaged Scanner
    payoff has the same bound since a <= c), and
    |d v_I / dy| = |U (1 - x) - F - C_I - 2 U y| <= U + F + C_I + 2 U c.
    """
    k_s = p.F + p.V * p.c + p.C_S
    k_i = p.U + p.F + p.C_I + 2 * p.U * p.c
    return max(k_s, k_i)


def certify_equilibrium(p: GameParams, candidate, grid: GridSpec = GridSpec(2001, 2001),
                        regime: str = "known", tolerance: float | None = None) -> NashCertificate:
    """Largest gain either player gets from a unilateral grid deviation.

    Passes when both gains are within ``K * h`` (Lipschitz bound times the
    coarser grid step) unless an explicit ``tolerance`` is given.
    """
    x0, y0 = (float(v) for v in candidate)
    if not (p.a <= x0 <= p.b and p.a <= y0 <= p.c):
        raise ParameterError(f"candidate {candidate} outside the strategy box")
    vs = scanner_payoff_for(regime)
    xs, ys = grid.axes(p)
    eps_s = max(0.0, float(np.max(vs(p, xs, y0)) - vs(p, x0, y0)))
    if regime == "unknown" and p.q == 0:
        # the Invader is always of the fixed-width type
        eps_i = 0.0 if y0 == p.a else float("inf")
    else:
        eps_i = max(0.0, float(np.max(invader_payoff_raw(p, x0, ys))
                               - invader_payoff_raw(p, x0, y0)))
    K = lipschitz_bound(p)
    h = max(grid.steps(p))
    tol = K * h if tolerance is None else tolerance
    return NashCertificate(candidate=(x0, y0), eps_scanner=eps_s, eps_invader=eps_i,
                           tolerance=tol, lipschitz=K, step=h,
                           passed=max(eps_s, eps_i) <= tol, grid=grid,
                           regime=regime, q=p.q if regime == "unknown" else 1.0)


def find_grid_nash(p: GameParams, grid: GridSpec = GridSpec(), regime: str = "known",
                   tie_tol: float = TIE_TOL) -> list:
    """All grid pairs that are mutual best responses on the grid.

    Returns a list of ``(x, y)`` tuples ordered by x then y.
    """
    xs, ys = grid.axes(p)
    X, Y = xs[:, None], ys[None, :]
    S = scanner_payoff_for(regime)(p, X, Y)
    I = invader_payoff_raw(p, X, Y)
    s_ok = S >= S.max(axis=0, keepdims=True) - tie_tol
    i_ok = I >= I.max(axis=1, keepdims=True) - tie_tol
    ii, jj = np.nonzero(s_ok & i_ok)
    return [(float(xs[i]), float(ys[j])) for i, j in zip(ii, jj)]
