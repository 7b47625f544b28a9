"""Width-selection game with linearized detection probability x + y.

Best responses and the closed-form equilibrium table (cases i1..i11) for the
known-type game, plus the Bayesian variant where the Invader's award scales
with bandwidth only with probability q.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .model import (GameParams, ParameterError, derived_constants,
                    invader_payoff_raw, invader_threshold, scanner_payoff_for)
from .tiling import detection_probability_exact

KNOWN = "known"
UNKNOWN = "unknown"

# dispatch decisions closer than this to a threshold are flagged
BOUNDARY_TOL = 1e-9

CASES = tuple(f"i{k}" for k in range(1, 12))
# label for the q = 0 game, which lies outside the table
Q0_CASE = "q0"


@dataclass(frozen=True)
class BestResponse:
    kind: str  # "point" or "interval"
    lo: float
    hi: float

    @property
    def value(self):
        return self.lo if self.kind == "point" else (self.lo, self.hi)

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    @classmethod
    def point(cls, v):
        return cls("point", v, v)


@dataclass(frozen=True)
class Equilibrium:
    case_id: str
    x: float
    y: float
    p_detect: float
    p_exact: float
    v_S: float
    v_I: float
    regime: str
    q: float
    R: float | None
    T: float
    near_boundary: tuple = field(default=())
    margin: float = float("inf")

    @property
    def regime_label(self) -> str:
        return KNOWN if self.regime == KNOWN else f"{UNKNOWN}(q={self.q:g})"


def _check_regime(regime):
    if regime not in (KNOWN, UNKNOWN):
        raise ParameterError(f"regime must be 'known' or 'unknown', got {regime!r}")


def best_response_scanner(p: GameParams, y: float, regime: str = KNOWN) -> BestResponse:
    """a below the indifference level R, b above it, all of [a, b] at R."""
    _check_regime(regime)
    if not p.a <= y <= p.c:
        raise ParameterError(f"y={y} outside [a, c]")
    R = derived_constants(p, regime).R
    if y < R:
        return BestResponse.point(p.a)
    if y > R:
        return BestResponse.point(p.b)
    return BestResponse("interval", p.a, p.b)


def best_response_invader(p: GameParams, x: float) -> float:
    """Unconstrained apex ``(T - x) / 2`` clamped to ``[a, c]``."""
    if not p.a <= x <= p.b:
        raise ParameterError(f"x={x} outside [a, b]")
    L = (invader_threshold(p) - x) / 2
    if L <= p.a:
        return p.a
    if L >= p.c:
        return p.c
    return L


def _dispatch(p: GameParams, R: float, T: float):
    """Table lookup. Returns (case, x, y, list of (name, distance) comparisons)."""
    a, b, c = p.a, p.b, p.c
    La = (T - a) / 2
    Lb = (T - b) / 2
    checks = [("R-a", R - a), ("R-c", R - c)]
    if a <= R <= c:
        checks += [("Lb-R", Lb - R), ("La-R", La - R)]
        if Lb <= R <= La:
            x = min(max(T - 2 * R, a), b)
            return "i7", x, R, checks
        if R > La:
            checks.append(("La-a", La - a))
            if La <= a:
                return "i8", a, a, checks
            return "i9", a, La, checks
        # R < Lb
        checks.append(("Lb-c", Lb - c))
        if Lb > c:
            return "i10", b, c, checks
        return "i11", b, Lb, checks
    if R < a:
        checks += [("Lb-a", Lb - a), ("Lb-c", Lb - c)]
        if Lb < a:
            return "i1", b, a, checks
        if Lb <= c:
            return "i2", b, Lb, checks
        return "i3", b, c, checks
    checks += [("La-a", La - a), ("La-c", La - c)]
    if La < a:
        return "i4", a, a, checks
    if La <= c:
        return "i5", a, La, checks
    return "i6", a, c, checks


def _finish(p, case, x, y, regime, R, T, checks):
    near = tuple(name for name, d in checks if abs(d) <= BOUNDARY_TOL)
    margin = min(abs(d) for _, d in checks)
    v_S = float(scanner_payoff_for(regime)(p, x, y))
    v_I = float(invader_payoff_raw(p, x, y))
    return Equilibrium(case_id=case, x=x, y=y, p_detect=x + y,
                       p_exact=detection_probability_exact(x, y),
                       v_S=v_S, v_I=v_I, regime=regime,
                       q=1.0 if regime == KNOWN else p.q, R=R, T=T,
                       near_boundary=near, margin=margin)


def solve_known_type(p: GameParams) -> Equilibrium:
    dc = derived_constants(p, KNOWN)
    case, x, y, checks = _dispatch(p, dc.R, dc.T)
    return _finish(p, case, x, y, KNOWN, dc.R, dc.T, checks)


def solve_unknown_type(p: GameParams) -> Equilibrium:
    """Equilibrium when the Invader is width-motivated only with probability q.

    At q = 0 the Invader always plays a and the Scanner answers with the sign
    of its x-coefficient ``F + V a - C_S`` (ties resolved to a).
    """
    T = invader_threshold(p)
    if p.q == 0:
        coef = p.F + p.V * p.a - p.C_S
        x = p.b if coef > 0 else p.a
        checks = [("x-coefficient", coef)]
        return _finish(p, Q0_CASE, x, p.a, UNKNOWN, None, T, checks)
    dc = derived_constants(p, UNKNOWN)
    case, x, y, checks = _dispatch(p, dc.R, dc.T)
    return _finish(p, case, x, y, UNKNOWN, dc.R, dc.T, checks)


def solve(p: GameParams, regime: str = KNOWN) -> Equilibrium:
    _check_regime(regime)
    return solve_known_type(p) if regime == KNOWN else solve_unknown_type(p)


def is_fixed_point(p: GameParams, eq: Equilibrium, tol: float = 1e-12) -> bool:
    """Mutual best-response check, with ``tol`` absorbing rounding in T - 2R."""
    if eq.case_id == Q0_CASE:
        coef = p.F + p.V * p.a - p.C_S
        return eq.y == p.a and (eq.x == (p.b if coef > 0 else p.a))
    if abs(best_response_invader(p, eq.x) - eq.y) > tol:
        return False
    if abs(eq.y - eq.R) <= tol:
        return p.a <= eq.x <= p.b
    return eq.x in best_response_scanner(p, eq.y, eq.regime)
