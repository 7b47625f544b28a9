"""Parameters, bands and payoffs of the linearized Scanner/Invader game."""

from __future__ import annotations

import math
from dataclasses import dataclass, fields

PARAM_NAMES = ("a", "b", "c", "U", "V", "C_S", "C_I", "F", "q")


class ParameterError(ValueError):
    """Raised when a parameter set or strategy violates the model's domain.

    ``key`` names the offending parameter when there is one.
    """

    def __init__(self, message: str, key: str | None = None):
        super().__init__(message)
        self.key = key


@dataclass(frozen=True)
class GameParams:
    """Model constants.

    ``a`` is the common lower width bound, ``b`` the Scanner's and ``c`` the
    Invader's upper bound. ``U``/``V`` are award/damage rates per unit
    bandwidth, ``C_S``/``C_I`` the per-unit costs, ``F`` the fine and ``q`` the
    probability that the Invader's award scales with bandwidth.
    """

    a: float
    b: float
    c: float
    U: float
    V: float
    C_S: float
    C_I: float
    F: float
    q: float = 1.0

    def replace(self, **changes) -> "GameParams":
        values = {f.name: getattr(self, f.name) for f in fields(self)}
        values.update(changes)
        return validate_params(GameParams(**values))

    def as_dict(self) -> dict:
        return {name: getattr(self, name) for name in PARAM_NAMES}


def validate_params(p: GameParams) -> GameParams:
    """Return ``p`` unchanged, or raise ParameterError naming the broken invariant."""
    for name in PARAM_NAMES:
        v = getattr(p, name)
        if not isinstance(v, (int, float)) or not math.isfinite(v):
            raise ParameterError(f"{name} must be a finite number, got {v!r}", name)
    if not 0 < p.a:
        raise ParameterError(f"0 < a violated (a={p.a})", "a")
    if not p.a <= p.c:
        raise ParameterError(f"a <= c violated (a={p.a}, c={p.c})", "a")
    # c == b is admitted: the reference experiments use b = c = 0.3
    if not p.c <= p.b:
        raise ParameterError(f"c <= b violated (c={p.c}, b={p.b})", "c")
    if not p.b < 0.5:
        raise ParameterError(f"b < 1/2 violated (b={p.b})", "b")
    for name in ("U", "V", "C_S", "C_I"):
        if not getattr(p, name) > 0:
            raise ParameterError(f"{name} > 0 violated ({name}={getattr(p, name)})", name)
    if not p.F >= 0:
        raise ParameterError(f"F >= 0 violated (F={p.F})", "F")
    if not 0 <= p.q <= 1:
        raise ParameterError(f"0 <= q <= 1 violated (q={p.q})", "q")
    return p


@dataclass(frozen=True)
class Band:
    """Closed frequency interval ``[start, start + width]`` inside ``[0, 1]``."""

    start: float
    width: float

    def __post_init__(self):
        if not self.width > 0:
            raise ParameterError(f"band width must be positive, got {self.width}")
        if self.start < 0 or self.start + self.width > 1:
            raise ParameterError(
                f"band [{self.start}, {self.start + self.width}] escapes [0, 1]"
            )

    @property
    def end(self) -> float:
        return self.start + self.width


@dataclass(frozen=True)
class DerivedConstants:
    T: float
    R: float

    def L(self, x):
        """Invader's unconstrained best-response width."""
        return (self.T - x) / 2

    def L_inv(self, y):
        return self.T - 2 * y


def invader_threshold(p: GameParams) -> float:
    return (p.U - p.F - p.C_I) / p.U


def indifference_level(p: GameParams, regime: str = "known") -> float:
    """Invader width at which the Scanner's payoff does not depend on x.

    For the unknown-type game the level is undefined at q = 0.
    """
    if regime == "known":
        return (p.C_S - p.F) / p.V
    if regime == "unknown":
        if p.q == 0:
            raise ParameterError("indifference level is undefined for q = 0")
        return (p.C_S - p.F - (1 - p.q) * p.V * p.a) / (p.q * p.V)
    raise ParameterError(f"unknown regime {regime!r}")


def derived_constants(p: GameParams, regime: str = "known") -> DerivedConstants:
    return DerivedConstants(T=invader_threshold(p), R=indifference_level(p, regime))


def _check_domain(p: GameParams, x, y, tol: float = 1e-12):
    if not p.a - tol <= x <= p.b + tol:
        raise ParameterError(f"x={x} outside [a, b]=[{p.a}, {p.b}]")
    if not p.a - tol <= y <= p.c + tol:
        raise ParameterError(f"y={y} outside [a, c]=[{p.a}, {p.c}]")


# The raw payoff kernels take numpy arrays as well as floats; the public
# functions below add the strategy-box check.

def invader_payoff_raw(p: GameParams, x, y):
    return p.U * (1 - x - y) * y - p.F * (x + y) - p.C_I * y


def invader_payoff_expanded(p: GameParams, x, y):
    # quadratic in y: (U(1-x) - F - C_I) y - U y^2 - F x
    return (p.U * (1 - x) - p.F - p.C_I) * y - p.U * y * y - p.F * x


def scanner_payoff_raw(p: GameParams, x, y):
    return p.F * (x + y) - p.V * y * (1 - x - y) - p.C_S * x


def scanner_payoff_expanded(p: GameParams, x, y):
    # affine in x
    return x * (p.F + p.V * y - p.C_S) + y * (p.F - p.V + p.V * y)


def scanner_expected_raw(p: GameParams, x, y):
    q = p.q
    return q * scanner_payoff_raw(p, x, y) + (1 - q) * scanner_payoff_raw(p, x, p.a)


def scanner_expected_literal(p: GameParams, x, y):
    # mixture written out term by term, type-2 Invader at width a
    q, a = p.q, p.a
    return (q * (p.F * (x + y) - p.V * y * (1 - x - y))
            + (1 - q) * (p.F * (x + a) - p.V * a * (1 - x - a))
            - p.C_S * x)


def scanner_expected_expanded(p: GameParams, x, y):
    q, a, V, F = p.q, p.a, p.V, p.F
    return ((F - p.C_S + (1 - q) * V * a + V * q * y) * x
            + q * y * (F - V + V * y)
            + (1 - q) * a * (F - V + V * a))


def payoff_invader(p: GameParams, x: float, y: float) -> float:
    _check_domain(p, x, y)
    return invader_payoff_raw(p, x, y)


def payoff_scanner(p: GameParams, x: float, y: float) -> float:
    _check_domain(p, x, y)
    return scanner_payoff_raw(p, x, y)


def payoff_scanner_expected(p: GameParams, x: float, y: float) -> float:
    """Scanner payoff averaged over the Invader's type.

    With probability ``q`` the Invader plays ``y``; otherwise it plays ``a``.
    """
    _check_domain(p, x, y)
    return scanner_expected_raw(p, x, y)


def scanner_payoff_for(regime: str):
    """Vectorized Scanner payoff kernel for ``"known"`` or ``"unknown"``."""
    if regime == "known":
        return scanner_payoff_raw
    if regime == "unknown":
        return scanner_expected_raw
    raise ParameterError(f"unknown regime {regime!r}")


def params_from_mapping(values: dict) -> GameParams:
    missing = [k for k in PARAM_NAMES[:-1] if k not in values]
    if missing:
        raise ParameterError(f"missing parameter(s): {', '.join(missing)}")
    kwargs = {k: float(values[k]) for k in PARAM_NAMES if k in values}
    return validate_params(GameParams(**kwargs))


#: Parameter values used in the numerical illustrations, with c = 0.2.
REFERENCE_PARAMS = GameParams(a=0.01, b=0.3, c=0.2, U=1.0, V=1.0,
                              C_S=0.4, C_I=0.1, F=0.2, q=1.0)
