"""Band-placement game at fixed widths: uniform tiling strategies.

For widths ``x`` (Scanner) and ``y`` (Invader) both players randomize
uniformly over evenly spaced bands. The Scanner's bands leave gaps no wider
than ``y`` so any Invader band touches one of them; the Invader's bands are
spaced more than ``x`` apart so any Scanner band touches at most one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import Band, ParameterError

COMPACT = "compact"
LOOSE = "loose"

# ties of the compact/loose selector within this distance go to "compact"
TIE_TOL = 1e-12


@dataclass(frozen=True)
class TilingSolution:
    x: float
    y: float
    scanner_bands: tuple
    invader_bands: tuple
    prob: float
    M: int
    case: str
    value: float
    epsilon: float

    @property
    def n_scanner(self) -> int:
        return len(self.scanner_bands)

    @property
    def n_invader(self) -> int:
        return len(self.invader_bands)

    def scanner_arrays(self):
        return _arrays(self.scanner_bands)

    def invader_arrays(self):
        return _arrays(self.invader_bands)


def _arrays(bands):
    starts = np.array([b.start for b in bands])
    ends = np.array([b.end for b in bands])
    return starts, ends


def _check_widths(x, y):
    if not (0 < x < 1 and 0 < y < 1):
        raise ParameterError(f"widths must lie in (0, 1), got x={x}, y={y}")
    if x + y > 1 + TIE_TOL:
        raise ParameterError(f"x + y must not exceed 1, got {x + y}")


def tile_count(x: float, y: float) -> int:
    """Number of whole ``x + y`` tiles that fit in the unit band."""
    s = x + y
    M = math.floor(1 / s)
    # guard against 1/s landing just below an integer
    if (M + 1) * s <= 1 + TIE_TOL:
        M += 1
    return max(M, 1)


def tiling_case(x: float, y: float, M: int | None = None) -> str:
    if M is None:
        M = tile_count(x, y)
    return COMPACT if 1 - (x + y) * M <= y + TIE_TOL else LOOSE


def detection_probability_exact(x: float, y: float) -> float:
    """Value of the band-placement game: 1/M (compact) or 1/(M + 1) (loose)."""
    _check_widths(x, y)
    M = tile_count(x, y)
    return 1.0 / M if tiling_case(x, y, M) == COMPACT else 1.0 / (M + 1)


def _band(start, width):
    # keep the band inside [0, 1] despite rounding in k * (x + y)
    start = min(max(start, 0.0), 1.0 - width)
    return Band(start, width)


def _scanner_chain(x, y, M):
    # Bands [k(x+y) - x, k(x+y)], k = 1..M. Each start is taken as the
    # previous end plus y so that, under monotone rounding, an Invader band
    # placed flush in a gap still touches its neighbours.
    bands = []
    start = y
    for _ in range(M):
        band = _band(start, x)
        bands.append(band)
        start = band.end + y
    return bands


def build_tilings(x: float, y: float) -> TilingSolution:
    _check_widths(x, y)
    s = x + y
    M = tile_count(x, y)
    case = tiling_case(x, y, M)
    scanner = _scanner_chain(x, y, M)
    if case == COMPACT:
        eps = x / M / 2
        # k-th band starts eps*(M+1-k) left of k*s - y, spacing s + eps
        invader = [_band(k * s - y - eps * (M + 1 - k), y) for k in range(1, M + 1)]
        n = M
    else:
        scanner.append(_band(1 - x, x))
        if M == 1:
            eps = 0.0
        else:
            eps = (1 - y - M * s) / (M - 1) / 2
        invader = [_band((k - 1) * (s + eps), y) for k in range(1, M + 1)]
        invader.append(_band(1 - y, y))
        n = M + 1
    scanner.sort(key=lambda b: b.start)
    invader.sort(key=lambda b: b.start)
    return TilingSolution(x=x, y=y, scanner_bands=tuple(scanner),
                          invader_bands=tuple(invader), prob=1.0 / n, M=M,
                          case=case, value=1.0 / n, epsilon=eps)


def check_tiling(sol: TilingSolution, gap_tol: float = 1e-12) -> list:
    """Return a list of violated invariants (empty when the tiling is sound)."""
    problems = []
    n = sol.M if sol.case == COMPACT else sol.M + 1
    if sol.n_scanner != n:
        problems.append(f"expected {n} scanner bands, got {sol.n_scanner}")
    if sol.n_invader != n:
        problems.append(f"expected {n} invader bands, got {sol.n_invader}")
    if sol.prob * sol.n_scanner != 1.0 or sol.prob * sol.n_invader != 1.0:
        problems.append("prob times band count is not 1")
    for who, bands, width in (("scanner", sol.scanner_bands, sol.x),
                              ("invader", sol.invader_bands, sol.y)):
        for band in bands:
            if band.start < 0 or band.end > 1:
                problems.append(f"{who} band {band} escapes [0, 1]")
            if band.width != width:
                problems.append(f"{who} band {band} has width != {width}")
    starts, ends = sol.scanner_arrays()
    # uncovered stretches, including both edges of [0, 1]
    reach = np.maximum.accumulate(ends)
    gaps = np.concatenate([[starts[0]], starts[1:] - reach[:-1], [1 - reach[-1]]])
    if gaps.max() > sol.y + gap_tol:
        problems.append(f"scanner gap {gaps.max()} exceeds y={sol.y}")
    starts, ends = sol.invader_arrays()
    if len(starts) > 1:
        igaps = starts[1:] - ends[:-1]
        if igaps.min() <= sol.x:
            problems.append(f"invader gap {igaps.min()} does not exceed x={sol.x}")
    expected = detection_probability_exact(sol.x, sol.y)
    if sol.value != expected:
        problems.append(f"value {sol.value} != exact {expected}")
    return problems


def bands_intersect(s: Band, i: Band) -> bool:
    return s.start <= i.end and i.start <= s.end


def hit_matrix(sol: TilingSolution) -> np.ndarray:
    """Boolean matrix: scanner band k intersects invader band l."""
    ss, se = sol.scanner_arrays()
    is_, ie = sol.invader_arrays()
    return (ss[:, None] <= ie[None, :]) & (is_[None, :] <= se[:, None])


@dataclass(frozen=True)
class SimulationResult:
    estimate: float
    std_error: float
    trials: int
    seed: int
    exact: float

    @property
    def z_score(self) -> float:
        if self.std_error == 0:
            return 0.0 if self.estimate == self.exact else math.inf
        return (self.estimate - self.exact) / self.std_error


def simulate_detection(sol: TilingSolution, trials: int, seed: int,
                       chunk: int = 1 << 20) -> SimulationResult:
    """Monte-Carlo estimate of the detection probability of the two tilings.

    Each trial draws one Scanner band and one Invader band uniformly and
    independently and records whether they intersect.
    """
    if trials < 1:
        raise ParameterError("trials must be >= 1")
    hits_table = hit_matrix(sol)
    rng = np.random.default_rng(seed)
    hits = 0
    done = 0
    while done < trials:
        n = min(chunk, trials - done)
        k = rng.integers(0, sol.n_scanner, size=n)
        l = rng.integers(0, sol.n_invader, size=n)
        hits += int(np.count_nonzero(hits_table[k, l]))
        done += n
    est = hits / trials
    se = math.sqrt(est * (1 - est) / trials)
    return SimulationResult(estimate=est, std_error=se, trials=trials,
                            seed=seed, exact=sol.value)


def _count_hits(starts, ends, lo, hi):
    """Number of closed intervals [starts, ends] meeting each [lo, hi]."""
    s = np.sort(starts)
    e = np.sort(ends)
    # an interval misses [lo, hi] iff it starts after hi or ends before lo,
    # and the two events are exclusive
    return np.searchsorted(s, hi, side="right") - np.searchsorted(e, lo, side="left")


@dataclass(frozen=True)
class SaddleReport:
    passed: bool
    value: float
    scanner_min_detection: float
    worst_invader_start: float
    invader_max_detection: float
    worst_scanner_start: float
    placements_checked: int

    def violations(self) -> list:
        out = []
        if self.scanner_min_detection < self.value:
            out.append(f"invader at t={self.worst_invader_start} is detected with "
                       f"probability {self.scanner_min_detection} < {self.value}")
        if self.invader_max_detection > self.value:
            out.append(f"scanner at t={self.worst_scanner_start} detects with "
                       f"probability {self.invader_max_detection} > {self.value}")
        return out


def _placements(width, bands_start, bands_end, grid_points, critical):
    t = np.linspace(0.0, 1.0 - width, grid_points)
    if critical:
        # placements that just touch some band from either side
        extra = np.concatenate([bands_end, bands_start - width])
        extra = extra[(extra >= 0) & (extra <= 1 - width)]
        t = np.concatenate([t, extra])
    return t


def verify_saddle_bounds(sol: TilingSolution, grid_points: int,
                         critical: bool = True, touch_tol: float = TIE_TOL) -> SaddleReport:
    """Check both one-sided guarantees of the tiling against pure placements.

    Invader placements scan ``[0, 1 - y]`` and Scanner placements scan
    ``[0, 1 - x]`` on a uniform grid; with ``critical`` the grid is augmented
    by placements touching a band endpoint, where the bounds are tight.

    Tiling bands are widened by ``touch_tol`` on each side. When the widths
    sit exactly on the compact/loose boundary every gap must equal ``y``,
    which rounding cannot always honour; the widening makes the Invader-side
    bound stricter by the same amount.
    """
    if grid_points < 2:
        raise ParameterError("grid_points must be >= 2")
    ss, se = sol.scanner_arrays()
    is_, ie = sol.invader_arrays()
    ss, se = ss - touch_tol, se + touch_tol
    is_, ie = is_ - touch_tol, ie + touch_tol

    t_inv = _placements(sol.y, ss, se, grid_points, critical)
    frac_s = _count_hits(ss, se, t_inv, t_inv + sol.y) / sol.n_scanner
    k = int(np.argmin(frac_s))

    t_scan = _placements(sol.x, is_, ie, grid_points, critical)
    frac_i = _count_hits(is_, ie, t_scan, t_scan + sol.x) / sol.n_invader
    j = int(np.argmax(frac_i))

    lo, hi = float(frac_s[k]), float(frac_i[j])
    return SaddleReport(passed=bool(lo >= sol.value and hi <= sol.value),
                        value=sol.value, scanner_min_detection=lo,
                        worst_invader_start=float(t_inv[k]),
                        invader_max_detection=hi,
                        worst_scanner_start=float(t_scan[j]),
                        placements_checked=len(t_inv) + len(t_scan))
