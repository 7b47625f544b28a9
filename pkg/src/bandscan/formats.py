"""Plain-text formats: parameter configs, tiling records, equilibrium records."""

from __future__ import annotations

from .model import PARAM_NAMES, GameParams, ParameterError, validate_params
from .tiling import TilingSolution, build_tilings


class ConfigError(ParameterError):
    pass


def parse_config(text: str, source: str = "<config>") -> GameParams:
    """Parse flat ``key = value`` lines; ``#`` starts a comment.

    ``q`` is optional and defaults to 1.
    """
    values = {}
    lines = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value', got {raw.strip()!r}")
        key, _, val = (s.strip() for s in line.partition("="))
        if key not in PARAM_NAMES:
            raise ConfigError(f"{source}:{lineno}: unknown key {key!r}")
        if key in values:
            raise ConfigError(f"{source}:{lineno}: duplicate key {key!r}")
        try:
            values[key] = float(val)
        except ValueError:
            raise ConfigError(f"{source}:{lineno}: key {key!r}: cannot parse number {val!r}",
                              key) from None
        lines[key] = lineno
    missing = [k for k in PARAM_NAMES if k != "q" and k not in values]
    if missing:
        raise ConfigError(f"{source}: missing key(s): {', '.join(missing)}", missing[0])
    values.setdefault("q", 1.0)
    try:
        return validate_params(GameParams(**values))
    except ParameterError as err:
        where = f"{source}:{lines[err.key]}" if err.key in lines else source
        raise ConfigError(f"{where}: {err}", err.key) from None


def load_config(path) -> GameParams:
    with open(path) as fh:
        return parse_config(fh.read(), source=str(path))


def format_config(p: GameParams) -> str:
    return "".join(f"{k} = {getattr(p, k)!r}\n" for k in PARAM_NAMES)


def format_tiling(sol: TilingSolution) -> str:
    out = ["[tiling]",
           f"x = {sol.x!r}",
           f"y = {sol.y!r}",
           f"M = {sol.M}",
           f"case = {sol.case}",
           f"value = {sol.value!r}",
           f"prob = {sol.prob!r}",
           f"epsilon = {sol.epsilon!r}"]
    for name, bands in (("scanner_bands", sol.scanner_bands),
                        ("invader_bands", sol.invader_bands)):
        out.append(f"[{name}]")
        out.extend(f"{b.start!r} {b.width!r}" for b in bands)
    return "\n".join(out) + "\n"


def parse_tiling(text: str) -> TilingSolution:
    """Read a tiling record back; bands are rebuilt and compared with the record."""
    section = None
    head = {}
    bands = {"scanner_bands": [], "invader_bands": []}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("["):
            section = line.strip("[]")
            continue
        if section == "tiling":
            key, _, val = (s.strip() for s in line.partition("="))
            head[key] = val
        elif section in bands:
            start, width = (float(v) for v in line.split())
            bands[section].append((start, width))
    try:
        x, y = float(head["x"]), float(head["y"])
    except KeyError as err:
        raise ParameterError(f"tiling record lacks {err.args[0]!r}") from None
    sol = build_tilings(x, y)
    for name in bands:
        want = [(b.start, b.width) for b in getattr(sol, name)]
        if bands[name] and bands[name] != want:
            raise ParameterError(f"{name} in record disagree with the tiling for x={x}, y={y}")
    return sol


def format_equilibrium(eq) -> str:
    lines = [
        "[equilibrium]",
        f"regime = {eq.regime_label}",
        f"case = {eq.case_id}",
        f"x = {eq.x:.12g}",
        f"y = {eq.y:.12g}",
        f"T = {eq.T:.12g}",
        f"R = {'undefined' if eq.R is None else format(eq.R, '.12g')}",
        f"v_S = {eq.v_S:.12g}",
        f"v_I = {eq.v_I:.12g}",
        f"p_detect_linear = {eq.p_detect:.12g}",
        f"p_detect_exact = {eq.p_exact:.12g}",
        f"linearization_gap = {eq.p_detect - eq.p_exact:+.12g}",
    ]
    if eq.near_boundary:
        lines.append(f"near_boundary = {', '.join(eq.near_boundary)}")
    return "\n".join(lines) + "\n"


def format_certificate(cert) -> str:
    x, y = cert.candidate
    return "\n".join([
        "[certificate]",
        f"regime = {cert.regime}" + ("" if cert.regime == "known" else f"(q={cert.q:g})"),
        f"candidate = {x:.12g}, {y:.12g}",
        f"grid = {cert.grid.n_x} x {cert.grid.n_y}",
        f"eps_scanner = {cert.eps_scanner:.6e}",
        f"eps_invader = {cert.eps_invader:.6e}",
        f"lipschitz_K = {cert.lipschitz:.6g}",
        f"step_h = {cert.step:.6e}",
        f"tolerance = {cert.tolerance:.6e}",
        f"result = {'PASS' if cert.passed else 'FAIL'}",
        "csv = " + cert.csv_row(),
    ]) + "\n"


def format_saddle_report(rep) -> str:
    lines = [
        "[saddle]",
        f"value = {rep.value!r}",
        f"scanner_min_detection = {rep.scanner_min_detection!r} (invader at {rep.worst_invader_start:.12g})",
        f"invader_max_detection = {rep.invader_max_detection!r} (scanner at {rep.worst_scanner_start:.12g})",
        f"placements = {rep.placements_checked}",
        f"result = {'PASS' if rep.passed else 'FAIL'}",
    ]
    lines += [f"violation = {v}" for v in rep.violations()]
    return "\n".join(lines) + "\n"
