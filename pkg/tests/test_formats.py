import pytest

from bandscan.equilibrium import solve_known_type
from bandscan.formats import (ConfigError, format_config, format_equilibrium,
                              format_tiling, load_config, parse_config, parse_tiling)
from bandscan.model import REFERENCE_PARAMS, ParameterError
from bandscan.tiling import build_tilings

REFERENCE_TEXT = """\
# reference parameter set
a = 0.01
b = 0.3
c = 0.2
U = 1
V = 1
C_S = 0.4
C_I = 0.1
F = 0.2
"""


def test_parse_reference():
    p = parse_config(REFERENCE_TEXT)
    assert p == REFERENCE_PARAMS and p.q == 1.0


def test_round_trip():
    p = REFERENCE_PARAMS.replace(q=0.25, F=0.05)
    assert parse_config(format_config(p)) == p


def test_load_from_file(tmp_path):
    path = tmp_path / "ref.cfg"
    path.write_text(REFERENCE_TEXT)
    assert load_config(path) == REFERENCE_PARAMS


def test_missing_key_named():
    text = REFERENCE_TEXT.replace("b = 0.3\n", "")
    with pytest.raises(ConfigError, match="b") as info:
        parse_config(text)
    assert info.value.key == "b"


def test_invariant_violation_reports_key_and_line():
    text = REFERENCE_TEXT.replace("c = 0.2", "c = 0.6")
    with pytest.raises(ConfigError, match=r"<config>:4") as info:
        parse_config(text)
    assert info.value.key == "c"


def test_bad_number_reports_key_and_line():
    text = REFERENCE_TEXT.replace("F = 0.2", "F = 0.2.1")
    with pytest.raises(ConfigError, match=r"<config>:9: key 'F'"):
        parse_config(text)


@pytest.mark.parametrize("extra, msg", [("W = 1\n", "unknown key"),
                                        ("a = 0.02\n", "duplicate key"),
                                        ("nonsense\n", "expected 'key = value'")])
def test_malformed_lines(extra, msg):
    with pytest.raises(ConfigError, match=msg):
        parse_config(REFERENCE_TEXT + extra)


def test_config_error_is_parameter_error():
    assert issubclass(ConfigError, ParameterError)


@pytest.mark.parametrize("x, y", [(0.3, 0.2), (0.25, 0.05), (0.12, 0.07)])
def test_tiling_round_trip(x, y):
    sol = build_tilings(x, y)
    assert parse_tiling(format_tiling(sol)) == sol


def test_tiling_record_tamper_detected():
    text = format_tiling(build_tilings(0.3, 0.2)).replace("0.2 0.3", "0.25 0.3", 1)
    with pytest.raises(ParameterError, match="scanner_bands"):
        parse_tiling(text)


def test_tiling_record_needs_widths():
    with pytest.raises(ParameterError, match="'y'"):
        parse_tiling("[tiling]\nx = 0.3\n")


def test_equilibrium_record():
    eq = solve_known_type(REFERENCE_PARAMS.replace(F=0.0))
    text = format_equilibrium(eq)
    assert "case = i6" in text and "x = 0.01\n" in text and "y = 0.2\n" in text
    assert "near_boundary" not in text
