import io

import pytest

from bandscan.cli import main
from bandscan.formats import format_config, format_tiling
from bandscan.model import REFERENCE_PARAMS
from bandscan.tiling import build_tilings


@pytest.fixture
def config(tmp_path):
    path = tmp_path / "ref.cfg"
    path.write_text(format_config(REFERENCE_PARAMS))
    return str(path)


def run(argv):
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


def fields(text):
    return dict(line.split(" = ", 1) for line in text.splitlines() if " = " in line)


def test_solve_no_fine(config):
    code, text = run(["solve", "--config", config, "--F", "0"])
    assert code == 0
    f = fields(text)
    assert (f["case"], f["x"], f["y"]) == ("i6", "0.01", "0.2")
    assert f["regime"] == "known"


def test_solve_q_switches_regime(config):
    code, text = run(["solve", "--config", config, "--q", "0.5"])
    assert code == 0 and fields(text)["regime"].startswith("unknown")


def test_simulate_within_three_sigma():
    code, text = run(["simulate", "--x", "0.3", "--y", "0.2", "--trials", "1000000",
                      "--seed", "42"])
    assert code == 0
    f = fields(text)
    assert abs(float(f["estimate"]) - 0.5) <= 3 * float(f["std_error"])
    assert f["seed"] == "42"


def test_simulate_from_tiling_record(tmp_path):
    path = tmp_path / "t.txt"
    path.write_text(format_tiling(build_tilings(0.25, 0.05)))
    code, text = run(["simulate", "--tiling", str(path), "--trials", "10000", "--seed", "1"])
    assert code == 0 and fields(text)["exact"] == "0.25"


def test_simulate_needs_widths():
    assert run(["simulate", "--x", "0.3"])[0] == 1


def test_verify_passes_on_solver_output(config):
    code, text = run(["verify", "--config", config, "--F", "0", "--grid", "501",
                      "--saddle-grid", "2000"])
    assert code == 0
    assert text.count("result = PASS") == 2


def test_verify_perturbed_exits_3(config, capsys):
    code, text = run(["verify", "--config", config, "--F", "0", "--grid", "501",
                      "--x", "0.06", "--y", "0.2"])
    assert code == 3
    assert "result = FAIL" in text
    assert "scanner gains" in capsys.readouterr().err


def test_verify_tiling_only():
    code, text = run(["verify", "--x", "0.3", "--y", "0.21", "--saddle-grid", "1000"])
    assert code == 0 and "[certificate]" not in text


@pytest.mark.parametrize("argv", [[], ["solve"], ["sweep", "--config", "x", "--param", "U",
                                                  "--from", "0", "--to", "1", "--steps", "3"],
                                  ["verify"]])
def test_usage_errors_exit_1(argv):
    # argparse errors exit directly; missing subcommand returns the code
    try:
        code = main(argv, io.StringIO())
    except SystemExit as exc:
        code = exc.code
    assert code == 1


def test_validation_error_exits_2(config, tmp_path, capsys):
    bad = tmp_path / "bad.cfg"
    bad.write_text(format_config(REFERENCE_PARAMS).replace("c = 0.2", "c = 0.6"))
    assert run(["solve", "--config", str(bad)])[0] == 2
    assert "bad.cfg:3: c <= b violated" in capsys.readouterr().err
    assert run(["solve", "--config", str(tmp_path / "missing.cfg")])[0] == 2
    assert run(["solve", "--config", config, "--q", "1.5"])[0] == 2


def test_sweep_csv_byte_identical(config, tmp_path, capsys):
    paths = [tmp_path / "one.csv", tmp_path / "two.csv"]
    for path in paths:
        code, _ = run(["sweep", "--config", config, "--param", "F", "--from", "0",
                       "--to", "0.39", "--steps", "400", "--out", str(path)])
        assert code == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert "# jump in x at F=" in capsys.readouterr().err


def test_sweep_to_stdout(config):
    code, text = run(["sweep", "--config", config, "--param", "q", "--from", "0.1",
                      "--to", "0.9", "--steps", "5"])
    assert code == 0
    assert text.splitlines()[0] == "param,case,x,y,p_lin,p_exact,v_S,v_I,jump"
    assert len(text.splitlines()) == 6
