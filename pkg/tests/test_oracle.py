import numpy as np
import pytest

from bandscan.equilibrium import solve, solve_known_type
from bandscan.model import REFERENCE_PARAMS, ParameterError, invader_payoff_raw
from bandscan.oracle import (GridSpec, certify_equilibrium, find_grid_nash,
                             lipschitz_bound)

from _gen import case_params, random_params_batch

P = REFERENCE_PARAMS


def test_gridspec_validation():
    with pytest.raises(ParameterError):
        GridSpec(1, 5)
    xs, ys = GridSpec(3, 5).axes(P)
    assert xs[0] == P.a and xs[-1] == P.b and ys[-1] == P.c and len(ys) == 5


def test_certifies_closed_form():
    p = P.replace(F=0.0)
    eq = solve_known_type(p)
    cert = certify_equilibrium(p, (eq.x, eq.y), GridSpec(2001, 2001))
    assert cert.passed
    assert cert.eps_scanner <= 1e-9 and cert.eps_invader <= 1e-9
    assert cert.lipschitz == lipschitz_bound(p)


def test_rejects_perturbed_candidate():
    p = P.replace(F=0.0)
    eq = solve_known_type(p)
    cert = certify_equilibrium(p, (eq.x + 0.05, eq.y), GridSpec(2001, 2001))
    assert not cert.passed and cert.eps_scanner > cert.tolerance


def test_degenerate_invader_box():
    p = P.replace(c=P.a)
    eq = solve_known_type(p)
    assert eq.y == p.a
    for x in (p.a, 0.2, p.b):
        assert certify_equilibrium(p, (x, p.a), GridSpec(101, 11)).eps_invader == 0


def test_candidate_outside_box():
    with pytest.raises(ParameterError):
        certify_equilibrium(P, (0.4, 0.1))


def test_lipschitz_bound_dominates_slopes():
    for p in random_params_batch(4, 50):
        ys = np.linspace(p.a, p.c, 101)
        xs = np.linspace(p.a, p.b, 101)
        assert np.all(np.abs(p.F + p.V * ys - p.C_S) <= lipschitz_bound(p))
        X, Y = np.meshgrid(xs, ys)
        assert np.all(np.abs(p.U * (1 - X) - p.F - p.C_I - 2 * p.U * Y) <= lipschitz_bound(p))


@pytest.mark.parametrize("F, want", [(0.0, (0.01, 0.2)), (0.3, (0.3, 0.15))])
def test_grid_nash_reference(F, want):
    p = P.replace(F=F)
    grid = GridSpec(501, 501)
    cells = find_grid_nash(p, grid)
    assert len(cells) == 1
    hx, hy = grid.steps(p)
    assert abs(cells[0][0] - want[0]) <= hx and abs(cells[0][1] - want[1]) <= hy


def test_grid_nash_at_boundary():
    # R = c exactly: a continuum of equilibria (x, c), x in [a, b]
    p = P.replace(F=0.2)
    eq = solve_known_type(p)
    cells = find_grid_nash(p, GridSpec(501, 501))
    assert cells
    hx, hy = GridSpec(501, 501).steps(p)
    assert any(abs(x - eq.x) <= hx and abs(y - eq.y) <= hy for x, y in cells)


def test_grid_argmax_converges_to_apex():
    p = P.replace(c=0.3)
    x = 0.1
    errs = []
    for n in (101, 1001, 10001):
        ys = np.linspace(p.a, p.c, n)
        y_hat = ys[np.argmax(invader_payoff_raw(p, x, ys))]
        errs.append((abs(y_hat - (0.6 / 2)), (p.c - p.a) / (n - 1)))
    for err, h in errs:
        assert err <= h


@pytest.mark.parametrize("case", ["i1", "i2", "i3", "i4", "i5", "i6", "i8", "i9", "i10", "i11"])
def test_unique_cell_per_case(case):
    p = case_params(case)
    eq = solve_known_type(p)
    grid = GridSpec(501, 501)
    cells = find_grid_nash(p, grid)
    hx, hy = grid.steps(p)
    assert len(cells) == 1
    assert abs(cells[0][0] - eq.x) <= hx and abs(cells[0][1] - eq.y) <= hy


def test_interior_indifference_has_no_pure_grid_point():
    # the Scanner's grid replies jump between a and b around y = R, so the
    # discretized game has no pure equilibrium even though the continuous
    # game has one at (T - 2R, R)
    p = case_params("i7")
    assert find_grid_nash(p, GridSpec(501, 501)) == []
    eq = solve_known_type(p)
    assert certify_equilibrium(p, (eq.x, eq.y), GridSpec(501, 501)).passed


def test_soundness_random_batch():
    for regime, unknown in (("known", False), ("unknown", True)):
        for p in random_params_batch(21, 100, unknown=unknown):
            eq = solve(p, regime)
            cert = certify_equilibrium(p, (eq.x, eq.y), GridSpec(501, 501), regime)
            assert cert.passed, (p, eq, cert)


def test_certificate_csv_row():
    cert = certify_equilibrium(P, (0.3, 0.2), GridSpec(11, 11))
    assert cert.csv_row().count(",") == cert.CSV_HEADER.count(",")
