"""Finite-difference oracle: grids, matching, failure modes, order."""

import math

import numpy as np
import pytest

from magpair.oracle import (
    ConvergenceError,
    MismatchError,
    RadialGrid,
    convergence_order,
    default_grid,
    fd_kappa_spectrum,
    oracle_match,
)
from magpair.qes import assemble_wavefunction, eigenfunction, secular_spectrum
from magpair.system import CaseTag

EL = CaseTag.EQUAL_LARMOR


def test_grid_validation():
    with pytest.raises(ValueError):
        RadialGrid(0.0, 10.0, 100)
    with pytest.raises(ValueError):
        RadialGrid(5.0, 5.0, 100)
    with pytest.raises(ValueError):
        RadialGrid(0.1, 10.0, 100)  # r_min above 1e-3 * r_max
    with pytest.raises(ValueError):
        RadialGrid(1e-3, 10.0, 15)
    g = RadialGrid(1e-3, 10.0, 16)
    assert g.h == (10.0 - 1e-3) / 15.0


def test_grid_refinement_keeps_interval():
    g = RadialGrid(1e-3, 10.0, 101)
    f = g.refined(2)
    assert (f.r_min, f.r_max, f.num_points) == (1e-3, 10.0, 201)
    assert f.h == pytest.approx(g.h / 2.0, rel=1e-15)
    assert g.nodes()[0] == 1e-3 and g.nodes()[-1] == 10.0


def test_default_grid_scales_with_state():
    g = default_grid(0, 0)
    assert g.r_max == 10.0 and g.r_min == 1e-3  # turning point below the floor
    g = default_grid(12, 3)
    assert g.r_max == pytest.approx(2.0 * math.sqrt(32.0), rel=1e-15)
    assert g.r_min == pytest.approx(1e-4 * g.r_max, rel=1e-15)


def test_block_matches_algebraic_branches():
    for n, s in ((2, 0), (3, 1)):
        grid = default_grid(n, s, num_points=1501)
        res = fd_kappa_spectrum(n, s, grid)
        assert len(res.kappas) == n + 1
        assert res.e_n == 0.5 * (n + 1 + abs(s))
        report = oracle_match(secular_spectrum(n, s, EL), res, tol=1e-3)
        assert report.max_abs_err <= 1e-3
        assert report.nodes_all_match
        assert [row.j for row in report.rows] == \
            [p.j for p in secular_spectrum(n, s, EL) if p.physical]


def test_match_is_vacuous_without_physical_branches():
    res = fd_kappa_spectrum(0, 0, default_grid(0, 0, 501))
    report = oracle_match(secular_spectrum(0, 0, EL), res, tol=1e-3)
    assert report.rows == ()
    assert report.max_abs_err == 0.0 and report.nodes_all_match


def test_eigenvector_profile_agrees_pointwise():
    n, s = 2, 0
    res = fd_kappa_spectrum(n, s, default_grid(n, s, num_points=1501))
    point = [p for p in secular_spectrum(n, s, EL) if p.physical][0]
    pair = eigenfunction(n, s, point)
    zeta = assemble_wavefunction(pair, res.r).zeta
    vec = res.vectors[:, -1].copy()  # largest kappa column
    i0 = int(np.argmax(np.abs(zeta)))
    vec *= zeta[i0] / vec[i0]
    m = len(zeta)
    inner = slice(m // 4, 3 * m // 4)
    err = np.max(np.abs(vec[inner] - zeta[inner])) / np.max(np.abs(zeta))
    assert err <= 1e-3


def test_mismatch_raised_at_unreachable_tolerance():
    res = fd_kappa_spectrum(2, 0, default_grid(2, 0, num_points=801))
    with pytest.raises(MismatchError):
        oracle_match(secular_spectrum(2, 0, EL), res, tol=1e-12)


def test_convergence_guard_trips_on_any_practical_grid():
    with pytest.raises(ConvergenceError):
        fd_kappa_spectrum(2, 0, default_grid(2, 0, num_points=201),
                          convergence_tol=1e-12)


def test_window_selection():
    res = fd_kappa_spectrum(1, 0, default_grid(1, 0, num_points=1001),
                            kappa_window=(0.5, 1.5))
    assert len(res.kappas) == 1
    assert res.kappas[0] == pytest.approx(1.0, abs=1e-3)
    assert res.node_counts == (0,)


def test_window_excludes_convergence_check():
    with pytest.raises(ValueError):
        fd_kappa_spectrum(1, 0, default_grid(1, 0, 501),
                          kappa_window=(0.5, 1.5), convergence_tol=1e-6)


def test_branch_count_bounds():
    grid = RadialGrid(1e-2, 10.0, 101)
    with pytest.raises(ValueError):
        fd_kappa_spectrum(1, 0, grid, num_branches=0)
    with pytest.raises(ValueError):
        fd_kappa_spectrum(1, 0, grid, num_branches=100)  # interior size is 99
    res = fd_kappa_spectrum(1, 0, grid, num_branches=5)
    assert len(res.kappas) == 5


def test_domain_too_small_is_rejected():
    with pytest.raises(ValueError):
        fd_kappa_spectrum(4, 2, RadialGrid(5e-4, 5.0, 101))


def test_second_order_convergence():
    report = convergence_order(2, 1, default_grid(2, 1, num_points=401))
    assert report.min_order >= 1.8
    assert len(report.orders) == 3
    assert report.kappas_finest[-1] == pytest.approx(math.sqrt(14.0), abs=1e-4)
