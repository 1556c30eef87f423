"""Secular solver: quantized couplings, eigenfunctions, fields, profiles."""

import math

import numpy as np
import pytest

from magpair.polyops import parity_flip
from magpair.qes import (
    MAX_DEGREE,
    SpectralPoint,
    ZeroCouplingError,
    assemble_wavefunction,
    dimensionless_energy,
    eigenfunction,
    field_quantization,
    residual,
    secular_spectrum,
)
from magpair.system import CaseTag, ChargePair, derive

EL = CaseTag.EQUAL_LARMOR
NU = CaseTag.NEUTRAL


def physical(n, s, case=EL):
    return [p for p in secular_spectrum(n, s, case) if p.physical]


# ------------------------------------------------------------ closed kappas

@pytest.mark.parametrize("a", [0, 1, 2, 5])
def test_n1_kappa_closed_form(a):
    pts = secular_spectrum(1, a, EL)
    want = math.sqrt(1.0 + 2.0 * a)
    kappas = sorted(p.kappa for p in pts)
    assert kappas == pytest.approx([-want, want], rel=1e-14)
    assert [p.j for p in pts if p.physical] == [1]


@pytest.mark.parametrize("a", [0, 1, 3])
def test_n2_kappa_closed_form(a):
    pts = secular_spectrum(2, a, EL)
    want = math.sqrt(6.0 + 8.0 * a)
    assert sorted(p.kappa for p in pts) == pytest.approx([-want, 0.0, want],
                                                         rel=1e-14, abs=1e-15)
    zero = [p for p in pts if p.kappa == 0.0]
    assert len(zero) == 1 and zero[0].b is None and not zero[0].physical


def test_recurrence_rebuilds_eigenvector_coefficients():
    # c_{m+1} = [kappa c_m + (m - 1 - n) c_{m-1}] / ((m+1)(m+1+2a)), c_0 = 1
    for n in range(11):
        for s in (0, 1, 3):
            a = s
            for p in secular_spectrum(n, s, EL):
                c = eigenfunction(n, s, p).polynomial.coeffs
                want = [1.0, p.kappa / (1.0 + 2.0 * a)][:n + 1]
                for m in range(1, n):
                    want.append((p.kappa * want[m]
                                 + (m - 1 - n) * want[m - 1])
                                / ((m + 1.0) * (m + 1.0 + 2.0 * a)))
                assert np.allclose(c, want, rtol=1e-10, atol=1e-12), (n, s, p.j)


def test_eigenpairs_basic_shape():
    for n in range(9):
        pts = secular_spectrum(n, 1, EL)
        assert len(pts) == n + 1
        js = [p.j for p in pts if p.physical]
        assert js == list(range(1, (n + 1) // 2 + 1))
        lams = [p.lam for p in pts]
        assert lams == sorted(lams, reverse=True)
        for p in pts:
            pair = eigenfunction(n, 1, p)
            assert pair.polynomial.degree == n or n == 0
            assert pair.polynomial.coeffs[0] == 1.0
            assert pair.residual <= 1e-12
            assert residual(pair) == pair.residual


def test_spot_values_s0():
    assert physical(1, 0)[0].lam == pytest.approx(1.0, abs=1e-12)
    assert physical(2, 0)[0].lam == pytest.approx(6.0, abs=1e-12)
    lams3 = sorted(p.lam for p in physical(3, 0))
    assert lams3 == pytest.approx([10.0 - math.sqrt(73.0),
                                   10.0 + math.sqrt(73.0)], rel=1e-13)
    lams4 = sorted(p.lam for p in physical(4, 0))
    assert lams4 == pytest.approx([25.0 - 3.0 * math.sqrt(33.0),
                                   25.0 + 3.0 * math.sqrt(33.0)], rel=1e-13)


def test_neutral_branch_is_parity_mirror():
    for n in (1, 4, 7):
        for s in (0, 2):
            el = physical(n, s, EL)
            nu = {p.j: p for p in physical(n, s, NU)}
            for pe in el:
                pn = nu[pe.j]
                assert pn.kappa == -pe.kappa
                assert pn.lam == pe.lam and pn.b == pe.b
                ce = eigenfunction(n, s, pe).polynomial
                cn = eigenfunction(n, s, pn).polynomial
                flip = parity_flip(ce)
                assert np.allclose(flip.coeffs, cn.coeffs, rtol=0, atol=1e-10)


def test_neutral_n1_explicit_polynomial():
    p = physical(1, 0, NU)[0]
    assert p.kappa == pytest.approx(-1.0, abs=1e-14)
    pair = eigenfunction(1, 0, p)
    assert pair.polynomial.coeffs == pytest.approx((1.0, -1.0), abs=1e-14)
    assert pair.nodes == 1  # the neutral mirror has its node at rho = +1


# ------------------------------------------------------------------ energies

def test_energy_independent_of_positive_s():
    for n in range(6):
        e0 = dimensionless_energy(n, 0, EL)
        assert e0 == 0.5 * (n + 1)
        for s in range(6):
            assert dimensionless_energy(n, s, EL) == e0
        assert dimensionless_energy(n, -2, EL) == e0 + 2.0


def test_energy_dimensionful_and_neutral():
    dp = derive(ChargePair(1.0, 1.0, 1.0, 1.0, 1.0))
    assert dimensionless_energy(2, 0, EL, dp) == 1.5  # omega_c = 1 here
    dpn = derive(ChargePair(1.0, -1.0, 1.0, 3.0, 2.0))
    # Omega_q = 4/3, omega_q = 4/3: E = Omega (n+1+|s|) - omega s / 2
    want = (4.0 / 3.0) * 4.0 - (4.0 / 3.0) * 1.0 / 2.0
    assert dimensionless_energy(2, 1, NU, dpn) == pytest.approx(want)
    with pytest.raises(ValueError):
        dimensionless_energy(1, 0, CaseTag.GENERIC)


def test_spectrum_validations():
    with pytest.raises(ValueError):
        secular_spectrum(-1, 0, EL)
    with pytest.raises(ValueError):
        secular_spectrum(MAX_DEGREE + 1, 0, EL)
    with pytest.raises(ValueError):
        secular_spectrum(2, 0, CaseTag.GENERIC)
    dp_neutral = derive(ChargePair(1.0, -1.0, 1.0, 1.0, 1.0))
    with pytest.raises(ValueError):
        secular_spectrum(2, 0, EL, dp_neutral)
    with pytest.raises(ValueError):
        eigenfunction(3, 0, physical(2, 0)[0])
    bogus = SpectralPoint(n=2, s=0, j=1, kappa=17.0, lam=289.0, b=1 / 289.0,
                          energy=1.5, case=EL, physical=True)
    with pytest.raises(ValueError):
        eigenfunction(2, 0, bogus)


# ------------------------------------------------------------ quantization

def test_field_quantization_values():
    dp = derive(ChargePair(1.0, 1.0, 1.0, 1.0, 1.0))
    b, B = field_quantization(physical(2, 0)[0], dp)
    assert b == pytest.approx(1.0 / 6.0, rel=1e-13)
    assert B == pytest.approx(2.0 / 6.0, rel=1e-13)  # B0 = 2 for this pair


def test_field_quantization_zero_branch():
    dp = derive(ChargePair(1.0, 1.0, 1.0, 1.0, 1.0))
    zero = [p for p in secular_spectrum(2, 0, EL) if p.lam == 0.0][0]
    with pytest.raises(ZeroCouplingError):
        field_quantization(zero, dp)
    dpn = derive(ChargePair(1.0, -1.0, 1.0, 1.0, 1.0))
    with pytest.raises(ValueError):
        field_quantization(physical(2, 0)[0], dpn)


def test_point_serialization():
    p = physical(2, 0)[0]
    d = p.to_dict()
    assert d["lambda"] == p.lam and d["case"] == "EqualLarmor"
    assert d["physical"] is True and d["j"] == 1


# ----------------------------------------------------------------- profiles

def test_wavefunction_profile_matches_formula():
    pair = eigenfunction(2, 1, physical(2, 1)[0])
    grid = np.linspace(0.0, 6.0, 13)
    sample = assemble_wavefunction(pair, grid)
    want = (np.exp(-grid ** 2 / 4.0) * grid
            * np.asarray([pair.polynomial(x) for x in grid]))
    assert np.allclose(sample.zeta, want, rtol=1e-14, atol=1e-300)
    assert sample.s_abs == 1 and sample.gauss_coefficient == 0.25
    assert sample.point is pair.point


def test_wavefunction_at_origin_s0():
    pair = eigenfunction(1, 0, physical(1, 0)[0])
    sample = assemble_wavefunction(pair, np.array([0.0, 1.0]))
    assert sample.zeta[0] == 1.0  # p(0) = 1 and the gauge factor is 1


def test_wavefunction_grid_validation():
    pair = eigenfunction(1, 0, physical(1, 0)[0])
    with pytest.raises(ValueError):
        assemble_wavefunction(pair, np.array([1.0, 0.5]))
    with pytest.raises(ValueError):
        assemble_wavefunction(pair, np.array([-1.0, 0.5]))
    with pytest.raises(ValueError):
        assemble_wavefunction(pair, np.zeros((2, 2)))
    dpn = derive(ChargePair(1.0, -1.0, 1.0, 1.0, 1.0))
    with pytest.raises(ValueError):
        assemble_wavefunction(pair, np.array([0.0, 1.0]), dpn)


def test_residual_interface_guards():
    pair = eigenfunction(2, 1, physical(2, 1)[0])
    assert residual(pair, s=-1, case=EL) == pair.residual
    with pytest.raises(ValueError):
        residual(pair, s=2)
    with pytest.raises(ValueError):
        residual(pair, case=NU)


def test_largest_supported_degree_spectrum():
    # exact node counting is impractical at degree 64; only the spectrum
    # itself has to stay cheap and exactly mirrored up there
    pts = secular_spectrum(MAX_DEGREE, 0, EL)
    assert len(pts) == MAX_DEGREE + 1
    kappas = sorted(p.kappa for p in pts)
    for lo, hi in zip(kappas, reversed(kappas)):
        assert lo == -hi
    pair = eigenfunction(16, 0, physical(16, 0)[0])
    assert pair.residual <= 1e-12 and pair.nodes == 0
