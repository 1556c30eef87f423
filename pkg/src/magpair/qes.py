"""Quantized couplings and polynomial eigenfunctions on P_n.

At the oscillator energy E = (n + 1 + |s| - s)/2 (units of the cyclotron
frequency) the radial problem restricted to P_n = span(1, rho, ..., rho^n)
turns the Coulomb coupling into the spectral parameter:

    T(n, |s|) p = -kappa p,  T tridiagonal with zero diagonal.

The substitution c_k = d_k w_k with positive scale factors d_k symmetrizes
T, so the whole coupling spectrum comes from one symmetric tridiagonal
eigensolve and is real by construction, symmetric under kappa -> -kappa.

Spectral conventions used everywhere downstream:
  lambda = kappa^2, b = 1/lambda (dimensionless field; undefined at lambda=0)
  physical branches: kappa > 0 for EqualLarmor, kappa < 0 for Neutral
  j = 1, 2, ... ranks physical branches by descending lambda; j = 0 marks
  retained unphysical and zero-coupling branches
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .polyops import Polynomial, count_positive_roots, evaluate
from .sl2rep import build_T_direct
from .system import CaseTag, DerivedParams, classify

__all__ = [
    "EigenPair",
    "IllConditionedError",
    "MAX_DEGREE",
    "NonNormalizableError",
    "RadialSample",
    "SpectralPoint",
    "ZeroCouplingError",
    "assemble_wavefunction",
    "dimensionless_energy",
    "eigenfunction",
    "field_quantization",
    "residual",
    "secular_spectrum",
]

#: Largest polynomial degree the solver accepts by default.
MAX_DEGREE = 64

#: Eigenvector backward error above which a solve is treated as failed.
RESIDUAL_LIMIT = 1e-8


class ZeroCouplingError(ValueError):
    """The lambda = 0 branch has no magnetic field attached (b = 1/lambda)."""


class NonNormalizableError(ValueError):
    """Eigenvector has no rho^0 component, so p(0) = 1 cannot be imposed."""


class IllConditionedError(RuntimeError):
    """Eigenvector residual exceeded RESIDUAL_LIMIT."""


@dataclass(frozen=True)
class SpectralPoint:
    """One root of the secular problem at fixed (n, s)."""

    n: int
    s: int
    j: int
    kappa: float
    lam: float
    b: float | None
    energy: float
    case: CaseTag
    physical: bool

    def to_dict(self) -> dict:
        """JSON-ready mapping; lam is serialized under the key "lambda"."""
        return {
            "n": self.n, "s": self.s, "j": self.j, "lambda": self.lam,
            "kappa": self.kappa, "b": self.b, "energy": self.energy,
            "case": self.case.value, "physical": self.physical,
        }


@dataclass(frozen=True)
class EigenPair:
    """Spectral point with its polynomial, node count, and backward error."""

    point: SpectralPoint
    polynomial: Polynomial
    nodes: int
    residual: float


@dataclass(frozen=True)
class RadialSample:
    """zeta(rho) = exp(-gauss_coefficient rho^2) rho^s_abs p(rho) on a grid."""

    rho: np.ndarray
    zeta: np.ndarray
    s_abs: int
    gauss_coefficient: float
    point: SpectralPoint


def _validate_ns(n: int, s: int, max_degree: int) -> int:
    if int(n) != n or n < 0:
        raise ValueError("n must be a nonnegative integer")
    if n > max_degree:
        raise ValueError(f"n = {n} exceeds the configured maximum {max_degree}")
    if int(s) != s:
        raise ValueError("s must be an integer")
    return abs(int(s))


def _symmetrized(n: int, a: int):
    """Diagonal, off-diagonal, and back-transform scales of the symmetrized T.

    T has sub entries (k - n) and super entries -(k+1)(k+1+2a); their
    products (n-k)(k+1)(k+1+2a) are positive for k < n, so T is similar to
    the symmetric tridiagonal with off entries -sqrt of those products.
    Coefficients recover as c = scale * w.
    """
    k = np.arange(n, dtype=float)
    prod = (n - k) * (k + 1.0) * (k + 1.0 + 2.0 * a)
    off = -np.sqrt(prod)
    ratio = np.sqrt((n - k) / ((k + 1.0) * (k + 1.0 + 2.0 * a)))
    scale = np.concatenate(([1.0], np.cumprod(ratio)))
    return np.zeros(n + 1), off, scale


def dimensionless_energy(n: int, s: int, case: CaseTag,
                         dp: DerivedParams | None = None) -> float:
    """Energy of the branch family at fixed (n, s).

    EqualLarmor: E = (omega_c / 2)(n + 1 + |s| - s); Neutral:
    E = Omega_q (n + 1 + |s|) - omega_q s / 2.  Without derived parameters
    the relevant frequency is set to one and the neutral mass-asymmetry
    shift omega_q (which needs the masses) to zero, giving the energy in
    units of omega_c resp. Omega_q for a mass-symmetric pair.
    """
    a = abs(s)
    if case is CaseTag.EQUAL_LARMOR:
        omega_c = 1.0 if dp is None else dp.omega_c
        return 0.5 * omega_c * (n + 1 + a - s)
    if case is CaseTag.NEUTRAL:
        Omega_q = 1.0 if dp is None else dp.Omega_q
        omega_q = 0.0 if dp is None else dp.omega_q
        if Omega_q is None or omega_q is None:
            raise ValueError("neutral energy needs neutral derived parameters")
        return Omega_q * (n + 1 + a) - 0.5 * omega_q * s
    raise ValueError("no QES energy formula for the generic case")


def secular_spectrum(n: int, s: int, case: CaseTag,
                     dp: DerivedParams | None = None,
                     max_degree: int = MAX_DEGREE) -> list[SpectralPoint]:
    """All n + 1 coupling roots at fixed (n, s), flagged and ranked.

    Points are sorted by descending lambda with ties broken by ascending
    kappa; physical branches (see the module docstring for the sign
    convention per case) get j = 1, 2, ...; unphysical and zero-coupling
    branches are retained with j = 0.  The exact zero mode of even n is
    snapped to kappa = 0.0.  dp, when given, must classify to `case` and
    makes the energies dimensionful.

    Conjugating T by diag((-1)^k) gives exactly -T (the diagonal is zero),
    so the coupling spectrum is symmetric under kappa -> -kappa.  Mirrored
    roots are snapped to exact +/- pairs; the two physical cases therefore
    quantize to bitwise identical fields b.
    """
    a = _validate_ns(n, s, max_degree)
    if case not in (CaseTag.EQUAL_LARMOR, CaseTag.NEUTRAL):
        raise ValueError("QES branches exist only for EqualLarmor and Neutral")
    if dp is not None and classify(dp) is not case:
        raise ValueError("derived parameters do not classify to the requested case")

    d, e, _ = _symmetrized(n, a)
    mu = eigh_tridiagonal(d, e, eigvals_only=True) if n > 0 else np.zeros(1)
    kappas = np.sort(-mu)  # T p = -kappa p
    for i in range((n + 1) // 2):
        m = 0.5 * (kappas[n - i] - kappas[i])
        kappas[i], kappas[n - i] = -m, m
    if n % 2 == 0:
        kappas[n // 2] = 0.0

    snap = 1e-12 * max(1.0, float(np.max(np.abs(kappas))))
    energy = dimensionless_energy(n, s, case, dp)
    raw = []
    for kap in kappas:
        k = 0.0 if abs(kap) <= snap else float(kap)
        raw.append((k * k, k))
    order = sorted(range(len(raw)), key=lambda i: (-raw[i][0], raw[i][1]))

    points: list[SpectralPoint] = []
    j = 0
    for i in order:
        lam, kap = raw[i]
        if case is CaseTag.EQUAL_LARMOR:
            physical = kap > 0.0
        else:
            physical = kap < 0.0
        if physical:
            j += 1
        points.append(SpectralPoint(
            n=n, s=int(s), j=j if physical else 0, kappa=kap, lam=lam,
            b=(1.0 / lam) if lam > 0.0 else None, energy=energy,
            case=case, physical=physical))
    return points


def _coefficient_residual(c: np.ndarray, n: int, a: int, kappa: float) -> float:
    """Backward error max|T c + kappa c| / max|c| against the integer T."""
    t = build_T_direct(n, a, dim=len(c)).mat
    r = t @ c + kappa * c
    return float(np.max(np.abs(r)) / np.max(np.abs(c)))


def eigenfunction(n: int, s: int, point: SpectralPoint) -> EigenPair:
    """Polynomial eigenfunction of a spectral point, normalized to p(0) = 1.

    The eigenvector comes from the symmetric tridiagonal solve and is
    rescaled back to monomial coefficients; its backward error against the
    integer operator is recorded as `residual`.  Raises IllConditionedError
    above RESIDUAL_LIMIT and NonNormalizableError if the rho^0 component
    vanishes.  Node counting is exact and may raise DegenerateRootError.
    """
    a = _validate_ns(n, s, MAX_DEGREE)
    if point.n != n or point.s != s:
        raise ValueError("spectral point belongs to a different (n, s)")
    d, e, scale = _symmetrized(n, a)
    if n > 0:
        mu, w = eigh_tridiagonal(d, e)
    else:
        mu, w = np.zeros(1), np.ones((1, 1))
    i = int(np.argmin(np.abs(mu + point.kappa)))
    if abs(mu[i] + point.kappa) > 1e-8 * max(1.0, float(np.max(np.abs(mu)))):
        raise ValueError("kappa is not a coupling eigenvalue of T(n, |s|)")
    v = scale * w[:, i]
    vmax = float(np.max(np.abs(v)))
    if abs(v[0]) <= 1e-12 * vmax:
        raise NonNormalizableError("eigenvector has no rho^0 component")
    c = v / v[0]
    res = _coefficient_residual(c, n, a, point.kappa)
    if res > RESIDUAL_LIMIT:
        raise IllConditionedError(
            f"eigenvector residual {res:.3e} exceeds {RESIDUAL_LIMIT:.0e}")
    poly = Polynomial(tuple(float(x) for x in c))
    nodes = count_positive_roots(poly)
    return EigenPair(point=point, polynomial=poly, nodes=nodes, residual=res)


def residual(pair: EigenPair, s: int | None = None,
             case: CaseTag | None = None) -> float:
    """Backward error of an eigenpair against the integer operator.

    s and case default to the pair's own; when given they must agree.
    The case changes nothing in the scaled equation (the two solvable
    cases share it) and is accepted for interface symmetry only.
    """
    if s is not None and abs(s) != abs(pair.point.s):
        raise ValueError("s disagrees with the pair")
    if case is not None and case is not pair.point.case:
        raise ValueError("case disagrees with the pair")
    c = np.asarray(pair.polynomial.coeffs)
    return _coefficient_residual(c, pair.point.n, abs(pair.point.s),
                                 pair.point.kappa)


def field_quantization(point: SpectralPoint, dp: DerivedParams) -> tuple[float, float]:
    """Dimensionless b = 1/lambda and dimensionful field B = b * B0.

    The zero-coupling branch has no field attached: lambda = 0 means either
    vanishing Coulomb interaction or the singular B -> 0 limit, so
    ZeroCouplingError is raised.
    """
    if point.lam == 0.0:
        raise ZeroCouplingError("b = 1/lambda is undefined at lambda = 0")
    if classify(dp) is not point.case:
        raise ValueError("derived parameters belong to a different case")
    if dp.B0 is None:
        raise ValueError("no characteristic field for this case")
    b = 1.0 / point.lam
    return b, b * dp.B0


def assemble_wavefunction(pair: EigenPair, grid,
                          dp: DerivedParams | None = None) -> RadialSample:
    """Sample the radial profile zeta = exp(-rho^2/4) rho^|s| p(rho).

    In the scaled radial variable both solvable cases share this profile;
    dp is only used to cross-check the case when provided.  The grid must
    be ascending and nonnegative.
    """
    r = np.asarray(grid, dtype=float)
    if r.ndim != 1 or r.size == 0:
        raise ValueError("grid must be a nonempty 1-D array")
    if np.any(r < 0.0) or (r.size > 1 and np.any(np.diff(r) <= 0.0)):
        raise ValueError("grid must be strictly ascending and nonnegative")
    if dp is not None and classify(dp) is not pair.point.case:
        raise ValueError("derived parameters belong to a different case")
    a = abs(pair.point.s)
    zeta = np.exp(-0.25 * r * r) * np.power(r, a) * evaluate(pair.polynomial, r)
    return RadialSample(rho=r, zeta=zeta, s_abs=a, gauss_coefficient=0.25,
                        point=pair.point)
