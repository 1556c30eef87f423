"""sl(2) generators on polynomial spaces and the tridiagonal coupling operator.

Matrices act on the monomial basis (1, rho, ..., rho^N) of P_N with the
column convention: column k holds the coefficients of the image of rho^k,
so operator composition is plain matrix multiplication.  The top column of
a degree-raising operator leaves P_N and is truncated, which is why the
commutator check only trusts columns k <= N - 2.

Every entry below is an integer or a half-integer, exactly representable
in float64, so all identity checks in this module are exact equalities.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "CommutatorReport",
    "OperatorOnPn",
    "build_T_algebraic",
    "build_T_direct",
    "commutator_check",
    "jminus",
    "jplus",
    "jzero",
]


@dataclass(frozen=True)
class OperatorOnPn:
    """Dense linear operator on P_N in the monomial basis (column convention)."""

    mat: np.ndarray

    def __post_init__(self) -> None:
        m = np.asarray(self.mat)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("operator matrix must be square")
        object.__setattr__(self, "mat", m)

    @property
    def dim(self) -> int:
        return int(self.mat.shape[0])

    def __matmul__(self, other: "OperatorOnPn") -> "OperatorOnPn":
        return OperatorOnPn(self.mat @ other.mat)

    def apply(self, coeffs):
        """Coefficient vector of the image polynomial."""
        c = np.asarray(coeffs)
        if c.shape != (self.dim,):
            raise ValueError("coefficient vector length must equal dim")
        return self.mat @ c


def _validate(n: int, N: int) -> None:
    if n < 0:
        raise ValueError("representation label n must be nonnegative")
    if N < 0:
        raise ValueError("space degree N must be nonnegative")


def jplus(n: int, N: int | None = None) -> OperatorOnPn:
    """Raising generator rho^2 d/drho - n rho on P_N (default N = n).

    rho^k maps to (k - n) rho^(k+1); the image of rho^N is truncated.
    rho^n is annihilated, which is what closes the (n+1)-dimensional
    representation.
    """
    N = n if N is None else N
    _validate(n, N)
    m = np.zeros((N + 1, N + 1), dtype=np.int64)
    for k in range(N):
        m[k + 1, k] = k - n
    return OperatorOnPn(m)


def jzero(n: int, N: int | None = None) -> OperatorOnPn:
    """Grading generator rho d/drho - n/2 on P_N: diagonal k - n/2."""
    N = n if N is None else N
    _validate(n, N)
    return OperatorOnPn(np.diag([k - n / 2.0 for k in range(N + 1)]))


def jminus(N: int) -> OperatorOnPn:
    """Lowering generator d/drho on P_N: rho^k maps to k rho^(k-1)."""
    _validate(0, N)
    m = np.zeros((N + 1, N + 1), dtype=np.int64)
    for k in range(1, N + 1):
        m[k - 1, k] = k
    return OperatorOnPn(m)


@dataclass(frozen=True)
class CommutatorReport:
    """Exact deviations of the sl(2) relations on the trusted columns."""

    n: int
    dim: int
    deviations: dict

    @property
    def max_abs_deviation(self) -> float:
        return max(self.deviations.values())


def commutator_check(n: int, N: int) -> CommutatorReport:
    """Check [J0, J+] = J+, [J0, J-] = -J-, [J+, J-] = -2 J0 on P_N.

    Requires N >= n + 2: a product of two generators raises the degree of
    rho^k by at most two, so columns k <= N - 2 are free of truncation and
    the relations must hold there exactly (entries are dyadic, the float
    arithmetic is exact).
    """
    if N < n + 2:
        raise ValueError("need N >= n + 2 for a truncation-free check")
    jp = jplus(n, N).mat.astype(float)
    j0 = jzero(n, N).mat
    jm = jminus(N).mat.astype(float)
    residues = {
        "[J0,J+] - J+": j0 @ jp - jp @ j0 - jp,
        "[J0,J-] + J-": j0 @ jm - jm @ j0 + jm,
        "[J+,J-] + 2J0": jp @ jm - jm @ jp + 2.0 * j0,
    }
    trusted = slice(0, N - 1)  # columns 0 .. N-2
    devs = {label: float(np.max(np.abs(c[:, trusted]))) for label, c in residues.items()}
    return CommutatorReport(n=n, dim=N + 1, deviations=devs)


def build_T_direct(n: int, s_abs: int, dim: int | None = None) -> OperatorOnPn:
    """Coupling operator by its monomial action:

        T rho^k = (k - n) rho^(k+1) - k (k + 2 |s|) rho^(k-1)

    i.e. tridiagonal with zero diagonal, integer entries.  dim defaults to
    n + 1 (the invariant subspace).  A larger dim exposes the action beyond
    P_n for the particular-integral checks; the top column is truncated as
    usual.
    """
    if s_abs < 0:
        raise ValueError("s_abs must be nonnegative")
    _validate(n, 0)
    d = n + 1 if dim is None else dim
    if d < 1:
        raise ValueError("dim must be positive")
    m = np.zeros((d, d), dtype=np.int64)
    for k in range(d):
        if k + 1 < d:
            m[k + 1, k] = k - n
        if k >= 1:
            m[k - 1, k] = -k * (k + 2 * s_abs)
    return OperatorOnPn(m)


def build_T_algebraic(n: int, s_abs: int, dim: int | None = None) -> OperatorOnPn:
    """Coupling operator assembled from the generators:

        T = -J0_n J- + J+_n - (1 + 2 |s| + n/2) J-

    The composition happens in float64 but every term is dyadic, so the
    result is exact; it is verified to be integer-valued and returned as
    int64.  Entrywise equality with build_T_direct is the dual-route check
    exercised by the test suite and the verify command; it is deliberately
    not asserted here so the two constructions stay independent.
    """
    if s_abs < 0:
        raise ValueError("s_abs must be nonnegative")
    _validate(n, 0)
    d = n + 1 if dim is None else dim
    if d < 1:
        raise ValueError("dim must be positive")
    N = d - 1
    jp = jplus(n, N).mat.astype(float)
    j0 = jzero(n, N).mat
    jm = jminus(N).mat.astype(float)
    m = -j0 @ jm + jp - (1.0 + 2.0 * s_abs + n / 2.0) * jm
    if not np.array_equal(m, np.rint(m)):
        raise AssertionError("algebraic assembly produced non-integer entries")
    return OperatorOnPn(m.astype(np.int64))
