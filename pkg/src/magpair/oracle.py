"""Finite-difference cross-check of the quantized couplings.

Discretizes the fixed-energy radial problem on [r_min, r_max] without any
reference to the polynomial machinery.  At the oscillator energy
e_n = (n + 1 + |s|)/2 the scaled radial equation

    [-(1/2)(d2/dr2 + (1/r) d/dr - s^2/r^2) + r^2/8 - e_n] zeta
        = -(kappa/2) zeta / r

multiplied by -2r becomes a standard eigenproblem A zeta = kappa zeta with
A tridiagonal:

    sub_i  = r_i/h^2 - 1/(2h)
    diag_i = -2 r_i/h^2 - s^2/r_i - r_i^3/4 + 2 e_n r_i
    sup_i  = r_i/h^2 + 1/(2h)

Regularity at the origin enters through second-order one-sided
extrapolation of u = zeta / r^|s| (analytic there): u_0 = 2 u_1 - u_2,
folded into the first row; Dirichlet closes the far end.  Both
off-diagonals stay positive on admissible grids, so A is diagonally
similar to a symmetric tridiagonal matrix: the spectrum is real and comes
from one symmetric eigensolve.  The top n + 1 eigenvalues are the
polynomial block; everything below belongs to non-polynomial continuations
at the same energy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .qes import EigenPair, SpectralPoint, eigenfunction

__all__ = [
    "ConvergenceError",
    "DEFAULT_NUM_POINTS",
    "MatchReport",
    "MatchRow",
    "MismatchError",
    "OracleResult",
    "OrderReport",
    "RadialGrid",
    "convergence_order",
    "default_grid",
    "fd_kappa_spectrum",
    "oracle_match",
]

DEFAULT_NUM_POINTS = 3001


class ConvergenceError(RuntimeError):
    """Grid refinement moved an eigenvalue by more than 10x the tolerance."""


class MismatchError(RuntimeError):
    """A physical algebraic kappa has no oracle partner within tolerance."""


@dataclass(frozen=True)
class RadialGrid:
    """Uniform grid on [r_min, r_max] with num_points nodes.

    r_min must sit at least three decades below r_max so the one-sided
    regularity closure happens deep inside the r^|s| power-law region.
    """

    r_min: float
    r_max: float
    num_points: int

    def __post_init__(self) -> None:
        if not (0.0 < self.r_min < self.r_max):
            raise ValueError("need 0 < r_min < r_max")
        if self.r_min > 1e-3 * self.r_max:
            raise ValueError("r_min must not exceed 1e-3 * r_max")
        if self.num_points < 16:
            raise ValueError("need at least 16 grid points")

    @property
    def h(self) -> float:
        return (self.r_max - self.r_min) / (self.num_points - 1)

    def nodes(self) -> np.ndarray:
        return np.linspace(self.r_min, self.r_max, self.num_points)

    def refined(self, factor: int = 2) -> "RadialGrid":
        """Same interval with the step divided by an integer factor."""
        return RadialGrid(self.r_min, self.r_max,
                          factor * (self.num_points - 1) + 1)


def _min_r_max(n: int, s: int) -> float:
    # Gaussian turning point of the degree-n states plus margin
    return 2.0 * math.sqrt(2.0 * n + 2.0 * abs(s) + 2.0)


def default_grid(n: int, s: int, num_points: int = DEFAULT_NUM_POINTS) -> RadialGrid:
    """Grid sized for (n, s): r_max = max(2 sqrt(2n + 2|s| + 2), 10),
    r_min four decades below."""
    r_max = max(_min_r_max(n, s), 10.0)
    return RadialGrid(r_min=1e-4 * r_max, r_max=r_max, num_points=num_points)


@dataclass(frozen=True)
class OracleResult:
    """Finite-difference coupling block at fixed (n, s)."""

    n: int
    s: int
    e_n: float
    grid: RadialGrid
    r: np.ndarray           # interior nodes carrying the unknowns
    kappas: np.ndarray      # ascending
    vectors: np.ndarray     # column k belongs to kappas[k]
    node_counts: tuple[int, ...]


def _assemble(n: int, s: int, grid: RadialGrid):
    a = abs(s)
    e_n = 0.5 * (n + 1 + a)
    r = grid.nodes()
    h = grid.h
    ri = r[1:-1]
    sub = ri / h ** 2 - 1.0 / (2.0 * h)
    sup = (ri / h ** 2 + 1.0 / (2.0 * h)).copy()
    diag = (-2.0 * ri / h ** 2 - (a * a) / ri - ri ** 3 / 4.0
            + 2.0 * e_n * ri).copy()
    # fold the regularity closure zeta_0 = alpha zeta_1 + beta zeta_2 into
    # the first interior row (u = zeta / r^a, u_0 = 2 u_1 - u_2)
    alpha = 2.0 * (r[0] / r[1]) ** a
    beta = -((r[0] / r[2]) ** a)
    diag[0] += sub[0] * alpha
    sup[0] += sub[0] * beta
    return e_n, ri, sub, diag, sup


def _count_sign_changes(vec: np.ndarray, rel_floor: float = 1e-8) -> int:
    v = vec[np.abs(vec) > rel_floor * np.max(np.abs(vec))]
    s = np.sign(v)
    return int(np.sum(s[1:] != s[:-1]))


def fd_kappa_spectrum(n: int, s: int, grid: RadialGrid | None = None,
                      num_branches: int | None = None,
                      kappa_window: tuple[float, float] | None = None,
                      convergence_tol: float | None = None) -> OracleResult:
    """Coupling eigenvalues and eigenvectors of the discretized pencil.

    By default returns the num_branches (= n + 1) largest kappa values in
    ascending order, with node counts of the back-transformed vectors.
    kappa_window = (lo, hi) selects all eigenvalues in a window instead.
    With convergence_tol set, the solve is repeated on a half-step grid
    and ConvergenceError is raised when any selected kappa moves by more
    than 10 * convergence_tol (the window variant does not support this).
    """
    if n < 0 or int(n) != n:
        raise ValueError("n must be a nonnegative integer")
    if grid is None:
        grid = default_grid(n, s)
    if grid.r_max < _min_r_max(n, s) - 1e-12:
        raise ValueError(
            f"r_max {grid.r_max} below the admissible minimum {_min_r_max(n, s)}")
    if kappa_window is not None and convergence_tol is not None:
        raise ValueError("convergence check applies to branch-count selection only")

    e_n, ri, sub, diag, sup = _assemble(n, s, grid)
    m = len(ri)
    prod = sub[1:] * sup[:-1]
    if np.any(prod <= 0.0):
        raise RuntimeError("pencil lost symmetrizability on this grid")
    off = np.sqrt(prod)
    scale = np.concatenate(([1.0], np.cumprod(np.sqrt(sub[1:] / sup[:-1]))))

    if kappa_window is not None:
        w, v = eigh_tridiagonal(diag, off, select="v",
                                select_range=kappa_window)
    else:
        nb = n + 1 if num_branches is None else int(num_branches)
        if not (1 <= nb <= m):
            raise ValueError("num_branches outside 1..interior size")
        w, v = eigh_tridiagonal(diag, off, select="i",
                                select_range=(m - nb, m - 1))
    vectors = scale[:, None] * v
    nodes = tuple(_count_sign_changes(vectors[:, k]) for k in range(vectors.shape[1]))
    result = OracleResult(n=n, s=int(s), e_n=e_n, grid=grid, r=ri,
                          kappas=w, vectors=vectors, node_counts=nodes)

    if convergence_tol is not None:
        fine = fd_kappa_spectrum(n, s, grid.refined(), num_branches=num_branches)
        drift = float(np.max(np.abs(result.kappas - fine.kappas)))
        if drift > 10.0 * convergence_tol:
            raise ConvergenceError(
                f"kappa moved by {drift:.3e} under step halving "
                f"(> 10 * {convergence_tol:.1e})")
    return result


@dataclass(frozen=True)
class MatchRow:
    j: int
    kappa_alg: float
    kappa_fd: float
    abs_err: float
    nodes_alg: int
    nodes_fd: int


@dataclass(frozen=True)
class MatchReport:
    n: int
    s: int
    tol: float
    rows: tuple[MatchRow, ...]

    @property
    def max_abs_err(self) -> float:
        return max((r.abs_err for r in self.rows), default=0.0)

    @property
    def nodes_all_match(self) -> bool:
        return all(r.nodes_alg == r.nodes_fd for r in self.rows)


def oracle_match(points, result: OracleResult, tol: float) -> MatchReport:
    """Match the physical algebraic branches against the oracle block.

    points holds SpectralPoint or EigenPair items for the same (n, s);
    only physical branches participate.  Every physical kappa must find a
    distinct oracle partner within tol, else MismatchError.  Node counts
    of both sides ride along in the report.  With no physical branch
    (n = 0) the match is vacuous.
    """
    rows = []
    used: set[int] = set()
    pairs: list[EigenPair] = []
    for item in points:
        if isinstance(item, EigenPair):
            if item.point.physical:
                pairs.append(item)
        elif isinstance(item, SpectralPoint):
            if item.physical:
                pairs.append(eigenfunction(item.n, item.s, item))
        else:
            raise TypeError("points must hold SpectralPoint or EigenPair items")
    for pair in sorted(pairs, key=lambda p: p.point.j):
        pt = pair.point
        if pt.n != result.n or pt.s != result.s:
            raise ValueError("algebraic point belongs to a different (n, s)")
        free = [i for i in range(len(result.kappas)) if i not in used]
        if not free:
            raise MismatchError(f"no oracle eigenvalue left for branch j = {pt.j}")
        i = min(free, key=lambda k: abs(result.kappas[k] - pt.kappa))
        err = abs(float(result.kappas[i]) - pt.kappa)
        if err > tol:
            raise MismatchError(
                f"branch j = {pt.j} (kappa = {pt.kappa:.12g}) has no oracle "
                f"partner within {tol:.1e}; nearest differs by {err:.3e}")
        used.add(i)
        rows.append(MatchRow(j=pt.j, kappa_alg=pt.kappa,
                             kappa_fd=float(result.kappas[i]), abs_err=err,
                             nodes_alg=pair.nodes,
                             nodes_fd=result.node_counts[i]))
    return MatchReport(n=result.n, s=result.s, tol=tol, rows=tuple(rows))


@dataclass(frozen=True)
class OrderReport:
    """Observed convergence order per branch from two step halvings."""

    n: int
    s: int
    orders: tuple[float, ...]     # per branch, ascending kappa; inf = converged
    kappas_finest: np.ndarray

    @property
    def min_order(self) -> float:
        finite = [o for o in self.orders if math.isfinite(o)]
        return min(finite) if finite else math.inf


def convergence_order(n: int, s: int, grid: RadialGrid | None = None) -> OrderReport:
    """Estimate the discretization order from grids with steps h, h/2, h/4.

    order = log2(|kappa_h - kappa_{h/2}| / |kappa_{h/2} - kappa_{h/4}|) per
    branch; branches whose increments are already at rounding level are
    reported as inf.
    """
    if grid is None:
        grid = default_grid(n, s, num_points=801)
    res = [fd_kappa_spectrum(n, s, g)
           for g in (grid, grid.refined(2), grid.refined(4))]
    k0, k1, k2 = (r.kappas for r in res)
    scale = max(1.0, float(np.max(np.abs(k2))))
    orders = []
    for d1, d2 in zip(np.abs(k0 - k1), np.abs(k1 - k2)):
        if d2 <= 1e-13 * scale:
            orders.append(math.inf)
        else:
            orders.append(float(np.log2(d1 / d2)))
    return OrderReport(n=n, s=int(s), orders=tuple(orders), kappas_finest=k2)
