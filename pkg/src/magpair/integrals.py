"""Euler-operator annihilators of P_n and their commutation with T.

With the Euler operator rho d/drho, the degree-(n+1) product

    i_n^(sigma) = prod_{j=0}^{n} (rho d/drho + sigma j),   sigma = +/-1,

is diagonal on monomials: rho^k maps to rho^k prod_j (k + sigma j).  For
sigma = -1 the factor j = k kills every rho^k with k <= n, so P_n is
annihilated and [T(n), i_n] vanishes on P_n; i_n is then a particular
integral with P_n as invariant subspace.  For sigma = +1 the diagonal
never vanishes on P_n.  Both signs are exposed so annihilation_check can
show which convention actually annihilates instead of hardcoding it.

Everything here is exact integer arithmetic; reported maxima of zero mean
identically zero.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .polyops import Polynomial, evaluate
from .qes import EigenPair
from .sl2rep import OperatorOnPn, build_T_direct

__all__ = [
    "AnnihilationReport",
    "AnnihilatorOp",
    "ParticularIntegralReport",
    "annihilation_check",
    "build_annihilator",
    "commutator_particular_check",
    "gauge_rotated_action",
]

_INT64_SAFE = 2 ** 62


@dataclass(frozen=True)
class AnnihilatorOp:
    """Diagonal Euler-product operator i_n^(sigma) on P_(dim-1)."""

    n: int
    sign: int
    op: OperatorOnPn


def _diag_entries(n: int, dim: int, sign: int) -> list[int]:
    out = []
    for k in range(dim):
        e = 1
        for j in range(n + 1):
            e *= k + sign * j
        out.append(e)
    return out


def build_annihilator(n: int, dim: int | None = None, sign: int = -1) -> AnnihilatorOp:
    """Build i_n^(sigma) on P_(dim-1); dim defaults to n + 3 so that the
    action just beyond P_n stays visible for the commutator checks."""
    if n < 0 or int(n) != n:
        raise ValueError("n must be a nonnegative integer")
    if sign not in (-1, 1):
        raise ValueError("sign must be -1 or +1")
    d = n + 3 if dim is None else dim
    if d < 1:
        raise ValueError("dim must be positive")
    entries = _diag_entries(n, d, sign)
    if max(abs(e) for e in entries) >= _INT64_SAFE:
        raise ValueError("diagonal entries overflow int64; reduce n or dim")
    return AnnihilatorOp(n=n, sign=sign,
                         op=OperatorOnPn(np.diag(np.array(entries, dtype=np.int64))))


@dataclass(frozen=True)
class AnnihilationReport:
    """Largest image coefficient of each sign convention over P_n."""

    n: int
    max_abs_minus: int
    max_abs_plus: int

    @property
    def annihilating_sign(self) -> int:
        """The convention that actually kills P_n (0 if neither or both)."""
        if (self.max_abs_minus == 0) == (self.max_abs_plus == 0):
            return 0
        return -1 if self.max_abs_minus == 0 else 1


def annihilation_check(n: int, dim: int | None = None) -> AnnihilationReport:
    """Apply both sign conventions to the monomial basis of P_n.

    The report carries max_k |i_n rho^k| over k <= n for each sign; the
    minus convention must come out exactly zero, the plus one must not.
    """
    d = n + 1 if dim is None else dim
    if d < n + 1:
        raise ValueError("dim must cover P_n")
    minus = _diag_entries(n, n + 1, -1)
    plus = _diag_entries(n, n + 1, +1)
    return AnnihilationReport(n=n,
                              max_abs_minus=max(abs(e) for e in minus),
                              max_abs_plus=max(abs(e) for e in plus))


@dataclass(frozen=True)
class ParticularIntegralReport:
    """Exact size of [T, i_n] columns, on P_n and beyond."""

    n: int
    s_abs: int
    sign: int
    dim: int
    max_abs_on_pn: int       # columns k <= n; 0 means exact commutation
    max_abs_beyond: int      # trusted columns n < k <= dim - 2


def commutator_particular_check(n: int, s: int, dim: int | None = None,
                                sign: int = -1) -> ParticularIntegralReport:
    """Evaluate [T(n, |s|), i_n^(sigma)] in exact integer arithmetic.

    Columns k <= n must vanish for the annihilating convention: that is
    the particular-integral property.  Columns beyond P_n generally do
    not vanish (the invariance is a property of the subspace, not of the
    whole operator), and the trusted range excludes the truncated top
    column k = dim - 1.
    """
    a = abs(int(s))
    d = n + 3 if dim is None else dim
    if d < n + 3:
        raise ValueError("need dim >= n + 3 to see one column beyond P_n")
    t = build_T_direct(n, a, dim=d).mat
    i_op = build_annihilator(n, dim=d, sign=sign).op.mat
    bound = (int(np.max(np.abs(t))) + 1) * (int(np.max(np.abs(i_op))) + 1) * 2
    if bound >= _INT64_SAFE:
        raise ValueError("commutator entries may overflow int64; reduce n")
    c = t @ i_op - i_op @ t
    on_pn = int(np.max(np.abs(c[:, :n + 1])))
    beyond_cols = c[:, n + 1:d - 1]
    beyond = int(np.max(np.abs(beyond_cols))) if beyond_cols.size else 0
    return ParticularIntegralReport(n=n, s_abs=a, sign=sign, dim=d,
                                    max_abs_on_pn=on_pn, max_abs_beyond=beyond)


def gauge_rotated_action(pair: EigenPair, grid, sign: int = -1) -> np.ndarray:
    """Samples of the gauge-dressed annihilator acting on the dressed state.

    The dressed operator is zeta0 i_n zeta0^{-1} with zeta0 =
    exp(-r^2/4) r^|s|, so its action on zeta = zeta0 p is exactly
    zeta0 (i_n p): apply the diagonal i_n to the coefficients, then
    multiply by the sampled gauge factor.  No numerical differentiation
    is involved.  For sign = -1 and an eigenpair polynomial (degree <= n)
    the result is identically zero.
    """
    r = np.asarray(grid, dtype=float)
    n = pair.point.n
    a = abs(pair.point.s)
    coeffs = np.asarray(pair.polynomial.coeffs, dtype=float)
    ann = build_annihilator(n, dim=len(coeffs), sign=sign)
    image = ann.op.mat.astype(float) @ coeffs
    zeta0 = np.exp(-0.25 * r * r) * np.power(r, a)
    return zeta0 * evaluate(Polynomial(tuple(image)), r)
