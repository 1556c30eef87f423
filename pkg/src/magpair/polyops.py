"""Polynomial helpers: Horner evaluation, parity, exact positive-root counts.

Coefficients are stored densely by ascending power, coeffs[k] multiplying
rho**k.  Root counting runs a Sturm chain over exact rationals (float64
coefficients convert to Fraction without rounding), so node counts cannot
be corrupted by cancellation near a close pair of roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

__all__ = [
    "DegenerateRootError",
    "Polynomial",
    "ZERO_GUARD",
    "count_positive_roots",
    "evaluate",
    "parity_flip",
]

#: Half-width of the guard band around rho = 0.  A root this close to the
#: origin makes the positive/negative split of the root count ill defined.
ZERO_GUARD = Fraction(1, 10**10)


class DegenerateRootError(ValueError):
    """A root lies inside the guard band around rho = 0."""


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial in rho, ascending powers."""

    coeffs: tuple[float, ...]

    def __post_init__(self) -> None:
        cs = tuple(float(c) for c in self.coeffs)
        if not cs:
            raise ValueError("polynomial needs at least one coefficient")
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self) -> int:
        """Largest k with a nonzero coefficient (0 for the zero polynomial)."""
        for k in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[k] != 0.0:
                return k
        return 0

    def __call__(self, x):
        return evaluate(self, x)


def evaluate(p: Polynomial, x):
    """Horner-scheme value of p at x (scalar or ndarray)."""
    xs = np.asarray(x, dtype=float)
    acc = np.zeros_like(xs)
    for c in reversed(p.coeffs):
        acc = acc * xs + c
    return float(acc) if acc.ndim == 0 else acc


def parity_flip(p: Polynomial) -> Polynomial:
    """Return p(-rho): odd coefficients change sign."""
    return Polynomial(tuple(-c if k & 1 else c for k, c in enumerate(p.coeffs)))


# ---------------------------------------------------------------------------
# exact Sturm machinery (dense lists of Fraction, ascending powers)

def _trim(f: list[Fraction]) -> list[Fraction]:
    out = list(f)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _derivative(f: list[Fraction]) -> list[Fraction]:
    if len(f) == 1:
        return [Fraction(0)]
    return [k * f[k] for k in range(1, len(f))]


def _divmod_exact(a: list[Fraction], b: list[Fraction]):
    """Exact quotient and remainder of dense rational polynomials."""
    b = _trim(b)
    if b == [Fraction(0)]:
        raise ZeroDivisionError("division by the zero polynomial")
    r = _trim(a)
    db = len(b) - 1
    if r == [Fraction(0)] or len(r) - 1 < db:
        return [Fraction(0)], r
    q = [Fraction(0)] * (len(r) - db)
    while r != [Fraction(0)] and len(r) - 1 >= db:
        dr = len(r) - 1
        c = r[dr] / b[db]
        q[dr - db] = c
        for i in range(db + 1):
            r[dr - db + i] -= c * b[i]
        r = _trim(r)  # the lead term cancels exactly over Q
    return q, r


def _gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _trim(a), _trim(b)
    while b != [Fraction(0)]:
        _, r = _divmod_exact(a, b)
        a, b = b, _trim(r)
    return a


def _eval_exact(f: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(f):
        acc = acc * x + c
    return acc


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _sign_at_plus_inf(f: list[Fraction]) -> int:
    return _sign(f[-1])


def _variations(signs) -> int:
    prev, count = 0, 0
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            count += 1
        prev = s
    return count


def _sturm_chain(f: list[Fraction]) -> list[list[Fraction]]:
    """Sturm chain of a square-free polynomial."""
    chain = [f, _trim(_derivative(f))]
    while len(chain[-1]) > 1:
        _, r = _divmod_exact(chain[-2], chain[-1])
        r = _trim(r)
        if r == [Fraction(0)]:
            break
        chain.append([-c for c in r])
    return chain


def count_positive_roots(p: Polynomial) -> int:
    """Number of distinct real roots of p in (0, +inf), counted exactly.

    The coefficients are converted to rationals without rounding, the
    square-free part is extracted, and Sturm's theorem gives the count as
    V(0) - V(+inf).  Raises DegenerateRootError when the square-free part
    has a root within ZERO_GUARD of the origin (including a root exactly
    at 0), where "positive root" stops being meaningful.
    """
    f = _trim([Fraction(c) for c in p.coeffs])
    if f == [Fraction(0)]:
        raise ValueError("the zero polynomial has no root count")
    if f[0] == 0:
        raise DegenerateRootError("root exactly at rho = 0")
    g = _gcd(f, _trim(_derivative(f)))
    sqfree, rem = _divmod_exact(f, g)
    if _trim(rem) != [Fraction(0)]:
        raise AssertionError("square-free reduction left a remainder")
    sqfree = _trim(sqfree)
    chain = _sturm_chain(sqfree)

    lo, hi = -ZERO_GUARD, ZERO_GUARD
    if _eval_exact(sqfree, lo) == 0 or _eval_exact(sqfree, hi) == 0:
        raise DegenerateRootError("root on the guard-band edge near rho = 0")
    v_lo = _variations([_sign(_eval_exact(q, lo)) for q in chain])
    v_hi = _variations([_sign(_eval_exact(q, hi)) for q in chain])
    if v_lo - v_hi:
        raise DegenerateRootError("root within 1e-10 of rho = 0")

    v0 = _variations([_sign(_eval_exact(q, Fraction(0))) for q in chain])
    v_inf = _variations([_sign_at_plus_inf(q) for q in chain])
    return v0 - v_inf
