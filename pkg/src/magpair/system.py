"""Charge-pair input, derived scales, and solvable-case classification.

Two planar charges (e1, m1), (e2, m2) in a uniform perpendicular field B.
The relative motion becomes quasi-exactly solvable in exactly two regimes:

  EqualLarmor  e1/m1 == e2/m2 (equal cyclotron frequencies; the coupling
               charge ec vanishes and the center of mass separates)
  Neutral      e1 + e2 == 0 (the pair at rest, pseudomomentum zero)

Everything downstream keys off this classification.  Neutral is checked
first; a pair satisfying both tolerances within rounding is impossible for
nonzero charges, but the ordering makes the tie deterministic anyway.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

__all__ = [
    "CaseTag",
    "ChargePair",
    "DerivedParams",
    "TOL_REL",
    "classify",
    "derive",
]

#: Relative tolerance for the case classification tests.
TOL_REL = 1e-12


class CaseTag(Enum):
    EQUAL_LARMOR = "EqualLarmor"
    NEUTRAL = "Neutral"
    GENERIC = "Generic"


@dataclass(frozen=True)
class ChargePair:
    """Raw input: two charges, two masses, one field."""

    e1: float
    e2: float
    m1: float
    m2: float
    B: float

    def __post_init__(self) -> None:
        vals = (self.e1, self.e2, self.m1, self.m2, self.B)
        if not all(math.isfinite(v) for v in vals):
            raise ValueError("all parameters must be finite")
        if self.m1 <= 0 or self.m2 <= 0:
            raise ValueError("masses must be positive")
        if self.B <= 0:
            raise ValueError("magnetic field must be positive")
        if self.e1 == 0 and self.e2 == 0:
            raise ValueError("at least one charge must be nonzero")


@dataclass(frozen=True)
class DerivedParams:
    """Derived scales of a charge pair.

    Quantities that only make sense in one solvable case are None outside
    it (Omega_q, omega_q for Neutral; B0 and b exist for both solvable
    cases, None for Generic).  For a neutral pair the particle labels are
    swapped on derivation if needed so that e1 > 0; e1, e2, B echo the
    inputs after that swap.
    """

    e1: float
    e2: float
    B: float
    M: float
    mr: float
    mu1: float
    mu2: float
    q: float
    ec: float
    qw: float
    omega_c: float
    Omega_q: float | None
    omega_q: float | None
    B0: float | None
    b: float | None

    def to_dict(self) -> dict:
        """JSON-ready mapping with the attribute names as keys."""
        fields = ("e1", "e2", "B", "M", "mr", "mu1", "mu2", "q", "ec", "qw",
                  "omega_c", "Omega_q", "omega_q", "B0", "b")
        return {k: getattr(self, k) for k in fields}


def _is_neutral(e1: float, e2: float, tol_rel: float) -> bool:
    return abs(e1 + e2) <= tol_rel * max(abs(e1), abs(e2))


def derive(pair: ChargePair, tol_rel: float = TOL_REL) -> DerivedParams:
    """Compute the derived scales of a charge pair.

    Conventions:
      q  = e1 + e2                    total charge
      ec = e1 mu2 - e2 mu1            coupling charge, = mr (e1/m1 - e2/m2)
      qw = e1 mu2^2 + e2 mu1^2        weighted total charge
      omega_c = q B / M               cyclotron frequency of the pair
      Omega_q = e1 B / (2 mr)         neutral only (e1 > 0 after the swap)
      omega_q = e1 B |mu2 - mu1| / mr neutral only
      B0 = 4 mr M e1^2 e2^2 / q       equal-Larmor characteristic field
      B0 = 4 mr^2 e1^3                neutral characteristic field
      b  = B / B0                     dimensionless field

    The equal-Larmor formulas assume charges of one sign (the usual
    convention takes both positive); a pair of negative charges yields the
    mirrored negative omega_c and B0 and is left to the caller to
    interpret.
    """
    e1, e2, m1, m2, B = pair.e1, pair.e2, pair.m1, pair.m2, pair.B
    if _is_neutral(e1, e2, tol_rel) and e1 < 0:
        e1, e2, m1, m2 = e2, e1, m2, m1

    M = m1 + m2
    mr = m1 * m2 / M
    mu1, mu2 = m1 / M, m2 / M
    q = e1 + e2
    ec = e1 * mu2 - e2 * mu1
    qw = e1 * mu2 ** 2 + e2 * mu1 ** 2
    omega_c = q * B / M

    neutral = _is_neutral(e1, e2, tol_rel)
    equal_larmor = (not neutral) and (
        abs(ec) <= tol_rel * max(abs(e1 * mu2), abs(e2 * mu1)))

    Omega_q: float | None = None
    omega_q: float | None = None
    B0: float | None = None
    b: float | None = None
    if neutral:
        Omega_q = e1 * B / (2.0 * mr)
        omega_q = e1 * B * abs(mu2 - mu1) / mr
        B0 = 4.0 * mr ** 2 * e1 ** 3
        b = B / B0
    elif equal_larmor:
        B0 = 4.0 * mr * M * e1 ** 2 * e2 ** 2 / q
        b = B / B0

    return DerivedParams(e1=e1, e2=e2, B=B, M=M, mr=mr, mu1=mu1, mu2=mu2,
                         q=q, ec=ec, qw=qw, omega_c=omega_c,
                         Omega_q=Omega_q, omega_q=omega_q, B0=B0, b=b)


def classify(dp: DerivedParams, tol_rel: float = TOL_REL) -> CaseTag:
    """Case tag from derived parameters.

    Neutral: |q| small against max(|e1|, |e2|).
    EqualLarmor: |ec| small against max(|e1 mu2|, |e2 mu1|).
    Neutral wins if both tests pass.
    """
    if abs(dp.q) <= tol_rel * max(abs(dp.e1), abs(dp.e2)):
        return CaseTag.NEUTRAL
    if abs(dp.ec) <= tol_rel * max(abs(dp.e1 * dp.mu2), abs(dp.e2 * dp.mu1)):
        return CaseTag.EQUAL_LARMOR
    return CaseTag.GENERIC
