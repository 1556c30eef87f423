#!/usr/bin/env python3
"""Walk through the two solvable families of a planar charge pair.

Given charges and masses, the pair lands in one of three regimes: equal
Larmor frequencies (e1/m1 = e2/m2), a neutral composite (q = 0), or the
generic case with no polynomial sector.  For the two solvable regimes the
coupling is quantized: at polynomial degree n only a finite list of
Coulomb couplings lambda admits a degree-n eigenfunction, and each one
pins the magnetic field through b = 1/lambda.
"""

from magpair import CaseTag, ChargePair, classify, derive, secular_spectrum

PAIRS = [
    ("two identical charges", ChargePair(1.0, 1.0, 1.0, 1.0, 1.0)),
    ("electron + positron", ChargePair(1.0, -1.0, 1.0, 1.0, 1.0)),
    ("asymmetric, equal Larmor", ChargePair(2.0, 1.0, 2.0, 1.0, 1.0)),
    ("no special relation", ChargePair(2.0, 2.0, 1.0, 3.0, 1.0)),
]


def describe(label, pair):
    dp = derive(pair)
    case = classify(dp)
    print(f"{label}: q = {dp.q:g}, M = {dp.M:g}, mr = {dp.mr:g}  ->  {case.value}")
    if case is CaseTag.GENERIC:
        print("   no QES sector here (coupling condition cannot be met)\n")
        return
    print(f"   characteristic field B0 = {dp.B0:g}")
    for n in (1, 2, 3):
        for p in secular_spectrum(n, 0, case, dp):
            if not p.physical:
                continue
            B = p.b * dp.B0
            print(f"   n = {n}  j = {p.j}  lambda = {p.lam:.12g}  "
                  f"b = {p.b:.12g}  B = {B:.12g}")
    print()


def main():
    for label, pair in PAIRS:
        describe(label, pair)
    # the two solvable cases quantize to the same dimensionless fields
    el = [p.b for p in secular_spectrum(4, 0, CaseTag.EQUAL_LARMOR) if p.physical]
    nu = [p.b for p in secular_spectrum(4, 0, CaseTag.NEUTRAL) if p.physical]
    print("shared b at n = 4:", el == nu, el)


if __name__ == "__main__":
    main()
