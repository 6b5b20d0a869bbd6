"""Ext^1 polynomials and R-matrix denominator divisors for G2 and F4.

Run: python3 demos/divisors.py
"""

from cartanqt import build
from cartanqt.deform import invert
from cartanqt.invariants import delta, ext1_dim, ext1_raw, is_clubsuit
from cartanqt.rmatrix import KRLabel, divisor_kr, divisor_status, pole_order, verify_evid

g2 = invert(build("G2"))
for k in (1, 2, 3):
    a = b = KRLabel(2, k)
    print(f"G2 V(2)_{k} x V(2)_{k}: {divisor_kr(g2, a, b)}  [{divisor_status(g2.cd, a, b)}]")

# on the exceptional locus the plain formula overcounts by bar(Delta)
f4 = invert(build("F4"))
for i, j in [(3, 3), (3, 4), (4, 4)]:
    raw, e = ext1_raw(f4, i, 1, j, 1), ext1_dim(f4, i, 1, j, 1).value
    print(f"F4 ({i},{j}) club={is_clubsuit(f4.cd, i, 1, j, 1)} ext1 = {e}")
    print(f"   raw - ext1 = {raw - e} = bar(Delta) = {delta(f4.cd, i, j).bar()}")

# spectral shifts move the divisor; a zero at z = 1 is a pole order
a, b = KRLabel(2, 1, 0), KRLabel(2, 1, 2)
print("G2 shifted divisor:", divisor_kr(g2, a, b), " pole order at 1:", pole_order(g2, a, b))

for name in ("C4", "F4", "G2"):
    n, bad, conj = verify_evid(invert(build(name)))
    print(f"{name}: {n} checks, {len(bad)} mismatches, {len(conj)} conjectural pairs")
