"""Reading C~ off a reduced word of w0 with the braid group action.

Run: python3 demos/braid_pipeline.py [TYPE]
"""

import sys

from cartanqt import build
from cartanqt.braid import ctilde_table_braid, ibar_matrix_braid, projective_filtration, verify_tw0
from cartanqt.deform import build_cqt, default_order, invert
from cartanqt.weyl import longest_word, second_longest_word

cd = build(sys.argv[1] if len(sys.argv) > 1 else "B3")
dc = build_cqt(cd)
a, b = longest_word(cd), second_longest_word(cd)
print(f"{cd.type}: two reduced words of w0 of length {len(a)}")
print(" ", a)
print(" ", b)

# T_w0 is a scalar times the star twist
print("T_w0 failures:", verify_tw0(dc, a), verify_tw0(dc, b))

N = default_order(cd)
tab = invert(cd, N)
print("braid table == series table:", ctilde_table_braid(dc, N, a) == tab == ctilde_table_braid(dc, N, b))

ib = ibar_matrix_braid(dc, a)
print("dim e_1 I_1-bar =", ib[(1, 1)])
print("filtration of P_1 (letter, multiplicity):")
for letter, m in projective_filtration(dc, a, 1):
    print(f"  {letter}: {m}")
