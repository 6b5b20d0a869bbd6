"""C2 from the Cartan matrix to the inverse C~(q, t).

Run: python3 demos/c2_walkthrough.py
"""

from cartanqt import build
from cartanqt.deform import build_cqt, check_properties, invert
from cartanqt.weyl import longest_word, star

cd = build("C2")
print("Cartan matrix", cd.c.tolist(), "symmetrizer", cd.d)
print("r h^vee =", cd.rhv, " h =", cd.h, " star =", star(cd), " w0 =", longest_word(cd))

dc = build_cqt(cd)
for i in cd.nodes:
    print("  C(q,t) row", i, [str(dc[i, j]) for j in cd.nodes])

tab = invert(cd, 18)
for i in cd.nodes:
    for j in cd.nodes:
        print(f"C~[{i},{j}] = {tab.entry(i, j)}")

# the entries are periodic up to sign with period r h^vee = 6 in q and h = 4 in t
print("c~_11(u) at t = 1, u = 0..18:", [tab.coeff_q(1, 1, u) for u in range(19)])
print("property violations:", check_properties(tab))
