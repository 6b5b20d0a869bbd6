"""Braid group action on the deformed root lattice.

A weight vector is a tuple of :class:`BiLaurent` coordinates in the basis of
simple roots.  The generators act by

    T_i^{+-1} alpha_j = alpha_j - q^{-+d_i} t^{+-1} C_ij(q,t) alpha_i,

which only ever changes the i-th coordinate.

Sums over reduced words need the vectors ``T_{i_1} ... T_{i_{k-1}} alpha_{i_k}``
for every k.  Rather than re-applying a growing prefix to each simple root,
we keep the prefix operator ``M_k = T_{i_1} ... T_{i_k}`` as a matrix whose
columns are the images of the simple roots, and update it by one right
multiplication per letter.  Column ``i_k`` of ``M_{k-1}`` is the vector
needed at step k.
"""

from __future__ import annotations

from functools import lru_cache

from .cartan import CartanData
from .deform import CTildeTable, DeformedCartan, build_cqt
from .poly import ONE, ZERO, BiLaurent, qint, total
from .weyl import coxeter_m, longest_word, second_longest_word, star

__all__ = [
    "WeightVector",
    "apply_T",
    "apply_T_fund",
    "apply_word",
    "braid_relation_failures",
    "ctilde_braid",
    "ctilde_literal",
    "ctilde_table_braid",
    "dimibd_failures",
    "eqpair_failures",
    "ibar_dim_braid",
    "ibar_matrix_braid",
    "inverse_letter_sums",
    "pair_fund",
    "pairing",
    "prefix_pairings",
    "projective_filtration",
    "quadrant_failures",
    "roots_to_fund",
    "simple_root",
    "verify_tw0",
]

WeightVector = tuple[BiLaurent, ...]


def simple_root(cd: CartanData, j: int) -> WeightVector:
    return tuple(ONE if k == j else ZERO for k in cd.nodes)


def _mult(dc: DeformedCartan, i: int, sign: int) -> BiLaurent:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return BiLaurent.monomial(-sign * dc.cd.di(i), sign)


def apply_T(dc: DeformedCartan, i: int, sign: int, w: WeightVector) -> WeightVector:
    """T_i^{sign} applied to ``w``."""
    m = _mult(dc, i, sign)
    acc = total(dc[i, j] * w[j - 1] for j in dc.cd.nodes if w[j - 1])
    out = list(w)
    out[i - 1] = w[i - 1] - m * acc
    return tuple(out)


def apply_word(dc: DeformedCartan, word, w: WeightVector, sign: int = 1) -> WeightVector:
    """T_{i_1}^{s} ... T_{i_l}^{s} w (the last letter acts first)."""
    for i in reversed(word):
        w = apply_T(dc, i, sign, w)
    return w


def pair_fund(w: WeightVector, i: int) -> BiLaurent:
    """(varpi_i^vee, w): the i-th simple-root coordinate."""
    return w[i - 1]


def prefix_pairings(dc: DeformedCartan, word, sign: int = 1):
    """Yield ``(k, i_k, column)`` where column is T^s_{i_1}...T^s_{i_{k-1}} alpha_{i_k}."""
    for k, a, col, _ in _prefix_run(dc, word, sign):
        yield k, a, col


def _right_multiply(dc: DeformedCartan, cols: list[list[BiLaurent]], a: int, sign: int) -> None:
    # M <- M T_a^s: column b becomes M(alpha_b) - m C_ab M(alpha_a), with the old M(alpha_a)
    old = cols[a - 1]
    m = _mult(dc, a, sign)
    n = dc.cd.n
    for b in dc.cd.nodes:
        cab = dc[a, b]
        if not cab:
            continue
        f = m * cab
        cb = cols[b - 1] if b != a else old
        cols[b - 1] = [cb[x] - f * old[x] for x in range(n)]


def _prefix_run(dc: DeformedCartan, word, sign: int):
    cols = [list(simple_root(dc.cd, b)) for b in dc.cd.nodes]
    for k, a in enumerate(word, start=1):
        yield k, a, tuple(cols[a - 1]), cols
        _right_multiply(dc, cols, a, sign)


def final_operator(dc: DeformedCartan, word, sign: int = 1) -> list[WeightVector]:
    """Columns of T^s_{i_1} ... T^s_{i_l}, i.e. the images of the simple roots."""
    cols = [list(simple_root(dc.cd, b)) for b in dc.cd.nodes]
    for a in word:
        _right_multiply(dc, cols, a, sign)
    return [tuple(c) for c in cols]


def verify_tw0(dc: DeformedCartan, word) -> list[int]:
    """Nodes j where T_{w0} alpha_j differs from -q^{-rh^vee} t^h alpha_{j*}."""
    cd = dc.cd
    nu = star(cd)
    scal = BiLaurent.monomial(-cd.rhv, cd.h, -1)
    cols = final_operator(dc, word, 1)
    bad = []
    for j in cd.nodes:
        want = tuple(scal if k == nu[j] else ZERO for k in cd.nodes)
        if cols[j - 1] != want:
            bad.append(j)
    return bad


def _letter_sums(dc: DeformedCartan, word, sign: int) -> dict[tuple[int, int], BiLaurent]:
    cd = dc.cd
    acc: dict[tuple[int, int], list[BiLaurent]] = {(i, j): [] for i in cd.nodes for j in cd.nodes}
    for _, a, col in prefix_pairings(dc, word, sign):
        for i in cd.nodes:
            if col[i - 1]:
                acc[(i, a)].append(col[i - 1])
    return {key: total(v) for key, v in acc.items()}


@lru_cache(maxsize=128)
def ibar_matrix_braid(dc: DeformedCartan, word: tuple[int, ...] | None = None) -> dict[tuple[int, int], BiLaurent]:
    """dim_{q,t} e_i I_j for all (i, j): the bar of the positive-letter sums."""
    if word is None:
        word = longest_word(dc.cd)
    return {key: p.bar() for key, p in _letter_sums(dc, tuple(word), 1).items()}


def ibar_dim_braid(dc: DeformedCartan, word, i: int, j: int) -> BiLaurent:
    return ibar_matrix_braid(dc, tuple(word))[(i, j)]


@lru_cache(maxsize=128)
def inverse_letter_sums(dc: DeformedCartan, word: tuple[int, ...]) -> dict[tuple[int, int], BiLaurent]:
    """sum over k with i_k = j of (varpi_i^vee, T^{-1}_{i_1}...T^{-1}_{i_{k-1}} alpha_j)."""
    return _letter_sums(dc, word, -1)


def ctilde_braid(dc: DeformedCartan, word, i: int, j: int, order: int) -> BiLaurent:
    """C~_ij(q,t) through q-order ``order`` from a reduced w0 word.

    The word is continued periodically with i_{k+l} = i_k^*; since
    T^{-1}_{i_1}...T^{-1}_{i_l} = T_{w0}^{-1} acts as -q^{rh^vee} t^{-h} nu,
    period m contributes Y^m times the first-period sum for the node nu^m(j).
    """
    cd = dc.cd
    sums = inverse_letter_sums(dc, tuple(word))
    nu = star(cd)
    lead = BiLaurent.monomial(cd.di(j), -1)
    step = BiLaurent.monomial(cd.rhv, -cd.h, -1)
    out = ZERO
    scale = lead
    jj = j
    # period m only has q-degrees >= m * rh^vee + d_i
    for _ in range(order // cd.rhv + 1):
        out = out + (scale * sums[(i, jj)]).truncate_q(order)
        scale = scale * step
        jj = nu[jj]
    return out


def ctilde_table_braid(dc: DeformedCartan, order: int, word=None) -> CTildeTable:
    cd = dc.cd
    if word is None:
        word = longest_word(cd)
    polys = {(i, j): ctilde_braid(dc, word, i, j, order) for i in cd.nodes for j in cd.nodes}
    return CTildeTable.from_polys(cd, order, polys)


def ctilde_literal(dc: DeformedCartan, word, order: int) -> dict[tuple[int, int], BiLaurent]:
    """C~ from the literally extended infinite word, without the w0 shortcut.

    Every letter of the extended word is applied; the run stops after enough
    periods that all later terms lie beyond ``order``.  Slow, kept as an oracle.
    """
    cd = dc.cd
    nu = star(cd)
    base = tuple(word)
    periods = order // cd.rhv + 2
    ext: list[int] = []
    cur = base
    for _ in range(periods):
        ext.extend(cur)
        cur = tuple(nu[a] for a in cur)
    acc: dict[tuple[int, int], list[BiLaurent]] = {(i, j): [] for i in cd.nodes for j in cd.nodes}
    for _, a, col in prefix_pairings(dc, ext, -1):
        for i in cd.nodes:
            if col[i - 1]:
                acc[(i, a)].append(col[i - 1])
    return {
        (i, j): (BiLaurent.monomial(cd.di(j), -1) * total(v)).truncate_q(order)
        for (i, j), v in acc.items()
    }


def projective_filtration(dc: DeformedCartan, word, i: int) -> list[tuple[int, BiLaurent]]:
    """(i_k, (varpi_i^vee, T_{i_1}...T_{i_{k-1}} alpha_{i_k})) for k = 1..l."""
    return [(a, col[i - 1]) for _, a, col in prefix_pairings(dc, word, 1)]


# -- structural checks ----------------------------------------------------


def braid_relation_failures(dc: DeformedCartan) -> list[tuple[int, int, int]]:
    """(i, j, k) where the two sides of the (i, j) braid relation differ on alpha_k."""
    cd = dc.cd
    bad = []
    for i in cd.nodes:
        for j in cd.nodes:
            if i >= j:
                continue
            m = coxeter_m(cd, i, j)
            lhs = tuple(i if a % 2 == 0 else j for a in range(m))
            rhs = tuple(j if a % 2 == 0 else i for a in range(m))
            for k in cd.nodes:
                v = simple_root(cd, k)
                if apply_word(dc, lhs, v) != apply_word(dc, rhs, v):
                    bad.append((i, j, k))
    return bad


def gram(dc: DeformedCartan) -> dict[tuple[int, int], BiLaurent]:
    """(alpha_i, alpha_j)_{q,t} = [d_i]_q C_ij(q,t)."""
    cd = dc.cd
    return {(i, j): qint(cd.di(i)) * dc[i, j] for i in cd.nodes for j in cd.nodes}


def pairing(dc: DeformedCartan, x: WeightVector, y: WeightVector) -> BiLaurent:
    g = gram(dc)
    cd = dc.cd
    return total(x[a - 1] * y[b - 1] * g[(a, b)] for a in cd.nodes for b in cd.nodes if x[a - 1] and y[b - 1])


def eqpair_failures(dc: DeformedCartan, vectors) -> list[tuple[int, int, int]]:
    """Triples (i, a, b) with (T_i x_a, x_b) != (x_a, T_i x_b)."""
    bad = []
    vectors = list(vectors)
    for i in dc.cd.nodes:
        for a, x in enumerate(vectors):
            for b, y in enumerate(vectors):
                if pairing(dc, apply_T(dc, i, 1, x), y) != pairing(dc, x, apply_T(dc, i, 1, y)):
                    bad.append((i, a, b))
    return bad


def roots_to_fund(dc: DeformedCartan, w: WeightVector) -> WeightVector:
    """Coordinates in the basis varpi_j, using alpha_i = sum_j C_ji varpi_j."""
    cd = dc.cd
    return tuple(total(dc[j, i] * w[i - 1] for i in cd.nodes if w[i - 1]) for j in cd.nodes)


def apply_T_fund(dc: DeformedCartan, i: int, lam: WeightVector) -> WeightVector:
    """T_i on varpi-coordinates: mu_j = lam_j - q^{-d_i} t C_ji lam_i."""
    m = BiLaurent.monomial(-dc.cd.di(i), 1)
    li = lam[i - 1]
    if not li:
        return lam
    return tuple(lam[j - 1] - m * dc[j, i] * li for j in dc.cd.nodes)


def _in_quadrant(p: BiLaurent) -> bool:
    return all(u <= 0 and v >= 0 for (u, v) in p.terms)


def quadrant_failures(dc: DeformedCartan, word) -> list[tuple[int, int]]:
    """(i, k) where T_{i_k}...T_{i_1} varpi_i leaves the Z[q^-1, t] cone.

    The orbit is also cross-checked against the root-basis action converted
    to varpi-coordinates.
    """
    cd = dc.cd
    bad = []
    for i in cd.nodes:
        lam = tuple(ONE if j == i else ZERO for j in cd.nodes)
        for k, a in enumerate(word, start=1):
            lam = apply_T_fund(dc, a, lam)
            if not all(_in_quadrant(x) for x in lam):
                bad.append((i, k))
    # the varpi-basis formula must agree with the alpha-basis action
    for a in cd.nodes:
        for j in cd.nodes:
            x = simple_root(cd, j)
            if roots_to_fund(dc, apply_T(dc, a, 1, x)) != apply_T_fund(dc, a, roots_to_fund(dc, x)):
                bad.append((-a, j))
    return bad


def dimibd_failures(dc: DeformedCartan, ib: dict[tuple[int, int], BiLaurent]) -> list[tuple[int, int, int, int]]:
    """Monomials of q^{d_j} t^{-1} dim e_i I_j outside the window
    d_i <= a <= rh^vee - d_i, -h+1 <= b <= -1."""
    cd = dc.cd
    bad = []
    for (i, j), p in ib.items():
        for (a, b) in p.shift(cd.di(j), -1).terms:
            if not (cd.di(i) <= a <= cd.rhv - cd.di(i) and -cd.h + 1 <= b <= -1):
                bad.append((i, j, a, b))
    return bad


def two_words(cd: CartanData) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Two reduced w0 words (equal only in rank 1, where w0 has one reduced word)."""
    return longest_word(cd), second_longest_word(cd)


def default_dc(cd: CartanData) -> DeformedCartan:
    return build_cqt(cd)
