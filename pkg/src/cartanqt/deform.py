"""The (q,t)-deformed Cartan matrix and its inverse as a truncated series.

Writing ``C(q,t) = (id - A) q^{-D} t`` with ``A = id - C(q,t) q^D t^{-1}``,
every entry of ``A`` has q-order at least 1, so

    C~(q,t) = q^D t^{-1} (id + A + A^2 + ...)

converges q-adically.  :func:`invert` computes ``Y = sum_k A^k`` degree by
degree from ``Y = id + A Y``: the q-degree ``m`` block of ``Y`` only needs
blocks of degree below ``m``.  This is the same series, summed in a
different order, and it avoids forming the powers ``A^k``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .cartan import CartanData
from .poly import ONE, ZERO, BiLaurent, qint
from .weyl import star

__all__ = [
    "CTildeTable",
    "DeformedCartan",
    "Violation",
    "build_cqt",
    "check_properties",
    "coeff_q",
    "default_order",
    "invert",
    "product_check",
]


@dataclass(frozen=True, eq=False)
class DeformedCartan:
    cd: CartanData
    entries: tuple[tuple[BiLaurent, ...], ...]

    def __getitem__(self, ij: tuple[int, int]) -> BiLaurent:
        i, j = ij
        return self.entries[i - 1][j - 1]

    def __eq__(self, other):
        if not isinstance(other, DeformedCartan):
            return NotImplemented
        return self.cd == other.cd

    def __hash__(self):
        return hash(("DeformedCartan", self.cd))


@lru_cache(maxsize=None)
def build_cqt(cd: CartanData) -> DeformedCartan:
    rows = []
    for i in cd.nodes:
        row = []
        for j in cd.nodes:
            if i == j:
                di = cd.di(i)
                row.append(BiLaurent({(di, -1): 1, (-di, 1): 1}))
            else:
                row.append(qint(cd.cij(i, j)))
        rows.append(tuple(row))
    return DeformedCartan(cd, tuple(rows))


def default_order(cd: CartanData) -> int:
    """2 r h_dual + 2, or the value of CARTANQT_ORDER when that is set."""
    env = os.environ.get("CARTANQT_ORDER")
    if env:
        return int(env)
    return 2 * cd.rhv + 2


class CTildeTable:
    """Coefficients c~_ij(u, v) for 0 <= u <= order.

    ``data[(i, j)][u]`` is a dict ``{v: c}``; dense in ``u``, sparse in ``v``.
    """

    __slots__ = ("cd", "order", "_data")

    def __init__(self, cd: CartanData, order: int, data: dict[tuple[int, int], list[dict[int, int]]]):
        self.cd = cd
        self.order = order
        self._data = data

    def _row(self, i: int, j: int, u: int) -> dict[int, int]:
        if not 0 <= u <= self.order:
            raise IndexError(f"q-degree {u} outside the table range 0..{self.order}")
        return self._data[(i, j)][u]

    def coeff(self, i: int, j: int, u: int, v: int) -> int:
        return self._row(i, j, u).get(v, 0)

    def coeff_q(self, i: int, j: int, u: int) -> int:
        return sum(self._row(i, j, u).values())

    def t_terms(self, i: int, j: int, u: int) -> dict[int, int]:
        return dict(self._row(i, j, u))

    def entry(self, i: int, j: int) -> BiLaurent:
        """The truncated series C~_ij(q,t) as a polynomial."""
        return BiLaurent({(u, v): c for u, row in enumerate(self._data[(i, j)]) for v, c in row.items()})

    def entry_q(self, i: int, j: int, upto: int | None = None) -> BiLaurent:
        top = self.order if upto is None else upto
        return BiLaurent.from_q({u: self.coeff_q(i, j, u) for u in range(top + 1)})

    def items(self):
        """Nonzero (i, j, u, v, c) in lexicographic order."""
        for (i, j) in sorted(self._data):
            for u, row in enumerate(self._data[(i, j)]):
                for v in sorted(row):
                    yield i, j, u, v, row[v]

    @classmethod
    def from_entries(cls, cd: CartanData, order: int, entries) -> CTildeTable:
        """Inverse of :meth:`items`; ``entries`` yields (i, j, u, v, c)."""
        data = {(i, j): [{} for _ in range(order + 1)] for i in cd.nodes for j in cd.nodes}
        for i, j, u, v, c in entries:
            if c:
                row = data[(i, j)][u]
                row[v] = row.get(v, 0) + c
        return cls(cd, order, data)

    @classmethod
    def from_polys(cls, cd: CartanData, order: int, polys: dict[tuple[int, int], BiLaurent]) -> CTildeTable:
        return cls.from_entries(
            cd, order,
            ((i, j, u, v, c) for (i, j), p in polys.items() for (u, v), c in p.terms.items() if 0 <= u <= order),
        )

    def __eq__(self, other):
        if not isinstance(other, CTildeTable):
            return NotImplemented
        return self.cd == other.cd and self.order == other.order and list(self.items()) == list(other.items())

    __hash__ = None

    def __repr__(self):
        return f"CTildeTable({self.cd.type}, order={self.order})"


def coeff_q(tab: CTildeTable, i: int, j: int, u: int) -> int:
    return tab.coeff_q(i, j, u)


def _a_blocks(dc: DeformedCartan) -> dict[tuple[int, int], list[tuple[int, int, int]]]:
    """Entries of A = id - C q^D t^-1 as lists of (q-degree, t-degree, coeff)."""
    cd = dc.cd
    out = {}
    for i in cd.nodes:
        for j in cd.nodes:
            a = (ONE if i == j else ZERO) - dc[i, j].shift(cd.di(j), -1)
            if a:
                terms = a.sorted_terms()
                assert all(u >= 1 for u, _, _ in terms), (cd, i, j, a)
                out[(i, j)] = terms
    return out


@lru_cache(maxsize=64)
def _invert_cached(cd: CartanData, order: int) -> CTildeTable:
    dc = build_cqt(cd)
    n = cd.n
    a = _a_blocks(dc)
    # y[m][(l, j)] = {v: c}, q-degree m part of Y = sum A^k
    y: list[dict[tuple[int, int], dict[int, int]]] = [{(j, j): {0: 1} for j in cd.nodes}]
    for m in range(1, order + 1):
        block: dict[tuple[int, int], dict[int, int]] = {}
        for (i, l), terms in a.items():
            for du, dv, c in terms:
                if du > m:
                    continue
                prev = y[m - du]
                for j in range(1, n + 1):
                    src = prev.get((l, j))
                    if not src:
                        continue
                    dst = block.setdefault((i, j), {})
                    for v, cv in src.items():
                        key = v + dv
                        dst[key] = dst.get(key, 0) + c * cv
        y.append({k: {v: c for v, c in row.items() if c} for k, row in block.items()})
    # C~ = q^D t^-1 Y: c~_ij(u, v) = [q^{u-d_i} t^{v+1}] Y_ij
    data = {}
    for i in cd.nodes:
        di = cd.di(i)
        for j in cd.nodes:
            rows = []
            for u in range(order + 1):
                m = u - di
                src = y[m].get((i, j), {}) if m >= 0 else {}
                rows.append({v - 1: c for v, c in src.items() if c})
            data[(i, j)] = rows
    return CTildeTable(cd, order, data)


def invert(dc: DeformedCartan | CartanData, order: int | None = None) -> CTildeTable:
    """Truncated inverse of C(q,t), exact for every q-degree 0..order."""
    cd = dc.cd if isinstance(dc, DeformedCartan) else dc
    if order is None:
        order = default_order(cd)
    if order < 0:
        raise ValueError("truncation order must be nonnegative")
    return _invert_cached(cd, order)


def product_check(tab: CTildeTable) -> list[tuple[int, int, BiLaurent]]:
    """Entries where (C~ C)_ij differs from delta_ij below q-order N - max d."""
    cd = tab.cd
    dc = build_cqt(cd)
    bound = tab.order - max(cd.d)
    bad = []
    ct = {(i, j): tab.entry(i, j) for i in cd.nodes for j in cd.nodes}
    for i in cd.nodes:
        for j in cd.nodes:
            acc = ZERO
            for k in cd.nodes:
                acc = acc + ct[(i, k)] * dc[k, j]
            acc = acc.truncate_q(bound)
            if acc != (ONE if i == j else ZERO):
                bad.append((i, j, acc))
    return bad


class Violation(NamedTuple):
    statement: str
    i: int
    j: int
    u: int
    v: int | None


def check_properties(tab: CTildeTable) -> list[Violation]:
    """Every violation of the support, periodicity, positivity, palindrome and
    vanishing statements for c~_ij(u, v) and c~_ij(u) on the table's range."""
    cd = tab.cd
    P, h = cd.rhv, cd.h
    if tab.order < 2 * P:
        raise ValueError(f"order {tab.order} is below 2*r*h_dual = {2 * P}")
    nu = star(cd)
    N = tab.order
    bad: list[Violation] = []
    for i in cd.nodes:
        di = cd.di(i)
        for j in cd.nodes:
            js = nu[j]
            delta = int(i == j)
            # support: only u > d_i and v < -1, apart from the leading term
            for u in range(N + 1):
                for v, c in tab.t_terms(i, j, u).items():
                    if (u, v) == (di, -1):
                        continue
                    if u <= di or v >= -1:
                        bad.append(Violation("support", i, j, u, v))
            if tab.coeff(i, j, di, -1) != delta:
                bad.append(Violation("leading", i, j, di, -1))
            # bigraded quasi-periodicity
            for u in range(N - P + 1):
                vs = set(tab.t_terms(i, j, u)) | {v + h for v in tab.t_terms(i, js, u + P)}
                for v in vs:
                    if v > 0:
                        continue
                    if tab.coeff(i, j, u, v) != -tab.coeff(i, js, u + P, v - h):
                        bad.append(Violation("bigraded periodicity", i, j, u, v))
            # bigraded positivity and palindrome on the window
            for u in range(P + 1):
                for v, c in tab.t_terms(i, j, u).items():
                    if -h <= v <= 0 and c < 0:
                        bad.append(Violation("bigraded positivity", i, j, u, v))
                vs = set(tab.t_terms(i, js, u)) | {-h - v for v in tab.t_terms(i, j, P - u)}
                for v in vs:
                    if -h <= v <= 0 and tab.coeff(i, j, P - u, -h - v) != tab.coeff(i, js, u, v):
                        bad.append(Violation("bigraded palindrome", i, j, u, v))
            # q-versions
            for u in range(N - P + 1):
                if tab.coeff_q(i, j, u + P) != -tab.coeff_q(i, js, u):
                    bad.append(Violation("periodicity", i, j, u, None))
            for u in range(P + 1):
                if tab.coeff_q(i, j, u) < 0:
                    bad.append(Violation("positivity", i, j, u, None))
                if tab.coeff_q(i, j, P - u) != tab.coeff_q(i, js, u):
                    bad.append(Violation("palindrome", i, j, u, None))
            for u in range(N + 1):
                k = round(u / P)
                # the window near k*P is governed by delta_{i, j*^k}
                dk = int(i == (js if k % 2 else j))
                if abs(u - k * P) <= di - dk and tab.coeff_q(i, j, u):
                    bad.append(Violation("vanishing", i, j, u, None))
    return bad
