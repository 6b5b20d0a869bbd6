"""Finite-type Cartan data.

Nodes are labelled ``1..n`` following Kac's tables: A, B, C, F, G are paths
``1 - 2 - ... - n``; in D_n node ``n-2`` carries the fork to ``n-1`` and ``n``;
E_6, E_7, E_8 are the path ``1 - ... - (n-1)`` with node ``n`` attached to
node 3, 4, 5 respectively.

The matrix is built from the minimal symmetrizer ``d`` by
``c_ij = -ceil(d_j / d_i)`` for adjacent ``i, j``, so ``d_i c_ij`` is symmetric
and ``s_i(alpha_j) = alpha_j - c_ij alpha_i``.  With this convention the long
simple roots are the ones with ``d_i = r``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

__all__ = [
    "CartanData",
    "FiniteType",
    "all_types",
    "build",
    "neighbors",
    "parse_type",
]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True, order=True)
class FiniteType:
    family: str
    rank: int

    def __post_init__(self):
        fam = self.family
        if fam in _MIN_RANK:
            ok = self.rank >= _MIN_RANK[fam]
        elif fam in _FIXED_RANKS:
            ok = self.rank in _FIXED_RANKS[fam]
        else:
            raise ValueError(f"unknown Cartan family {fam!r}")
        if not ok:
            raise ValueError(f"type {fam}{self.rank} is not admissible")

    def __str__(self):
        return f"{self.family}{self.rank}"


def parse_type(text: str, rank: int | None = None) -> FiniteType:
    """Read ``"C3"``, ``"C"`` with ``rank=3``, or ``"G"`` (rank forced)."""
    m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)?\s*", text)
    if not m:
        raise ValueError(f"cannot read Cartan type {text!r}")
    fam = m.group(1).upper()
    if m.group(2) is not None:
        r = int(m.group(2))
        if rank is not None and rank != r:
            raise ValueError(f"conflicting ranks in {text!r} and rank={rank}")
    elif rank is not None:
        r = rank
    elif fam in ("F", "G"):
        r = _FIXED_RANKS[fam][0]
    else:
        raise ValueError(f"type {fam} needs a rank")
    return FiniteType(fam, r)


def all_types(max_rank: int = 8) -> list[FiniteType]:
    """Every finite type of rank <= max_rank, one per isomorphism-and-labelling class."""
    out = []
    for fam in "ABCD":
        out += [FiniteType(fam, n) for n in range(_MIN_RANK[fam], max_rank + 1)]
    out += [FiniteType("E", n) for n in (6, 7, 8) if n <= max_rank]
    if max_rank >= 4:
        out.append(FiniteType("F", 4))
    if max_rank >= 2:
        out.append(FiniteType("G", 2))
    return out


def _edges(t: FiniteType) -> list[tuple[int, int]]:
    n = t.rank
    if t.family in "ABCFG":
        return [(i, i + 1) for i in range(1, n)]
    if t.family == "D":
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    branch = {6: 3, 7: 4, 8: 5}[n]
    return [(i, i + 1) for i in range(1, n - 1)] + [(branch, n)]


def _symmetrizer(t: FiniteType) -> tuple[int, ...]:
    n = t.rank
    if t.family == "B":
        return (2,) * (n - 1) + (1,)
    if t.family == "C":
        return (1,) * (n - 1) + (2,)
    if t.family == "F":
        return (2, 2, 1, 1)
    if t.family == "G":
        return (3, 1)
    return (1,) * n


def _coxeter_numbers(t: FiniteType) -> tuple[int, int, int]:
    """(r, h, h_dual) read off the table of basic numerical data."""
    n = t.rank
    return {
        "A": (1, n + 1, n + 1),
        "D": (1, 2 * n - 2, 2 * n - 2),
        "E": (1, {6: 12, 7: 18, 8: 30}.get(n, 0), {6: 12, 7: 18, 8: 30}.get(n, 0)),
        "B": (2, 2 * n, 2 * n - 1),
        "C": (2, 2 * n, n + 1),
        "F": (2, 12, 9),
        "G": (3, 6, 4),
    }[t.family]


@dataclass(frozen=True, eq=False)
class CartanData:
    """Cartan matrix ``c`` with symmetrizer ``d``, lacing number and Coxeter numbers.

    ``c`` and ``b`` are read-only numpy arrays indexed from 0; use
    :meth:`cij` / :meth:`bij` for the 1-based node labels.
    """

    type: FiniteType
    c: np.ndarray = field(repr=False)
    d: tuple[int, ...]
    r: int
    h: int
    hv: int

    @property
    def n(self) -> int:
        return self.type.rank

    @property
    def nodes(self) -> range:
        return range(1, self.n + 1)

    @property
    def b(self) -> np.ndarray:
        out = np.diag(self.d) @ self.c
        out.setflags(write=False)
        return out

    @property
    def rhv(self) -> int:
        """The quasi-period r * h_dual in the q-direction."""
        return self.r * self.hv

    def cij(self, i: int, j: int) -> int:
        return int(self.c[i - 1, j - 1])

    def bij(self, i: int, j: int) -> int:
        return self.d[i - 1] * self.cij(i, j)

    def di(self, i: int) -> int:
        return self.d[i - 1]

    def neighbors(self, i: int) -> list[int]:
        return neighbors(self, i)

    def __eq__(self, other):
        if not isinstance(other, CartanData):
            return NotImplemented
        return self.type == other.type

    def __hash__(self):
        return hash(self.type)

    def __str__(self):
        return str(self.type)


def build(t: FiniteType | str) -> CartanData:
    if isinstance(t, str):
        t = parse_type(t)
    n = t.rank
    d = _symmetrizer(t)
    c = np.zeros((n, n), dtype=np.int64)
    np.fill_diagonal(c, 2)
    for i, j in _edges(t):
        c[i - 1, j - 1] = -math.ceil(d[j - 1] / d[i - 1])
        c[j - 1, i - 1] = -math.ceil(d[i - 1] / d[j - 1])
    c.setflags(write=False)
    r, h, hv = _coxeter_numbers(t)
    cd = CartanData(t, c, d, r, h, hv)
    audit(cd)
    return cd


def audit(cd: CartanData) -> None:
    """Assert the structural invariants of a Cartan datum."""
    c, d, n = cd.c, cd.d, cd.n
    assert all(c[i, i] == 2 for i in range(n))
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            assert c[i, j] in (0, -1, -2, -3), (cd, i, j)
            assert (c[i, j] == 0) == (c[j, i] == 0)
            assert d[i] * c[i, j] == d[j] * c[j, i]
            if c[i, j]:
                assert d[i] * c[i, j] == -max(d[i], d[j])
    assert set(d) <= {1, cd.r}
    assert reduce(math.gcd, d) == 1
    assert all(cd.r % di == 0 for di in d)


def neighbors(cd: CartanData, i: int) -> list[int]:
    if not 1 <= i <= cd.n:
        raise IndexError(f"node {i} out of range 1..{cd.n} for {cd.type}")
    return [j for j in cd.nodes if j != i and cd.cij(i, j) < 0]
