"""Weyl group of a Cartan datum acting on the root lattice.

Root-lattice vectors are integer tuples in the simple-root basis and words
are tuples of 1-based node indices.  A word ``(i_1, ..., i_l)`` stands for the
product ``s_{i_1} s_{i_2} ... s_{i_l}``, so :func:`act` applies ``s_{i_l}``
first.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache

import numpy as np

from .cartan import CartanData

__all__ = [
    "act",
    "coxeter_m",
    "is_w0_word",
    "longest_word",
    "longest_word_ending_at",
    "positive_roots",
    "reduced_words",
    "reflect",
    "second_longest_word",
    "star",
]

RootVec = tuple[int, ...]
Word = tuple[int, ...]


def reflect(cd: CartanData, i: int, v: RootVec) -> RootVec:
    """s_i(v) with s_i(alpha_j) = alpha_j - c_ij alpha_i."""
    out = list(v)
    out[i - 1] -= sum(cd.cij(i, j) * v[j - 1] for j in cd.nodes)
    return tuple(out)


def act(cd: CartanData, word: Word, v: RootVec) -> RootVec:
    for i in reversed(word):
        v = reflect(cd, i, v)
    return v


def simple(cd: CartanData, i: int) -> RootVec:
    return tuple(int(j == i) for j in cd.nodes)


@lru_cache(maxsize=None)
def positive_roots(cd: CartanData) -> frozenset[RootVec]:
    """Orbit closure of the simple roots, keeping the nonnegative vectors."""
    seen = {simple(cd, i) for i in cd.nodes}
    todo = deque(seen)
    while todo:
        v = todo.popleft()
        for i in cd.nodes:
            w = reflect(cd, i, v)
            if w not in seen and all(x >= 0 for x in w):
                seen.add(w)
                todo.append(w)
    return frozenset(seen)


def _descent(cd: CartanData, first: int | None, prefer_high: bool) -> list[int]:
    # greedy walk from rho (fundamental coordinates all 1) to -rho
    lam = np.ones(cd.n, dtype=np.int64)
    c = cd.c
    out = []
    order = list(range(cd.n - 1, -1, -1)) if prefer_high else list(range(cd.n))
    if first is not None:
        k = first - 1
        lam = lam - lam[k] * c[:, k]
        out.append(first)
    while True:
        for k in order:
            if lam[k] > 0:
                break
        else:
            break
        lam = lam - lam[k] * c[:, k]
        out.append(k + 1)
    n_pos = len(positive_roots(cd))
    assert len(out) == n_pos, (cd, out)
    return out


@lru_cache(maxsize=None)
def longest_word(cd: CartanData) -> Word:
    """Reduced word for w0 by greedy descent with smallest-index tie-break.

    Each step lowers a positive fundamental coordinate, so every step adds
    one to the length and the walk ends at -rho after exactly |Phi+| steps.
    The recorded sequence multiplies to w0^{-1} = w0.
    """
    return tuple(_descent(cd, None, False))


@lru_cache(maxsize=None)
def second_longest_word(cd: CartanData) -> Word:
    """Another reduced w0 word: same descent, largest-index tie-break."""
    return tuple(_descent(cd, None, True))


@lru_cache(maxsize=None)
def longest_word_ending_at(cd: CartanData, j: int) -> Word:
    """Reduced w0 word whose last letter is ``j``.

    The descent is started with ``s_j`` (legal since every coordinate of rho
    is positive); reversing the recorded word keeps it a word for w0.
    """
    if not 1 <= j <= cd.n:
        raise IndexError(f"node {j} out of range for {cd.type}")
    word = tuple(reversed(_descent(cd, j, False)))
    assert word[-1] == j
    assert is_w0_word(cd, word)
    return word


def is_w0_word(cd: CartanData, word: Word) -> bool:
    """True when ``word`` has length |Phi+| and sends every alpha_i to a negative root."""
    if len(word) != len(positive_roots(cd)):
        return False
    for i in cd.nodes:
        v = act(cd, word, simple(cd, i))
        if not all(x <= 0 for x in v):
            return False
    return True


@lru_cache(maxsize=None)
def star(cd: CartanData) -> dict[int, int]:
    """The involution i -> i* defined by w0(alpha_i) = -alpha_{i*}."""
    w0 = longest_word(cd)
    out = {}
    for i in cd.nodes:
        v = act(cd, w0, simple(cd, i))
        nz = [k for k, x in enumerate(v, start=1) if x]
        assert len(nz) == 1 and v[nz[0] - 1] == -1, (cd, i, v)
        out[i] = nz[0]
    return out


def coxeter_m(cd: CartanData, i: int, j: int) -> int:
    """Order of s_i s_j: 1, 2, 3, 4 or 6."""
    if i == j:
        return 1
    return {0: 2, 1: 3, 2: 4, 3: 6}[cd.cij(i, j) * cd.cij(j, i)]


def reduced_words(cd: CartanData, word: Word, limit: int = 100_000) -> set[Word]:
    """All words reachable from ``word`` by braid moves (Matsumoto), by BFS.

    Only practical for small rank; ``limit`` guards runaway searches.
    """
    word = tuple(word)
    seen = {word}
    todo = deque([word])
    pairs = [(i, j) for i in cd.nodes for j in cd.nodes if i != j]
    while todo:
        w = todo.popleft()
        for i, j in pairs:
            m = coxeter_m(cd, i, j)
            lhs = tuple(i if a % 2 == 0 else j for a in range(m))
            rhs = tuple(j if a % 2 == 0 else i for a in range(m))
            for pos in range(len(w) - m + 1):
                if w[pos:pos + m] == lhs:
                    nw = w[:pos] + rhs + w[pos + m:]
                    if nw not in seen:
                        if len(seen) >= limit:
                            raise RuntimeError("reduced word search exceeded limit")
                        seen.add(nw)
                        todo.append(nw)
    return seen
