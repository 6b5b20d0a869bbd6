"""Sparse bivariate Laurent polynomials in q, t with exact integer coefficients.

A :class:`BiLaurent` is an immutable map ``(u, v) -> c`` standing for
``sum c * q**u * t**v``.  Zero coefficients are never stored, so two values
are equal exactly when their term maps are equal.  Univariate q-polynomials
are the special case where every term has ``v == 0``.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from types import MappingProxyType

__all__ = [
    "BiLaurent",
    "ONE",
    "Q",
    "T",
    "ZERO",
    "add",
    "bar",
    "mul",
    "qint",
    "qint_ratio",
    "spec_t1",
    "total",
]


class BiLaurent:
    """Element of Z[q, 1/q, t, 1/t] stored as ``{(u, v): c}``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        if terms:
            for key, c in terms.items():
                if c:
                    u, v = key
                    clean[(int(u), int(v))] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> BiLaurent:
        # caller guarantees canonical form (no zeros, int keys)
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, u: int = 0, v: int = 0, c: int = 1) -> BiLaurent:
        return cls({(u, v): c})

    @classmethod
    def const(cls, c: int) -> BiLaurent:
        return cls({(0, 0): c})

    @classmethod
    def from_q(cls, coeffs: Mapping[int, int]) -> BiLaurent:
        """Build a t-free polynomial from ``{u: c}``."""
        return cls({(u, 0): c for u, c in coeffs.items()})

    @classmethod
    def coerce(cls, x) -> BiLaurent:
        if isinstance(x, BiLaurent):
            return x
        if isinstance(x, int):
            return cls.const(x)
        raise TypeError(f"cannot interpret {type(x).__name__} as BiLaurent")

    @property
    def terms(self) -> Mapping[tuple[int, int], int]:
        return MappingProxyType(self._terms)

    # -- ring structure ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = BiLaurent.const(other)
        elif not isinstance(other, BiLaurent):
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return BiLaurent._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return BiLaurent._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = BiLaurent.const(other)
        elif not isinstance(other, BiLaurent):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return BiLaurent._raw({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, BiLaurent):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[tuple[int, int], int] = {}
        get = out.get
        for (u2, v2), c2 in b.items():
            for (u1, v1), c1 in a.items():
                key = (u1 + u2, v1 + v2)
                out[key] = get(key, 0) + c1 * c2
        return BiLaurent._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) == 1:
                ((u, v), c), = self._terms.items()
                if c in (1, -1):
                    return BiLaurent._raw({(u * k, v * k): c ** (-k)})
            raise ValueError("negative powers exist only for unit monomials")
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = BiLaurent.const(other)
        if not isinstance(other, BiLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    # -- substitutions and inspection -------------------------------------

    def bar(self) -> BiLaurent:
        """Substitute (q, t) -> (1/q, 1/t)."""
        return BiLaurent._raw({(-u, -v): c for (u, v), c in self._terms.items()})

    def spec_t1(self) -> BiLaurent:
        """Specialize t = 1."""
        out: dict[int, int] = {}
        for (u, _), c in self._terms.items():
            out[u] = out.get(u, 0) + c
        return BiLaurent({(u, 0): c for u, c in out.items()})

    def shift(self, du: int = 0, dv: int = 0) -> BiLaurent:
        """Multiply by the monomial q**du * t**dv."""
        return BiLaurent._raw({(u + du, v + dv): c for (u, v), c in self._terms.items()})

    def truncate_q(self, max_u: int) -> BiLaurent:
        """Drop every term of q-degree above ``max_u``."""
        return BiLaurent._raw({k: c for k, c in self._terms.items() if k[0] <= max_u})

    def coeff(self, u: int, v: int = 0) -> int:
        return self._terms.get((u, v), 0)

    def coeff_q(self, u: int) -> int:
        return sum(c for (uu, _), c in self._terms.items() if uu == u)

    def q_coeffs(self) -> dict[int, int]:
        """``{u: c}`` for a t-free polynomial; raises if t occurs."""
        if any(v for _, v in self._terms):
            raise ValueError(f"{self} is not t-free")
        return {u: c for (u, _), c in self._terms.items()}

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def q_range(self) -> tuple[int, int] | None:
        if not self._terms:
            return None
        us = [u for u, _ in self._terms]
        return min(us), max(us)

    def t_range(self) -> tuple[int, int] | None:
        if not self._terms:
            return None
        vs = [v for _, v in self._terms]
        return min(vs), max(vs)

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        return [(u, v, c) for (u, v), c in sorted(self._terms.items())]

    # -- text form ----------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, (u, v, c) in enumerate(self.sorted_terms()):
            body = f"{abs(c)}*q^{u}*t^{v}"
            if i == 0:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"BiLaurent('{self}')"

    @classmethod
    def parse(cls, text: str) -> BiLaurent:
        """Parse the rendering produced by ``str`` (and looser variants).

        Accepted terms look like ``c*q^u*t^v`` where each of the three
        factors is optional, e.g. ``-q^2``, ``3*t^-1``, ``q*t``, ``7``.
        """
        s = text.replace(" ", "")
        if s in ("", "0"):
            return ZERO
        pos = 0
        out: dict[tuple[int, int], int] = {}
        while pos < len(s):
            m = _TERM_RE.match(s, pos)
            if not m or m.end() == pos or not (m.group("c") or m.group("q") or m.group("t")):
                raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
            if pos > 0 and not m.group("sign"):
                raise ValueError(f"missing sign between terms in {text!r}")
            sign = -1 if m.group("sign") == "-" else 1
            c = int(m.group("c")) if m.group("c") else 1
            u = _exponent(m.group("q"), m.group("qe"))
            v = _exponent(m.group("t"), m.group("te"))
            out[(u, v)] = out.get((u, v), 0) + sign * c
            pos = m.end()
        return cls(out)


_TERM_RE = re.compile(
    r"(?P<sign>[+-])?"
    r"(?P<c>\d+)?"
    r"(?:\*?(?P<q>q)(?:\^\(?(?P<qe>-?\d+)\)?)?)?"
    r"(?:\*?(?P<t>t)(?:\^\(?(?P<te>-?\d+)\)?)?)?"
)


def _exponent(var, exp):
    if not var:
        return 0
    return int(exp) if exp is not None else 1


ZERO = BiLaurent()
ONE = BiLaurent.const(1)
Q = BiLaurent.monomial(1, 0)
T = BiLaurent.monomial(0, 1)


def add(a: BiLaurent, b: BiLaurent) -> BiLaurent:
    return a + b


def mul(a: BiLaurent, b: BiLaurent) -> BiLaurent:
    return a * b


def bar(a: BiLaurent) -> BiLaurent:
    return a.bar()


def spec_t1(a: BiLaurent) -> BiLaurent:
    return a.spec_t1()


def qint(k: int) -> BiLaurent:
    """The quantum integer [k]_q = (q^k - q^-k) / (q - 1/q)."""
    if k == 0:
        return ZERO
    if k < 0:
        return -qint(-k)
    return BiLaurent({(k - 1 - 2 * a, 0): 1 for a in range(k)})


def qint_ratio(k: int, d: int) -> BiLaurent:
    """[k*d]_q / [d]_q, which is the Laurent polynomial sum_a q^{(2a-k+1)d}."""
    if k < 1 or d < 1:
        raise ValueError("qint_ratio needs k >= 1 and d >= 1")
    return BiLaurent({((2 * a - k + 1) * d, 0): 1 for a in range(k)})


def total(polys: Iterable[BiLaurent]) -> BiLaurent:
    out: dict[tuple[int, int], int] = {}
    for p in polys:
        for k, c in p._terms.items():
            out[k] = out.get(k, 0) + c
    return BiLaurent(out)
