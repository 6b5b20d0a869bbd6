"""The verification sweep behind ``cartanqt verify``.

Each section runs one family of identities on one Cartan type and records
its checks and failure strings in a shared :class:`Report`.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass, field

from . import braid, invariants as inv, rmatrix as rm
from .cartan import CartanData, FiniteType, build
from .deform import build_cqt, check_properties, default_order, invert, product_check
from .weyl import is_w0_word, longest_word, second_longest_word, star

__all__ = ["SECTIONS", "Report", "run"]


@dataclass
class Report:
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    conjectural: int = 0

    def add(self, label: str, bad: Iterable) -> None:
        self.checks += 1
        for b in bad:
            self.failures.append(f"{label}: {b}")

    def to_dict(self) -> dict:
        return {"checks": self.checks, "failures": self.failures, "conjectural": self.conjectural}


def _order(cd: CartanData, order: int | None) -> int:
    # verification needs a full quasi-period beyond the window
    want = default_order(cd) if order is None else order
    return max(want, 2 * cd.rhv + 2)


def section_properties(cd, rep, order, max_level):
    tab = invert(cd, _order(cd, order))
    rep.add(f"{cd} properties", check_properties(tab))
    rep.add(f"{cd} product", product_check(tab))


def section_tw0(cd, rep, order, max_level):
    dc = build_cqt(cd)
    for word in (longest_word(cd), second_longest_word(cd)):
        rep.add(f"{cd} w0 word {word}", [] if is_w0_word(cd, word) else ["not a reduced w0 word"])
        rep.add(f"{cd} Tw0", braid.verify_tw0(dc, word))
    rep.add(f"{cd} braid relations", braid.braid_relation_failures(dc))
    nu = star(cd)
    rep.add(f"{cd} star", [i for i in cd.nodes if nu[nu[i]] != i or any(cd.cij(nu[i], nu[j]) != cd.cij(i, j) for j in cd.nodes)])


def section_pipeline(cd, rep, order, max_level):
    dc = build_cqt(cd)
    N = _order(cd, order)
    tab = invert(cd, N)
    for word in (longest_word(cd), second_longest_word(cd)):
        other = braid.ctilde_table_braid(dc, N, word)
        rep.add(f"{cd} braid pipeline {word[:6]}...", [] if other == tab else ["tables differ"])
        ib = braid.ibar_matrix_braid(dc, word)
        rep.add(f"{cd} ibar via braid", [k for k in ib if ib[k] != inv.ibar_dim(tab, *k).value])
    rep.add(f"{cd} quadrant", braid.quadrant_failures(dc, longest_word(cd)))


def section_invariants(cd, rep, order, max_level):
    dc = build_cqt(cd)
    tab = invert(cd, _order(cd, order))
    ib = inv.ibar_matrix(tab)
    word = longest_word(cd)
    rep.add(f"{cd} duality", inv.duality_failures(ib, cd))
    rep.add(f"{cd} ES identity", inv.es_matrix_identity(dc, ib))
    rep.add(f"{cd} reconstruction", [] if inv.reconstruct_ctilde(ib, cd, tab.order) == tab else ["mismatch"])
    rep.add(f"{cd} dimIbd window", braid.dimibd_failures(dc, ib))
    rep.add(f"{cd} injective", inv.injective_failures(dc, tab, word))
    neg = []
    for i in cd.nodes:
        for _, m in braid.projective_filtration(dc, word, i):
            if not m.is_nonnegative():
                neg.append(("filtration", i, str(m)))
        for j in cd.nodes:
            if not ib[(i, j)].is_nonnegative():
                neg.append(("ibar", i, j))
            for k in range(1, 7):
                if not inv.kernel_dim(tab, i, k, j).value.is_nonnegative():
                    neg.append(("kernel", i, k, j))
    rep.add(f"{cd} positivity", neg)
    rigid, sym = [], []
    for i in cd.nodes:
        for k in range(1, 7):
            if inv.ext1_dim(tab, i, k, i, k).value.coeff(0):
                rigid.append((i, k))
    for i in cd.nodes:
        for j in cd.nodes:
            for k in range(1, 7):
                for l in range(1, 7):
                    a = inv.ext1_dim(tab, i, k, j, l).value
                    if a != inv.ext1_dim(tab, j, l, i, k).value:
                        sym.append((i, k, j, l))
                    if inv.is_clubsuit(cd, i, k, j, l):
                        rest = inv.ext1_raw(tab, i, k, j, l) - a
                        if rest != inv.delta(cd, i, j).bar() or not rest.is_nonnegative():
                            sym.append(("remainder", i, k, j, l))
    rep.add(f"{cd} rigidity", rigid)
    rep.add(f"{cd} ext1 symmetry", sym)


def section_conjecture(cd, rep, order, max_level):
    tab = invert(cd, _order(cd, order))
    n, bad, conj = rm.verify_evid(tab, max_level)
    rep.checks += n
    rep.conjectural += len(conj)
    rep.failures += [f"{cd} evid: {b}" for b in bad]
    den, neg = [], []
    for i in cd.nodes:
        for j in cd.nodes:
            for k in range(1, max_level + 1):
                for l in range(1, max_level + 1):
                    a, b = rm.KRLabel(i, k), rm.KRLabel(j, l)
                    try:
                        d = rm.divisor_kr(tab, a, b)
                    except ArithmeticError as exc:
                        neg.append((i, k, j, l, str(exc)))
                        continue
                    if k * cd.di(i) >= l * cd.di(j) and not inv.is_clubsuit(cd, i, k, j, l):
                        if rm.denominator_poly(tab, a, b) != d:
                            den.append((i, k, j, l))
                    if rm.divisor_kr(tab, a._replace(p=3), b._replace(p=1)) != d.shift(2):
                        den.append(("shift", i, k, j, l))
    rep.add(f"{cd} divisor positivity", neg)
    rep.add(f"{cd} denominator formula", den)


SECTIONS: dict[str, Callable] = {
    "properties": section_properties,
    "tw0": section_tw0,
    "pipeline": section_pipeline,
    "invariants": section_invariants,
    "conjecture": section_conjecture,
}


def run(types: Iterable[FiniteType], sections: Iterable[str] | None = None,
        order: int | None = None, max_level: int = 4) -> Report:
    names = list(SECTIONS) if sections is None else list(sections)
    for s in names:
        if s not in SECTIONS:
            raise ValueError(f"unknown verification section {s!r}")
    rep = Report()
    for t in types:
        cd = build(t)
        for s in names:
            SECTIONS[s](cd, rep, order, max_level)
    return rep
