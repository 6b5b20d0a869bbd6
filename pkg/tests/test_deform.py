import pytest
import sympy

from cartanqt.cartan import build
from cartanqt.deform import (
    CTildeTable, build_cqt, check_properties, coeff_q, default_order, invert, product_check,
)
from cartanqt.poly import ONE, ZERO, BiLaurent, qint, total
from cartanqt.weyl import star

P = BiLaurent.parse


def c2_closed_form(order):
    # q^3 t^-2 (1 + q^6 t^-4)^-1 [[q^2 t^-1 + q^-2 t, q + q^-1], [1, q t^-1 + q^-1 t]]
    geo = total(P("-q^6*t^-4") ** m for m in range(order // 6 + 2))
    pre = P("q^3*t^-2") * geo
    m = {(1, 1): P("q^2*t^-1 + q^-2*t"), (1, 2): qint(2), (2, 1): ONE, (2, 2): P("q*t^-1 + q^-1*t")}
    return {k: (pre * v).truncate_q(order) for k, v in m.items()}


def test_build_cqt_examples():
    dc = build_cqt(build("C2"))
    assert dc[1, 1] == P("q*t^-1 + q^-1*t")
    assert dc[1, 2] == -P("q + q^-1")
    assert dc[2, 1] == P("-1")
    assert dc[2, 2] == P("q^2*t^-1 + q^-2*t")
    assert build_cqt(build("A1"))[1, 1] == P("q*t^-1 + q^-1*t")


def test_cqt_structure(cd):
    dc = build_cqt(cd)
    for i in cd.nodes:
        for j in cd.nodes:
            # C(1, 1) = C
            assert sum(dc[i, j].terms.values()) == cd.cij(i, j)
            if i != j:
                assert qint(cd.di(i)) * dc[i, j] == qint(cd.di(j)) * dc[j, i]


def test_a1_series():
    tab = invert(build("A1"), 7)
    assert tab.entry(1, 1) == P("q*t^-1 - q^3*t^-3 + q^5*t^-5 - q^7*t^-7")


def test_c2_closed_form():
    tab = invert(build("C2"), 12)
    want = c2_closed_form(12)
    for (i, j), p in want.items():
        assert tab.entry(i, j) == p


def test_coeff_q_examples():
    tab = invert(build("C2"), 12)
    assert [coeff_q(tab, 1, 1, u) for u in (1, 3, 5)] == [1, 0, 1]
    g2 = invert(build("G2"))
    assert g2.entry_q(2, 2, 12) == P("q + q^5 + q^7 + q^11")
    with pytest.raises(IndexError):
        tab.coeff_q(1, 1, 13)


def test_leading_coefficient(cd):
    tab = invert(cd)
    for i in cd.nodes:
        for j in cd.nodes:
            assert tab.coeff_q(i, j, cd.di(i)) == (i == j)
            assert tab.coeff(i, j, cd.di(i), -1) == (i == j)


def test_c2_quasi_periodicity():
    tab = invert(build("C2"), 24)
    for i in (1, 2):
        for j in (1, 2):
            for u in range(0, 19):
                for v in range(0, 12):
                    assert tab.coeff(i, j, u + 6, -v - 4) == -tab.coeff(i, j, u, -v)


def test_product_identity(cd):
    assert product_check(invert(cd)) == []


def test_all_properties(cd):
    assert check_properties(invert(cd)) == []


def test_properties_need_full_period():
    with pytest.raises(ValueError):
        check_properties(invert(build("A2"), 5))


def test_literal_vanishing_window_fails_when_star_is_nontrivial():
    # c~_12(u) = 0 for |u - 3| <= d_1 - delta_12 = 1 fails for A2 at u = 2; the
    # window around odd multiples of r h^vee is governed by delta_{i j*}
    tab = invert(build("A2"))
    assert tab.entry_q(1, 2, 4) == P("q^2 - q^4")
    assert star(build("A2"))[2] == 1


def test_default_order(monkeypatch):
    cd = build("G2")
    monkeypatch.delenv("CARTANQT_ORDER", raising=False)
    assert default_order(cd) == 26
    monkeypatch.setenv("CARTANQT_ORDER", "40")
    assert default_order(cd) == 40
    assert invert(cd).order == 40


def test_table_round_trip():
    tab = invert(build("B3"))
    again = CTildeTable.from_entries(tab.cd, tab.order, tab.items())
    assert again == tab
    assert again != invert(build("B3"), tab.order + 1)


def _sympy_matrix(cd):
    q, t = sympy.symbols("q t")
    dc = build_cqt(cd)

    def conv(p):
        return sum(c * q ** u * t ** v for (u, v), c in p.terms.items())

    return q, t, sympy.Matrix(cd.n, cd.n, lambda a, b: conv(dc[a + 1, b + 1]))


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3", "C3"])
def test_against_sympy_adjugate(name):
    # det C * C~ = adj C, compared below the q-order where truncation can reach
    cd = build(name)
    q, t, m = _sympy_matrix(cd)
    det = sympy.expand(m.det())
    adj = m.adjugate().applyfunc(sympy.expand)
    tab = invert(cd)
    low = -sum(cd.d)
    bound = tab.order + low
    for i in cd.nodes:
        for j in cd.nodes:
            ours = sum(c * q ** u * t ** v for (u, v), c in tab.entry(i, j).terms.items())
            diff = sympy.expand((det * ours - adj[i - 1, j - 1]) * q ** (-low) * t ** 40)
            poly = sympy.Poly(diff, q, t)
            assert all(mon[0] + low > bound for mon in poly.monoms()), (i, j)
