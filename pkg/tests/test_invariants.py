import pytest

from cartanqt import invariants as inv
from cartanqt.braid import projective_filtration
from cartanqt.cartan import build
from cartanqt.deform import build_cqt, invert
from cartanqt.poly import ONE, BiLaurent, qint
from cartanqt.weyl import longest_word

P = BiLaurent.parse


def tab(name):
    return invert(build(name))


def test_ibar_examples():
    assert inv.ibar_dim(tab("A1"), 1, 1).value == ONE
    assert inv.ibar_dim(tab("C2"), 1, 1).value.spec_t1() == P("1 + q^4")
    f4 = inv.ibar_dim(tab("F4"), 3, 3).value.spec_t1()
    assert f4 == P("1 + q^2 + q^4 + 2*q^6 + 2*q^8 + 2*q^10 + q^12 + q^14 + q^16")


def test_kernel_examples():
    assert inv.kernel_dim(tab("A1"), 1, 2, 1).value == P("q^2 + 1")
    assert inv.kernel_dim(tab("A1"), 1, 2, 1).value == qint(2) * P("q")
    assert inv.kernel_dim(tab("B3"), 3, 2, 1).value == P("q^4 + q^6")
    with pytest.raises(ValueError):
        inv.kernel_dim(tab("A1"), 1, 0, 1)


def test_dimpoly_rejects_negative():
    with pytest.raises(ArithmeticError):
        inv.DimPoly(P("-q"), "kernel")
    with pytest.raises(ValueError):
        inv.DimPoly(ONE, "volume")
    assert str(inv.DimPoly(P("-q"), "euler")) == str(P("-q"))


def test_short_table_rejected():
    with pytest.raises(ValueError):
        inv.ibar_dim(invert(build("G2"), 5), 1, 1)


def test_euler_pairing_a1_is_one():
    dc = build_cqt(build("A1"))
    for M in (1, 2, 5):
        assert inv.euler_pairing_ES(dc, 1, 1, M).value == ONE
    with pytest.raises(ValueError):
        inv.euler_pairing_ES(dc, 1, 1, 0)


def test_es_identity(cd):
    dc = build_cqt(cd)
    assert inv.es_matrix_identity(dc, inv.ibar_matrix(invert(cd))) == []


def test_es_identity_detects_error():
    cd = build("A2")
    ib = inv.ibar_matrix(invert(cd))
    ib[(1, 1)] = ib[(1, 1)] + ONE
    assert inv.es_matrix_identity(build_cqt(cd), ib) != []


def test_reconstruction(cd):
    t = invert(cd)
    assert inv.reconstruct_ctilde(inv.ibar_matrix(t), cd, t.order) == t


def test_duality(cd):
    assert inv.duality_failures(inv.ibar_matrix(invert(cd)), cd) == []


def test_delta_examples():
    assert inv.delta(build("C4"), 3, 3) == P("q^4 + q^6")
    assert not inv.delta(build("C2"), 1, 1)
    assert inv.delta(build("C3"), 2, 2) == P("q^4")
    assert inv.delta(build("F4"), 3, 4) == P("q^9")
    assert inv.delta(build("G2"), 2, 2) == P("q^6")
    with pytest.raises(ValueError):
        inv.delta(build("A3"), 1, 1)
    with pytest.raises(ValueError):
        inv.delta(build("C3"), 3, 3)


def test_clubsuit():
    c3 = build("C3")
    assert inv.is_clubsuit(c3, 1, 1, 2, 1)
    assert not inv.is_clubsuit(c3, 1, 2, 2, 2)
    assert not inv.is_clubsuit(c3, 1, 1, 3, 1)
    assert not inv.is_clubsuit(c3, 1, 1, 2, 3)
    assert not inv.is_clubsuit(build("B3"), 1, 1, 1, 1)


def test_ext1_examples():
    assert inv.ext1_dim(tab("G2"), 2, 1, 2, 1).value == P("q^-2 + q^-8 + q^-12")
    assert inv.ext1_dim(tab("C2"), 1, 1, 1, 1).value == P("q^-2 + q^-6")
    assert inv.ext1_dim(tab("A1"), 1, 1, 1, 1).value == P("q^-2")
    with pytest.raises(ValueError):
        inv.ext1_dim(tab("A1"), 1, 0, 1, 1)


def test_rigidity_and_symmetry(cd):
    t = invert(cd)
    for i in cd.nodes:
        for k in range(1, 7):
            assert inv.ext1_dim(t, i, k, i, k).value.coeff(0) == 0
    for i in cd.nodes:
        for j in cd.nodes:
            for k in range(1, 4):
                for l in range(1, 4):
                    assert inv.ext1_dim(t, i, k, j, l).value == inv.ext1_dim(t, j, l, i, k).value


def test_club_remainder_is_delta():
    for name in ("C3", "C4", "C5", "F4", "G2"):
        cd = build(name)
        t = invert(cd)
        for i in cd.nodes:
            for j in cd.nodes:
                if inv.is_clubsuit(cd, i, 1, j, 1):
                    rest = inv.ext1_raw(t, i, 1, j, 1) - inv.ext1_dim(t, i, 1, j, 1).value
                    assert rest == inv.delta(cd, i, j).bar()


def test_kernel_positivity(cd):
    t = invert(cd)
    for i in cd.nodes:
        for j in cd.nodes:
            for k in range(1, 7):
                inv.kernel_dim(t, i, k, j)


def test_injective_consistency(cd):
    dc = build_cqt(cd)
    assert inv.injective_failures(dc, invert(cd), longest_word(cd)) == []


def test_filtration_top_letter_a1():
    dc = build_cqt(build("A1"))
    assert projective_filtration(dc, (1,), 1) == [(1, ONE)]
