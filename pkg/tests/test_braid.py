import pytest
from hypothesis import given, settings, strategies as st

from cartanqt import braid
from cartanqt.cartan import build
from cartanqt.deform import build_cqt, invert
from cartanqt.invariants import ibar_matrix
from cartanqt.poly import ONE, ZERO, BiLaurent, total
from cartanqt.weyl import longest_word, reduced_words, second_longest_word

P = BiLaurent.parse

coeff_poly = st.dictionaries(
    st.tuples(st.integers(-3, 3), st.integers(-3, 3)), st.integers(-4, 4), max_size=3
).map(BiLaurent)


def vectors(n):
    return st.tuples(*[coeff_poly] * n)


def test_apply_T_examples():
    dc = build_cqt(build("C2"))
    a1, a2 = braid.simple_root(dc.cd, 1), braid.simple_root(dc.cd, 2)
    # T_1 alpha_2 = alpha_2 + q^-1 t (q + q^-1) alpha_1
    assert braid.apply_T(dc, 1, 1, a2) == (P("t + q^-2*t"), ONE)
    assert braid.pair_fund(braid.apply_T(dc, 1, 1, a2), 2) == ONE
    # T_i alpha_i = -q^{-2 d_i} t^2 alpha_i
    assert braid.apply_T(dc, 1, 1, a1) == (P("-q^-2*t^2"), ZERO)
    assert braid.apply_T(dc, 2, -1, a2) == (ZERO, P("-q^4*t^-2"))
    with pytest.raises(ValueError):
        braid.apply_T(dc, 1, 0, a1)


@pytest.mark.parametrize("name", ["A2", "B3", "C3", "G2", "D4"])
@settings(max_examples=20, deadline=None)
@given(data=st.data())
def test_T_inverse(name, data):
    dc = build_cqt(build(name))
    w = data.draw(vectors(dc.cd.n))
    for i in dc.cd.nodes:
        assert braid.apply_T(dc, i, -1, braid.apply_T(dc, i, 1, w)) == w
        assert braid.apply_T(dc, i, 1, braid.apply_T(dc, i, -1, w)) == w


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3"])
@settings(max_examples=5, deadline=None)
@given(data=st.data())
def test_pairing_invariance(name, data):
    dc = build_cqt(build(name))
    vs = [data.draw(vectors(dc.cd.n)) for _ in range(2)]
    assert braid.eqpair_failures(dc, vs) == []


def test_prefix_matrix_matches_direct_application(small_cd):
    dc = build_cqt(small_cd)
    word = longest_word(small_cd)
    for k, a, col in braid.prefix_pairings(dc, word, 1):
        assert col == braid.apply_word(dc, word[: k - 1], braid.simple_root(small_cd, a))


def test_tw0_examples():
    for name, want in [("A1", P("-q^-2*t^2")), ("C2", P("-q^-6*t^4")), ("G2", P("-q^-12*t^6"))]:
        dc = build_cqt(build(name))
        cols = braid.final_operator(dc, longest_word(dc.cd))
        for j in dc.cd.nodes:
            assert cols[j - 1][j - 1] == want


def test_tw0_star_twist():
    dc = build_cqt(build("A3"))
    cols = braid.final_operator(dc, longest_word(dc.cd))
    assert cols[0] == (ZERO, ZERO, P("-q^-4*t^4"))


def test_tw0_all_types(cd):
    dc = build_cqt(cd)
    for word in braid.two_words(cd):
        assert braid.verify_tw0(dc, word) == []


def test_tw0_every_reduced_word_small():
    for name in ("A2", "B2", "A3", "G2"):
        dc = build_cqt(build(name))
        for w in reduced_words(dc.cd, longest_word(dc.cd)):
            assert braid.verify_tw0(dc, w) == []


def test_tw0_fails_off_w0():
    dc = build_cqt(build("A2"))
    assert braid.verify_tw0(dc, (1, 2)) == [1, 2]


def test_braid_relations(cd):
    assert braid.braid_relation_failures(build_cqt(cd)) == []


def test_ibar_examples():
    assert braid.ibar_matrix_braid(build_cqt(build("A1")))[(1, 1)] == ONE
    c2 = braid.ibar_matrix_braid(build_cqt(build("C2")))
    assert c2[(1, 1)].spec_t1() == P("1 + q^4")


def test_ibar_word_independent(small_cd):
    dc = build_cqt(small_cd)
    base = braid.ibar_matrix_braid(dc, longest_word(small_cd))
    for w in list(reduced_words(small_cd, longest_word(small_cd)))[:30]:
        assert braid.ibar_matrix_braid(dc, w) == base


def test_ibar_braid_matches_series(cd):
    dc = build_cqt(cd)
    assert braid.ibar_matrix_braid(dc) == ibar_matrix(invert(cd))


@pytest.mark.parametrize("name", ["A1", "A2", "B2", "G2", "A3", "C3"])
def test_literal_infinite_word(name):
    cd = build(name)
    dc = build_cqt(cd)
    tab = invert(cd)
    lit = braid.ctilde_literal(dc, longest_word(cd), tab.order)
    for (i, j), p in lit.items():
        assert p == tab.entry(i, j)


def test_pipeline_both_words(cd):
    dc = build_cqt(cd)
    tab = invert(cd)
    for w in (longest_word(cd), second_longest_word(cd)):
        assert braid.ctilde_table_braid(dc, tab.order, w) == tab


def test_filtration_examples():
    assert braid.projective_filtration(build_cqt(build("A1")), (1,), 1) == [(1, ONE)]


def test_filtration_nonnegative_and_sums_to_ibar(cd):
    dc = build_cqt(cd)
    word = longest_word(cd)
    ib = braid.ibar_matrix_braid(dc, word)
    for i in cd.nodes:
        filt = braid.projective_filtration(dc, word, i)
        assert all(m.is_nonnegative() for _, m in filt)
        for j in cd.nodes:
            assert total(m for a, m in filt if a == j).bar() == ib[(i, j)]


def test_quadrant(cd):
    dc = build_cqt(cd)
    assert braid.quadrant_failures(dc, longest_word(cd)) == []


def test_dimibd_window(cd):
    dc = build_cqt(cd)
    assert braid.dimibd_failures(dc, braid.ibar_matrix_braid(dc)) == []


def test_two_words_distinct(cd):
    a, b = braid.two_words(cd)
    assert (a == b) == (cd.n == 1)
