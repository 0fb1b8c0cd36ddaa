import pytest

from hookforest import formulas
from hookforest.forest import (chain_forest, enumerate_forests,
                               enumerate_labelings, labeling_count,
                               parse_forest)
from hookforest.qpoly import BiPoly, Series, q_factorial, q_number


def tq(mapping):
    return BiPoly(mapping)


def total_count(poly):
    return sum(c for _, c in poly.eval_t(1).items())


def test_extension_count():
    assert formulas.extension_count(parse_forest("")) == 1
    assert formulas.extension_count(parse_forest("()")) == 1
    assert formulas.extension_count(parse_forest("(()())")) == 2
    assert formulas.extension_count(parse_forest("()()()")) == 6
    assert formulas.extension_count(chain_forest(5)) == 1


def test_rhs_bw():
    assert formulas.rhs_bw(parse_forest("()")) == BiPoly.one()
    assert formulas.rhs_bw(parse_forest("(()())")) == tq({(0, 0): 2, (0, 1): 2, (0, 2): 2})
    assert formulas.rhs_bw(chain_forest(3)) == q_factorial(3)


def test_rhs_inv_b():
    assert formulas.rhs_inv_b(parse_forest("()")) == q_number(2)
    assert formulas.rhs_inv_b(chain_forest(2)) == q_number(2) * q_number(4)
    expected = 2 * q_number(6) * q_number(2) * q_number(2)
    assert formulas.rhs_inv_b(parse_forest("(()())")) == expected
    assert expected == BiPoly.from_triples(
        [[0, 0, 2], [0, 1, 6], [0, 2, 8], [0, 3, 8], [0, 4, 8],
         [0, 5, 8], [0, 6, 6], [0, 7, 2]])


def test_rhs_fmaj_and_rmaj_share_the_polynomial():
    for n in range(5):
        for f in enumerate_forests(n):
            assert formulas.rhs_fmaj(f) == formulas.rhs_inv_b(f)
            assert formulas.rhs_rmaj(f) == formulas.rhs_inv_b(f)


def test_rhs_inv_d():
    assert formulas.rhs_inv_d(parse_forest("")) == BiPoly.one()
    assert formulas.rhs_inv_d(parse_forest("()")) == BiPoly.one()
    assert formulas.rhs_inv_d(chain_forest(2)) == q_number(2) * q_number(2)
    # the antichain gives the constant equal to the even-signed count
    assert formulas.rhs_inv_d(parse_forest("()()")) == BiPoly.term(4)


def test_rhs_bivariate_inv():
    one_tq = tq({(0, 0): 1, (1, 1): 1})
    assert formulas.rhs_bivariate_inv(parse_forest("()")) == one_tq
    chain2 = chain_forest(2)
    expected = tq({(0, 0): 1, (1, 2): 1}) * q_number(2) * one_tq
    assert formulas.rhs_bivariate_inv(chain2) == expected
    for n in range(5):
        for f in enumerate_forests(n):
            biv = formulas.rhs_bivariate_inv(f)
            assert biv.eval_t(0) == formulas.rhs_bw(f)
            assert biv.eval_t(1) == formulas.rhs_inv_b(f)


def test_rhs_bivariate_majb():
    one_tq = tq({(0, 0): 1, (1, 1): 1})
    assert formulas.rhs_bivariate_majb(parse_forest("()")) == one_tq
    assert formulas.rhs_bivariate_majb(parse_forest("")) == BiPoly.one()
    assert formulas.rhs_bivariate_majb(chain_forest(2)) == one_tq ** 2 * q_number(2)
    # the rmaj closed form arises from it by the monomial substitution
    for n in range(5):
        for f in enumerate_forests(n):
            mapped = formulas.rhs_bivariate_majb(f).subst_q2_t_invq()
            assert mapped == formulas.rhs_rmaj(f)


def test_rhs_linext():
    dot = parse_forest("()")
    assert formulas.rhs_linext(dot, (1,)) == BiPoly.term(1, q=1)
    chain2 = chain_forest(2)
    assert formulas.rhs_linext(chain2, (2, -1)) == BiPoly.term(1, q=2)
    anti = parse_forest("()()")
    assert formulas.rhs_linext(anti, (2, -1)) == tq({(0, 1): 1, (0, 2): 1})


def test_rhs_partition_gf():
    dot = parse_forest("()")
    s = formulas.rhs_partition_gf(dot, (1,), 3)
    assert s == Series(tq({(0, 1): 1, (0, 2): 1, (0, 3): 1}), 3)
    s = formulas.rhs_partition_gf(dot, (-1,), 2)
    assert s == Series(q_number(3), 2)
    chain2 = chain_forest(2)
    s = formulas.rhs_partition_gf(chain2, (1, 2), 2)
    assert s == Series(BiPoly.zero(), 2)  # weight starts at maj-b = 3


def test_rhs_reiner():
    one_tq = tq({(0, 0): 1, (1, 1): 1})
    assert formulas.rhs_reiner(0) == BiPoly.one()
    assert formulas.rhs_reiner(1) == one_tq
    assert formulas.rhs_reiner(2) == one_tq ** 2 * q_number(2)
    assert formulas.rhs_majb_perm(3) == formulas.rhs_reiner(3)


def test_rhs_length_generating_functions():
    assert formulas.rhs_len_b(0) == BiPoly.one()
    assert formulas.rhs_len_b(1) == q_number(2)
    assert formulas.rhs_len_b(2) == q_number(2) * q_number(4)
    assert formulas.rhs_len_b(3) == q_number(2) * q_number(4) * q_number(6)
    assert formulas.rhs_len_d(0) == BiPoly.one()
    assert formulas.rhs_len_d(1) == BiPoly.one()
    assert formulas.rhs_len_d(2) == q_number(2) * q_number(2)
    assert formulas.rhs_len_d(3) == q_number(2) * q_number(4) * q_number(3)


def test_chain_specialization():
    for n in range(9):
        chain = chain_forest(n)
        assert formulas.rhs_inv_b(chain) == formulas.rhs_len_b(n)
        assert formulas.rhs_inv_d(chain) == formulas.rhs_len_d(n)
        assert formulas.rhs_bw(chain) == q_factorial(n)


def test_closed_forms_count_labelings():
    for n in range(5):
        for f in enumerate_forests(n):
            assert total_count(formulas.rhs_bw(f)) == labeling_count(n, "ordinary")
            assert total_count(formulas.rhs_inv_b(f)) == labeling_count(n, "signed")
            assert total_count(formulas.rhs_inv_d(f)) == labeling_count(n, "even-signed")
            assert total_count(formulas.rhs_bivariate_inv(f)) == labeling_count(n, "signed")
            assert total_count(formulas.rhs_bivariate_majb(f)) == labeling_count(n, "signed")
            for poly in (formulas.rhs_bw(f), formulas.rhs_inv_b(f),
                         formulas.rhs_inv_d(f), formulas.rhs_bivariate_inv(f),
                         formulas.rhs_bivariate_majb(f)):
                assert all(c > 0 for _, c in poly.items())


def test_registry_contents():
    assert set(formulas.FOREST_RHS) == {
        "thm-bw", "thm-inv-b", "thm-inv-d", "thm-fmaj", "thm-rmaj",
        "thm-bivariate-inv", "thm-bivariate-majB"}
    assert set(formulas.SIZE_RHS) == {"eq-reiner", "len-b", "len-d"}
    assert set(formulas.LABELED_RHS) == {"thm-le1", "lem-partition-gf"}
    assert formulas.LABELED_RHS["thm-le1"] is formulas.rhs_linext
