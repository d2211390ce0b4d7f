"""The presented graded algebra: dimensions by incremental quotient,
normal-form words, and evaluation into chain-level classes."""

import pytest

from extline.fields import field_for_characteristic
from extline.homs import LineAlgebra
from extline.ext_table import ext_table
from extline import path_algebra as pa


def algebra(n, char=2):
    return LineAlgebra(n, field_for_characteristic(char))


def test_degree_zero_is_vertexwise():
    gd = pa.graded_dimension(3, 0, field_for_characteristic(2))
    for i in range(1, 4):
        for j in range(1, 4):
            assert gd.dim(i, j, 0) == (1 if i == j else 0)


def test_n1_is_polynomial_on_the_turnaround():
    gd = pa.graded_dimension(1, 9, field_for_characteristic(2))
    for k in range(10):
        assert gd.dim(1, 1, k) == 1
    assert pa.standard_relators(1) == []


@pytest.mark.parametrize("char", [0, 2])
def test_dims_match_ext_table_n2(char):
    gd = pa.graded_dimension(2, 8, field_for_characteristic(char))
    table = ext_table(2, 8)
    for i in (1, 2):
        for j in (1, 2):
            for k in range(9):
                assert gd.dim(i, j, k) == table.entry(i, j, k)


@pytest.mark.parametrize("n", [3, 4])
def test_dims_match_ext_table(n):
    K = 2 * n + 2
    gd = pa.graded_dimension(n, K, field_for_characteristic(2))
    table = ext_table(n, K)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(K + 1):
                assert gd.dim(i, j, k) == table.entry(i, j, k)


def test_dropping_a_boundary_relator_inflates_dimensions():
    F2 = field_for_characteristic(2)
    full = pa.graded_dimension(2, 4, F2)
    partial = pa.graded_dimension(
        2, 4, F2, relators=[r for r in pa.standard_relators(2) if r.name != "x1.x1*"]
    )
    strictly_bigger = False
    for i in (1, 2):
        for j in (1, 2):
            for k in range(5):
                a, b = full.dim(i, j, k), partial.dim(i, j, k)
                assert b >= a
                if b > a:
                    strictly_bigger = True
    assert strictly_bigger


def test_word_validation():
    with pytest.raises(ValueError):
        pa.PathWord(3, (("x", 1), ("x", 1)))  # endpoints do not chain
    with pytest.raises(ValueError):
        pa.PathWord(3, (), vertex=None)
    w = pa.PathWord(3, (("x", 1), ("y", 2)))
    assert w.source == 1 and w.target == 2 and w.degree == 4


def test_hook_word_bounds():
    assert pa.hook_word(3, 3, 1, 2) == [("xstar", 2), ("xstar", 1)]
    assert pa.hook_word(3, 1, 3, 2) == [("x", 1), ("x", 2)]
    assert pa.hook_word(5, 3, 3, 4) == [("x", 3), ("x", 4), ("xstar", 4), ("xstar", 3)]
    with pytest.raises(ValueError):
        pa.hook_word(3, 1, 1, 4)  # longer than the maximal nonzero loop
    with pytest.raises(ValueError):
        pa.hook_word(4, 2, 2, 4)  # ditto, away from the ends
    with pytest.raises(ValueError):
        pa.hook_word(3, 1, 2, 2)  # parity


def test_normal_form_examples():
    w = pa.normal_form_monomial(3, 1, 1, 5)
    assert [a for a in w.arrows] == [("y", 1), ("xstar", 2), ("xstar", 1)]
    w = pa.normal_form_monomial(3, 1, 3, 2)
    assert [a for a in w.arrows] == [("x", 1), ("x", 2)]
    w = pa.normal_form_monomial(3, 2, 2, 0)
    assert w.arrows == () and w.vertex == 2
    assert pa.normal_form_monomial(3, 1, 1, 1) is None


def test_normal_form_degree_and_endpoints():
    n = 4
    table = ext_table(n, 2 * n + 2)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(2 * n + 3):
                w = pa.normal_form_monomial(n, i, j, k)
                if table.entry(i, j, k):
                    assert w is not None
                    assert w.source == i and w.target == j and w.degree == k
                else:
                    assert w is None


def test_evaluate_boundary_relator_words_to_zero():
    alg = algebra(3)
    w = pa.PathWord(3, (("x", 1), ("xstar", 1)))
    assert not pa.evaluate_word(alg, w).nonzero
    w = pa.PathWord(3, (("xstar", 2), ("x", 2)))
    assert not pa.evaluate_word(alg, w).nonzero


def test_evaluate_respects_commutation_relator():
    alg = algebra(4, char=0)
    from extline.yoneda import class_difference_scalar

    a = pa.evaluate_word(alg, pa.PathWord(4, (("xstar", 1), ("x", 1))))
    b = pa.evaluate_word(alg, pa.PathWord(4, (("x", 2), ("xstar", 2))))
    c = class_difference_scalar(a.chain_map, b.chain_map)
    assert c == alg.field.one


def test_evaluate_trivial_word():
    alg = algebra(2)
    cls = pa.evaluate_word(alg, pa.PathWord(2, (), vertex=2))
    assert cls.nonzero and cls.k == 0 and cls.i == cls.j == 2


@pytest.mark.parametrize("n,char", [(1, 2), (2, 2), (2, 0), (3, 2)])
def test_presentation_report(n, char):
    alg = algebra(n, char)
    report = pa.verify_presentation(alg, 2 * n + 2)
    assert report.ok, [c.name + " " + c.detail for c in report.failures()]


def test_quotient_is_relator_order_independent():
    # the degree-k reduction subtracts a sum of subspaces, so any relator
    # processing order yields the same dimensions
    F2 = field_for_characteristic(2)
    rels = pa.standard_relators(3)
    base = pa.graded_dimension(3, 8, F2, relators=rels)
    rev = pa.graded_dimension(3, 8, F2, relators=list(reversed(rels)))
    rot = pa.graded_dimension(3, 8, F2, relators=rels[3:] + rels[:3])
    for i in range(1, 4):
        for j in range(1, 4):
            for k in range(9):
                assert base.dim(i, j, k) == rev.dim(i, j, k) == rot.dim(i, j, k)


def test_evaluation_reverses_concatenation_into_composition():
    from extline.yoneda import cached_generator, chain_equal_strict, class_difference_scalar, compose

    alg = algebra(4, char=0)

    def raw(word):
        chain = cached_generator(alg, word.arrows[0][0], word.arrows[0][1])
        for a in word.arrows[1:]:
            chain = compose(cached_generator(alg, a[0], a[1]), chain)
        return chain

    u = pa.PathWord(4, (("x", 1),))
    v = pa.PathWord(4, (("x", 2), ("y", 3)))
    uv = pa.PathWord(4, u.arrows + v.arrows)
    # concatenation traverses u first, so the chain map of v acts after
    lhs = raw(uv)
    rhs = compose(raw(v), raw(u))
    assert chain_equal_strict(lhs, rhs)
    cls = pa.evaluate_word(alg, uv)
    c = class_difference_scalar(cls.chain_map, lhs)
    assert cls.nonzero and c is not None and not alg.field.is_zero(c)


def test_relator_endpoints_are_consistent():
    for n in (2, 3, 5):
        for rel in pa.standard_relators(n):
            degs = set()
            ends = set()
            for coeff, arrows in rel.terms:
                w = pa.PathWord(n, tuple(arrows))
                degs.add(w.degree)
                ends.add((w.source, w.target))
            assert len(degs) == 1 and len(ends) == 1
