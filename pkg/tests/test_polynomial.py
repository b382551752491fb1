import json

import pytest
from hypothesis import given, settings, strategies as st

from conftest import knot_diagrams
from lorenzknots.braid import BraidWord, lorenz_braid
from lorenzknots.diagram import from_partition
from lorenzknots.homology import standard_monodromy
from lorenzknots.polynomial import (
    IntPolynomial,
    LaurentPolynomial,
    PolynomialError,
    alexander,
    alexander_from_burau,
    alexander_from_monodromy,
    burau_reduced,
    burau_word,
    charpoly,
    charpoly_interpolated,
    check_alexander,
    gcd,
    laurent_det,
    laurent_identity,
    laurent_matmul,
    squarefree_factors,
)

P = IntPolynomial
polys = st.lists(st.integers(-20, 20), min_size=1, max_size=8).map(lambda c: P(tuple(c)))
matrices = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n)
)


def test_arithmetic():
    a, b = P((1, 1)), P((-1, 1))
    assert a * b == P((-1, 0, 1))
    assert a + b == P((0, 2))
    assert a - a == P()
    assert P((1, 2, 3))(2) == 17
    assert P((1, 2, 3)).derivative() == P((2, 6))
    assert str(P((1, -1, 1))) and P.parse("1,-1,1") == P((1, -1, 1))


@given(polys, polys)
def test_divmod_round_trip(a, b):
    if b and abs(b.lead) == 1:
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.degree < b.degree or not r


def test_inexact_division_raises():
    with pytest.raises(PolynomialError):
        P((1, 0, 1)).exact_div(P((1, 2)))


def test_parse_rejects_garbage():
    with pytest.raises(PolynomialError):
        P.parse("1,x")


@given(polys)
def test_json_round_trip(p):
    assert P.from_dict(json.loads(p.to_json())) == p


def test_gcd_and_squarefree():
    a = P((-1, 1)) * P((-1, 1)) * P((1, 1))
    assert gcd(a, P((-1, 1)) * P((2, 1))) in (P((-1, 1)), P((1, -1)))
    factors = squarefree_factors(a)
    prod = P((1,))
    for f, m in factors:
        for _ in range(m):
            prod = prod * f
    assert prod.primitive() in (a.primitive(), (-a).primitive())
    assert sorted(m for _, m in factors) == [1, 2]


def test_charpoly_examples():
    assert charpoly([[1, 0], [0, 1]]) == P((1, -2, 1))
    assert charpoly([[0, -1], [1, 0]]) == P((1, 0, 1))


@given(matrices)
def test_charpoly_agrees_with_interpolation(m):
    assert charpoly(m) == charpoly_interpolated(m)


def test_charpoly_of_211():
    assert charpoly(standard_monodromy(from_partition([2, 1, 1])).as_lists()).normalized() == P((1, -1, 1, -1, 1))


def test_alexander_golden():
    assert alexander(from_partition([2, 1, 1])) == P((1, -1, 1, -1, 1))
    d321 = alexander(from_partition([3, 2, 1]))
    assert d321.degree == 6 and d321.palindromic_sign() and abs(d321(1)) == 1
    assert alexander(from_partition([4, 4, 2])).degree == 10


def test_check_alexander_rejects():
    with pytest.raises(PolynomialError):
        check_alexander(P((1, 2)))
    with pytest.raises(PolynomialError):
        check_alexander(P((1, 1, 1)))  # palindromic but Delta(1) = 3


def test_burau_small_cases():
    assert burau_reduced(1, 1, 2) == [[-LaurentPolynomial.monomial(1)]]
    trefoil = BraidWord(2, (1, 1, 1))
    assert alexander_from_burau(trefoil) == P((1, -1, 1))
    assert alexander_from_burau(lorenz_braid(from_partition([2, 1, 1]))) == P((1, -1, 1, -1, 1))


@given(st.integers(2, 6), st.data())
def test_burau_letter_inverse(strands, data):
    i = data.draw(st.integers(1, strands - 1))
    prod = laurent_matmul(burau_reduced(i, 1, strands), burau_reduced(i, -1, strands))
    assert prod == laurent_identity(strands - 1)


@given(st.integers(3, 5), st.data())
def test_burau_braid_relation(strands, data):
    i = data.draw(st.integers(1, strands - 2))
    a = burau_word(BraidWord(strands, (i, i + 1, i)))
    b = burau_word(BraidWord(strands, (i + 1, i, i + 1)))
    assert a == b


@given(st.integers(2, 5), st.data())
def test_burau_word_matches_matrix_product(strands, data):
    word = data.draw(st.lists(st.integers(1, strands - 1), max_size=6))
    signs = data.draw(st.lists(st.sampled_from([1, -1]), min_size=len(word), max_size=len(word)))
    m = laurent_identity(strands - 1)
    for x, s in zip(word, signs):
        m = laurent_matmul(m, burau_reduced(x, s, strands))
    assert burau_word(BraidWord(strands, tuple(word), tuple(signs))) == m


def test_laurent_det_of_identity():
    assert laurent_det(laurent_identity(3)) == LaurentPolynomial.const(1)


@settings(max_examples=30)
@given(knot_diagrams(12))
def test_monodromy_and_burau_agree(d):
    a = alexander_from_monodromy(d)
    assert a == alexander_from_burau(lorenz_braid(d))
    assert a.degree == d.n
    assert a.palindromic_sign() and abs(a(1)) == 1


def test_unknown_method():
    with pytest.raises(ValueError):
        alexander(from_partition([2, 1, 1]), "magic")
