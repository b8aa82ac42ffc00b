import itertools

import pytest
from hypothesis import given, settings, strategies as st

from pathsmt.rootsys import (
    CARTAN_TYPES, MalformedCartan, NotDominant, NotFiniteType, RootSystem, parse_word,
)


@pytest.mark.parametrize("name, order, npos", [
    ("A1", 2, 1), ("A2", 6, 3), ("A3", 24, 6), ("A4", 120, 10), ("B2", 8, 4),
    ("B3", 48, 9), ("C3", 48, 9), ("D4", 192, 12), ("G2", 12, 6),
])
def test_weyl_order_and_roots(name, order, npos):
    rs = RootSystem.from_name(name)
    assert rs.weyl_order == order
    assert len(rs.positive_roots) == npos
    assert rs.longest.length == npos


def test_a2_from_matrix():
    rs = RootSystem([[2, -1], [-1, 2]])
    assert rs.weyl_order == 6
    assert len(rs.positive_roots) == 3


def test_symmetrizers(G2, B2, A2):
    assert G2.symmetrizers == (1, 3)
    assert G2.d == 3
    assert B2.symmetrizers == (2, 1)
    assert A2.symmetrizers == (1, 1)


@pytest.mark.parametrize("name", sorted(CARTAN_TYPES))
def test_symmetrized_cartan_is_symmetric(name):
    rs = RootSystem.from_name(name)
    A, d = rs.cartan, rs.symmetrizers
    n = rs.rank
    assert all(A[i][j] * d[j] == A[j][i] * d[i] for i in range(n) for j in range(n))


def test_malformed_cartan():
    with pytest.raises(MalformedCartan):
        RootSystem([[2, 1], [-1, 2]])
    with pytest.raises(MalformedCartan):
        RootSystem([[2, -1], [0, 2]])
    with pytest.raises(MalformedCartan):
        RootSystem.from_name("E9")


def test_infinite_types_rejected():
    with pytest.raises(NotFiniteType):
        RootSystem([[2, -2], [-2, 2]], cap=1000)
    with pytest.raises(NotFiniteType):
        RootSystem([[2, -3], [-3, 2]], cap=1000)


def test_weyl_action_examples(A2):
    assert A2.act(A2.element("1"), (2, 2)) == (-2, 4)
    assert A2.act(A2.identity, (3, -1)) == (3, -1)
    assert A2.act(A2.longest, (1, 0)) == (0, -1)


def test_canonical_words(A2):
    assert str(A2.longest) == "121"
    assert A2.element("212") == A2.longest
    assert parse_word("id") == () and parse_word("") == ()


def test_pairing_examples(A2):
    alpha1, alpha12 = (1, 0), (1, 1)
    assert A2.pairing((1, 0), alpha1) == 1
    assert A2.pairing((1, 1), alpha12) == 2
    assert A2.pairing((0, 0), alpha12) == 0


def test_g2_coroots(G2):
    # long root alpha_2: its coroot is alpha_2^vee, short coroots are 3x scaled
    for beta in G2.positive_roots:
        assert G2.pairing(G2.root_to_weight(beta), beta) == 2


def test_reduced_words(A2, A3):
    assert A2.reduced_words(A2.longest) == [(1, 2, 1), (2, 1, 2)]
    assert A2.reduced_words(A2.identity) == [()]
    assert len(A3.reduced_words(A3.longest)) == 16


def test_reduced_words_are_reduced_and_equal(B2):
    for w in B2.elements():
        for word in B2.reduced_words(w):
            assert len(word) == w.length
            assert B2.element(word) == w


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "G2"])
def test_length_grading_symmetric(name):
    rs = RootSystem.from_name(name)
    N = rs.longest.length
    counts = [0] * (N + 1)
    for w in rs.elements():
        counts[w.length] += 1
        for i in range(1, rs.rank + 1):
            assert abs(rs.mul(w, rs.element((i,))).length - w.length) == 1
    assert counts == counts[::-1]


def test_freudenthal_examples(A2):
    assert A2.freudenthal_character((1, 0)) == {(-1, 1): 1, (0, -1): 1, (1, 0): 1}
    assert A2.freudenthal_character((0, 0)) == {(0, 0): 1}
    char = A2.freudenthal_character((2, 2))
    assert sum(char.values()) == 27
    assert char[(0, 0)] == 3


def test_freudenthal_rejects_non_dominant(A2):
    with pytest.raises(NotDominant):
        A2.freudenthal_character((1, -1))


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "B2", "G2"])
def test_freudenthal_total_is_weyl_dimension(name):
    rs = RootSystem.from_name(name)
    for lam in itertools.product(range(5), repeat=rs.rank):
        if sum(lam) <= 4:
            assert sum(rs.freudenthal_character(lam).values()) == rs.weyl_dimension(lam)


def test_demazure_examples(A2):
    assert A2.demazure_character((1, 0), A2.element("1")) == {(-1, 1): 1, (1, 0): 1}
    assert A2.demazure_character((2, 1), A2.identity) == {(2, 1): 1}
    assert A2.demazure_character((2, 1), A2.longest) == A2.freudenthal_character((2, 1))


def test_demazure_word_independence(A3):
    lam = (1, 1, 1)
    for word in A3.reduced_words(A3.longest)[:4]:
        f = {lam: 1}
        for i in reversed(word):
            f = A3.demazure_operator(i, f)
        assert f == A3.freudenthal_character(lam)


words = st.lists(st.integers(min_value=1, max_value=3), max_size=10)
weights = st.tuples(*[st.integers(min_value=-4, max_value=4)] * 3)


@settings(max_examples=200, deadline=None)
@given(words, weights)
def test_word_action_matches_element_action(word, mu):
    rs = RootSystem.from_name("A3")
    expected = tuple(mu)
    for i in reversed(word):
        expected = rs.reflect(i, expected)
    assert rs.act(rs.element(word), mu) == expected


@settings(max_examples=200, deadline=None)
@given(words, weights, st.integers(min_value=0, max_value=5))
def test_action_preserves_pairing(word, mu, k):
    rs = RootSystem.from_name("A3")
    w = rs.element(word)
    beta = rs.positive_roots[k]
    image = rs.weight_to_root_coords(rs.act(w, rs.root_to_weight(beta)))
    wbeta = tuple(int(x) for x in image)
    assert rs.pairing(rs.act(w, mu), wbeta) == rs.pairing(mu, beta)
