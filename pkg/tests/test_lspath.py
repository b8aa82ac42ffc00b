import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pathsmt.lspath import (
    BadTurningPoints, ChainNotDecreasing, NotLSPath, StringIncomplete, apply_lowering,
    demazure_subset, enumerate_B, enumerate_ls_direct, epsilon, make_path, path_character,
    path_from_json, path_weight, phi, root_op_e, root_op_f, straight_path, string,
)
from pathsmt.rootsys import RootSystem


@pytest.fixture(scope="module")
def zero_paths(A2):
    return (make_path(A2, (2, 2), ["21", "1"], ["1/2"]),
            make_path(A2, (2, 2), ["121", ""], ["1/2"]),
            make_path(A2, (2, 2), ["12", "2"], ["1/2"]))


def test_validate_examples(A2, zero_paths):
    pi1 = zero_paths[0]
    assert pi1.words == ((2, 1), (1,))
    assert pi1.a == (Fraction(1, 2),)
    assert straight_path(A2, (3, 1)).is_straight()


def test_validate_rejects_bad_integrality(A2):
    with pytest.raises(NotLSPath) as info:
        make_path(A2, (1, 1), ["121", ""], ["1/3"])
    assert info.value.segment == 1


def test_validate_rejects_bad_chains(A2):
    with pytest.raises(ChainNotDecreasing):
        make_path(A2, (1, 1), ["1", "2"], ["1/2"])
    with pytest.raises(ChainNotDecreasing):
        make_path(A2, (1, 1), ["1", "1"], ["1/2"])
    with pytest.raises(BadTurningPoints):
        make_path(A2, (1, 1), ["121", ""], ["1/2", "3/4"])
    with pytest.raises(BadTurningPoints):
        make_path(A2, (1, 1), ["121", ""], ["1"])


def test_json_round_trip(A2, zero_paths):
    for p in zero_paths:
        text = '{"lambda": [2, 2], "chain": %s, "a": %s}' % (
            str([str(c) for c in p.chain]).replace("'", '"'), str([str(x) for x in p.a]).replace("'", '"'))
        assert path_from_json(A2, text) == p
        assert make_path(A2, p.lam, p.to_dict()["chain"], p.to_dict()["a"]) == p


def test_path_weight_examples(A2, zero_paths):
    assert [path_weight(A2, p) for p in zero_paths] == [(0, 0)] * 3
    assert path_weight(A2, straight_path(A2, (3, 1))) == (3, 1)
    assert path_weight(A2, make_path(A2, (1, 0), ["21"])) == (0, -1)


def test_root_operator_examples(A2, zero_paths):
    pi1, _, pi3 = zero_paths
    assert root_op_f(A2, straight_path(A2, (1, 0)), 1) == make_path(A2, (1, 0), ["1"])
    for i in (1, 2):
        assert root_op_e(A2, straight_path(A2, (2, 2)), i) is None
    top = straight_path(A2, (2, 2))
    # composition order: the rightmost operator acts first
    assert apply_lowering(A2, top, [2, 2, 1, 1]) == pi1
    assert apply_lowering(A2, top, [1, 1, 2, 2]) == pi3


def test_string_examples(A2, zero_paths):
    pi1, pi2, pi3 = zero_paths
    assert string(A2, straight_path(A2, (2, 2)), (1, 2, 1)) == [0, 0, 0]
    assert string(A2, pi1, (2, 1, 2)) == [2, 2, 0]
    assert string(A2, pi3, (1, 2, 1)) == [2, 2, 0]
    assert string(A2, pi1, (1, 2, 1)) == [0, 2, 2]
    with pytest.raises(StringIncomplete):
        string(A2, pi2, (1,))


def test_string_inverts_lowering(A2):
    top = straight_path(A2, (2, 1))
    for p in enumerate_B(A2, (2, 1)):
        for word in ((1, 2, 1), (2, 1, 2)):
            ns = string(A2, p, word)
            ops = [i for i, n in zip(word, ns) for _ in range(n)]
            assert apply_lowering(A2, top, ops) == p


def test_enumerate_examples(A2, zero_paths):
    assert len(enumerate_B(A2, (1, 0))) == 3
    assert len(enumerate_B(A2, (0, 0))) == 1
    B = enumerate_B(A2, (2, 2))
    assert len(B) == 27
    zero = [p for p in B if path_weight(A2, p) == (0, 0)]
    assert set(zero) == set(zero_paths) and len(zero) == 3
    assert B == sorted(B, key=lambda p: p.sort_key())


def test_demazure_examples(A2):
    lam = (2, 1)
    assert demazure_subset(A2, lam, A2.longest) == enumerate_B(A2, lam)
    assert demazure_subset(A2, lam, A2.identity) == [straight_path(A2, lam)]
    assert len(demazure_subset(A2, (1, 0), A2.element("1"))) == 2


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "B2", "G2"])
def test_character_identity_small(name):
    rs = RootSystem.from_name(name)
    for lam in itertools.product(range(3), repeat=rs.rank):
        if sum(lam) <= 2:
            assert path_character(rs, enumerate_B(rs, lam)) == rs.freudenthal_character(lam)
            for tau in rs.elements():
                got = path_character(rs, demazure_subset(rs, lam, tau))
                assert got == rs.demazure_character(lam, tau)


@pytest.mark.parametrize("name", ["A2", "B2"])
def test_closure_equals_direct_enumeration(name):
    rs = RootSystem.from_name(name)
    for lam in itertools.product(range(3), repeat=2):
        if sum(lam) <= 2:
            assert enumerate_ls_direct(rs, lam) == enumerate_B(rs, lam)


@pytest.mark.parametrize("name, lam", [("A2", (2, 1)), ("B2", (1, 2)), ("G2", (1, 1)), ("A3", (1, 0, 1))])
def test_crystal_axioms(name, lam):
    rs = RootSystem.from_name(name)
    for p in enumerate_B(rs, lam):
        wt = path_weight(rs, p)
        for i in range(1, rs.rank + 1):
            alpha = rs.simple_root_weight(i)
            f = root_op_f(rs, p, i)
            e = root_op_e(rs, p, i)
            assert (f is None) == (phi(rs, p, i) == 0)
            assert (e is None) == (epsilon(rs, p, i) == 0)
            assert phi(rs, p, i) - epsilon(rs, p, i) == wt[i - 1]
            if f is not None:
                assert root_op_e(rs, f, i) == p
                assert path_weight(rs, f) == tuple(x - y for x, y in zip(wt, alpha))
            if e is not None:
                assert root_op_f(rs, e, i) == p


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(min_value=1, max_value=2), max_size=12))
def test_random_lowering_stays_valid(ops):
    rs = RootSystem.from_name("B2")
    p = apply_lowering(rs, straight_path(rs, (2, 2)), ops)
    if p is not None:
        again = make_path(rs, p.lam, p.to_dict()["chain"], p.to_dict()["a"])
        assert again == p
        assert p in enumerate_B(rs, (2, 2))
