import random

import pytest
from hypothesis import given, settings, strategies as st

from ainfty import algebra_a as aa
from ainfty import algebra_b as ab
from ainfty import trees as tr
from ainfty.bimodules import (BimoduleX, BimoduleY, BoxTensor, Homomorphism, TensorAB,
                              basic_y_queries, box_tensor_delta, check_y_relations,
                              find_matching, random_y_query, verify_duality,
                              verify_phi_vanishing)
from ainfty.diagonal import Diagonal
from ainfty.ring import combo_sum, unit_vec, zero_vec

N = 3
Z = zero_vec(N)


def a(body, v=None):
    return (Z if v is None else v, body)


def b(body, v=None):
    return (Z if v is None else v, body)


@pytest.fixture(scope="module")
def Y():
    return BimoduleY(N)


@pytest.fixture(scope="module")
def tensor():
    return TensorAB(Diagonal(N, 4, 1).build())


# Y

def test_petal_pair(Y):
    assert Y.m(Z, [b(ab.rho(1))], 1, [a(aa.upow(1))]) == {1}


def test_spoke_pair_moves_generator(Y):
    assert Y.m(Z, [b(ab.sigma(1))], 1, [a(aa.chord(1))]) == {2}


def test_v0_absorbed_by_weight(Y):
    v0 = unit_vec(N, 0)
    assert Y.m(v0, [], 1, [a(aa.idem(1), v0)]) == {1}


def test_unmatched_letters_give_nothing(Y):
    assert Y.m(Z, [b(ab.sigma(1)), b(ab.rho(3))], 1, []) == frozenset()
    assert Y.m(Z, [b(ab.rho(1))], 1, [a(aa.chord(1))]) == frozenset()


def test_unit_acts_trivially(Y):
    assert Y.m(Z, [], 2, [a(aa.idem(2))]) == {2}
    assert Y.m(Z, [b(ab.rho(2))], 2, [a(aa.idem(2))]) == frozenset()


def test_matching_pairs_letters():
    m = find_matching(N, Z, [b(ab.rho(1))], [a(aa.upow(1))])
    assert m == [(("a", 0), ("b", 0))]


def test_petal_weight_absorbs_rho():
    w = unit_vec(N, 2)
    m = find_matching(N, w, [b(ab.rho(2))], [])
    assert m == [(("e", 2), ("b", 0))]
    assert find_matching(N, w, [], [a(aa.upow(2))]) is None


def test_matching_respects_order():
    # same letters, opposite order on the two sides
    as_ = [a(aa.upow(1)), a(aa.chord(1))]
    bs = [b(ab.rho(1)), b(ab.sigma(1))]
    assert find_matching(N, Z, bs, as_) is None
    assert find_matching(N, Z, list(reversed(bs)), as_) is not None


def test_grading_law_on_operations(Y):
    for w, bs, x, as_ in basic_y_queries(N, 3, 1):
        if Y.m(w, bs, x, as_):
            assert Y.check_grading(w, bs, x, as_)


@pytest.mark.parametrize("max_terms", [3, 4])
def test_relations_on_basic_letters(max_terms):
    r = check_y_relations(BimoduleY(N), basic_y_queries(N, max_terms, 1))
    assert r["failures"] == []
    assert r["counts"]["nontrivial"] > 0


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_relations_on_random_queries(seed):
    q = random_y_query(random.Random(seed), N)
    if q is None:
        return
    r = check_y_relations(BimoduleY(N), [q])
    assert r["failures"] == []


# X

def test_delta1_two_summands():
    d = BimoduleX(N).delta1(1)
    assert d == [(a(aa.upow(1)), b(ab.rho(1)), 1), (a(aa.chord(1)), b(ab.sigma(1)), 2)]


def test_delta_n_count():
    X = BimoduleX(N)
    for n in range(6):
        assert len(X.delta(2, n)) == 2 ** n


def test_delta1_wraps_around():
    assert BimoduleX(N).delta1(N)[1][2] == 1


# A (x) B

def test_differential_term(tensor):
    out = tensor.differential_terms([a(aa.upow(1))], [b(ab.rho(1))], 1, 1)
    assert out == [(unit_vec(N, 1), aa.upow(1), ab.idem(1))]


def test_curvature_pair(tensor):
    v0 = unit_vec(N, 0)
    (pair,) = tensor.d.gamma(tr.corolla(0, v0))
    out = tensor.pair_terms(pair, v0, [], [], 1, 1)
    assert sorted(out) == sorted([(v0, aa.idem(1), ab.word(1, N, lrho=True)),
                                  (v0, aa.idem(1), ab.word(1, N, rrho=True))])


def test_two_inputs_vanish(tensor):
    (pair,) = tensor.d.gamma(tr.corolla(2, Z))
    X = BimoduleX(N)
    for x in X.generators():
        for as_, bs, y in X.delta(x, 2):
            assert tensor.pair_terms(pair, Z, as_, bs, x, y) == []


# box tensor products and phi_1

@pytest.mark.parametrize("side", ["XY", "YX"])
def test_no_differential(side):
    box = BoxTensor(N, side)
    assert all(not box.delta(z, []) for z in box.generators())


def test_delta12_identity_on_letters():
    box = BoxTensor(N, "XY")
    assert box.delta(1, [a(aa.upow(1))]) == {(a(aa.upow(1)), 1)}
    assert box.delta(1, [a(aa.chord(1))]) == {(a(aa.chord(1)), 2)}
    box = BoxTensor(N, "YX")
    assert box.delta(2, [b(ab.sigma(2))]) == {(b(ab.sigma(2)), 3)}


def test_box_tensor_delta_argument_check():
    with pytest.raises(ValueError):
        box_tensor_delta(N, "XY", 1, [])
    with pytest.raises(ValueError):
        BoxTensor(N, "XX")


def test_phi1_identity_examples():
    phi = Homomorphism(BoxTensor(N, "XY"))
    for body in (aa.chord(1, 2), aa.upow(2, 2), aa.idem(3)):
        assert phi.phi1(a(body)) == {a(body)}
    x = frozenset({a(aa.upow(1)), a(aa.chord(2))})
    assert phi.phi1_element(x) == x
    phi = Homomorphism(BoxTensor(N, "YX"))
    w = b(ab.parse_word("r2.s1", N))
    assert phi.phi1(w) == {w}


def test_duality():
    r = verify_duality(N, max_len=2)
    assert r["failures"] == []
    assert r["counts"]["XY"]["pairs"] > 0 and r["counts"]["YX"]["pairs"] > 0


def test_higher_phi_have_no_room():
    r = verify_phi_vanishing(N, K=3)
    assert r["failures"] == []
    assert r["counts"]["A"] > 0 and r["counts"]["B"] > 0


def test_petal_summed_over_generators():
    # only the generator at the petal's idempotent contributes
    box = BoxTensor(N, "XY")
    total = combo_sum(alg for z in box.generators() for alg, _ in box.delta(z, [a(aa.upow(1))]))
    assert total == {a(aa.upow(1))}
