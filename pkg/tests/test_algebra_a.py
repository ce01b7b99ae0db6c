import random

import pytest
from hypothesis import given, settings, strategies as st

from ainfty import algebra_a as aa
from ainfty.algebra_a import AlgebraA, centered_table, chord, upow
from ainfty.sweeps import check_a_relations, random_a_sequence, recognition_census, sample_rng

N = 3
A = AlgebraA(N)
Z = A.zero


def seq(*bodies):
    return [(Z, b) for b in bodies]


def slots(*ks):
    a = [0] * (2 * N)
    for k in ks:
        a[k - 1] += 1
    return tuple(a)


BASIC = (upow(1), chord(1), upow(2), chord(2), upow(3), chord(3))


def test_products():
    assert aa.mul_body(chord(1), chord(2), N) == chord(1, 2)
    assert aa.mul_body(upow(1), chord(1), N) is None
    assert aa.a_mul_elements(aa.u_top(N), {A.s(1)}, N) == {(Z, chord(1, N + 1))}


def test_gradings():
    assert A.maslov(A.U(2)) == 0 and A.alexander(A.U(2)) == slots(3)
    assert A.maslov(A.s(1, 2)) == 0 and A.alexander(A.s(1, 2)) == slots(2, 4)
    assert A.alexander(A.s(1, N)) == slots(2, 4, 6)


def test_classification():
    assert A.classify(Z, seq(*BASIC)) == ("centered", None)
    rot = seq(chord(1, N + 1), upow(2), chord(2), upow(3), chord(3), upow(1))
    assert A.classify(Z, rot) == ("left", chord(1, N))
    w = A.weight(e2=1, e3=1)
    assert A.classify(w, seq(chord(1, N), upow(1))) == ("centered", None)


def test_basic_operations():
    v0 = aa.unit_vec(N, 0)
    assert A.mu_terms(Z, seq(*BASIC)) == {(v0, aa.idem(1))}
    assert A.mu_terms(A.weight(e2=1), seq(upow(1), chord(1, 2), upow(3), chord(3))) == {(v0, aa.idem(1))}
    rot = seq(chord(1, N + 1), upow(2), chord(2), upow(3), chord(3), upow(1))
    assert A.mu_terms(Z, rot) == {(v0, chord(1, N))}


def test_internal_cycle_operations():
    top = aa.unit_vec(N, N + 1)
    found = [s for w, s in centered_table(N, N, 1) if w == top and len(s) == N * (2 * N - 2)]
    assert found
    v0 = aa.unit_vec(N, 0, N)
    for s in found:
        out = A.mu_terms(top, seq(*s))
        assert out == {(v0, aa.idem(aa.init_idem(s[0], N)))}


def test_weighted_mu0():
    assert A.mu_terms(A.weight(e2=1), []) == {A.U(2)}
    assert A.mu_terms(A.weight(e4=1), []) == aa.u_top(N)
    assert A.mu_terms(A.weight(e0=1), []) == frozenset()


def test_census_is_the_rotations():
    total, found = recognition_census(N, 1)
    assert total == N * 2 ** (2 * N)
    assert len(found) == 2 * N
    assert all(out.startswith("V0*i") for _, out in found)


def test_push_against_pull():
    terms = A.relation_terms(A.weight(e2=1), seq(upow(1), chord(1), chord(2), upow(3), chord(3)))
    assert len(terms) == 2
    assert terms[0][3] == terms[1][3]
    assert A.relation_sum(A.weight(e2=1), seq(upow(1), chord(1), chord(2), upow(3), chord(3))) == frozenset()


def test_no_operation_means_no_terms():
    assert A.relation_terms(Z, seq(upow(1), chord(1), upow(2))) == []


def test_witness_families_hold():
    from ainfty.sweeps import a_witnesses
    r = check_a_relations(AlgebraA(N), a_witnesses(N, js=(1,), ks=(0, 1)))
    assert r["failures"] == [] and r["counts"]["nontrivial"] > 0


def test_nested_petal_inside_ring():
    # a ring closed around an already closed petal; both relation terms must be present
    w = A.weight(e1=1, e4=1)
    s = seq(chord(1, 2), upow(3, 2), chord(3), upow(1), chord(1), upow(2), upow(2))
    assert len(A.relation_terms(w, s)) == 2
    assert A.relation_sum(w, s) == frozenset()


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_random_relations(idx):
    w, bodies = random_a_sequence(sample_rng(7, idx), N)
    assert A.relation_sum(w, seq(*bodies)) == frozenset()


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_grading_law_on_accepted(idx):
    rng = random.Random(idx)
    w, s = rng.choice(sorted(centered_table(N, rng.choice((1, 2)), rng.choice((0, 1)))))
    out = A.mu_terms(w, seq(*s))
    assert out and A.check_grading(w, tuple(seq(*s)), out)


def test_text_round_trip():
    for b in (upow(2, 3), chord(3, 4), aa.idem(2)):
        t = (aa.unit_vec(N, 0, 2), b)
        assert aa.parse_term(aa.term_text(t), N) == t


def test_rejects_small_n():
    with pytest.raises(ValueError):
        AlgebraA(2)
