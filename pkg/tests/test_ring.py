import pytest
from hypothesis import given, strategies as st

from ainfty.ring import (Caps, Params, alex_slot, alexander_of_vmonomial, alexander_of_weight,
                         combo_add, combo_sum, maslov_of_vmonomial, maslov_of_weight, unit_vec,
                         weight_splits, weights_up_to, wsize, zero_vec)

N = 3


def slots(*ks):
    a = [0] * (2 * N)
    for k in ks:
        a[k - 1] += 1
    return tuple(a)


def test_weight_maslov():
    assert maslov_of_weight(zero_vec(N), N) == 0
    assert maslov_of_weight(unit_vec(N, 0), N) == -4
    w = tuple(x + y for x, y in zip(unit_vec(N, 1), unit_vec(N, N + 1)))
    assert maslov_of_weight(w, N) == 4


def test_weight_alexander():
    assert alexander_of_weight(unit_vec(N, 2), N) == slots(3)
    assert alexander_of_weight(unit_vec(N, N + 1), N) == slots(2, 4, 6)
    assert alexander_of_weight(unit_vec(N, 0), N) == slots(1, 2, 3, 4, 5, 6)


def test_monomial_maslov():
    assert maslov_of_vmonomial(unit_vec(N, 0), N) == 4
    v = tuple(x + y for x, y in zip(unit_vec(N, 1), unit_vec(N, 2)))
    assert maslov_of_vmonomial(v, N) == -4
    assert maslov_of_vmonomial(zero_vec(N), N) == 0
    assert alexander_of_vmonomial(unit_vec(N, N + 1), N) == slots(2, 4, 6)


def test_alex_slot_wraps():
    assert alex_slot(N, 7) == alex_slot(N, 1)


def test_char_two_sums():
    t1, t2 = ("a",), ("b",)
    assert combo_sum([t1, t1]) == frozenset()
    assert combo_add({t1}, frozenset()) == {t1}
    assert combo_add({t1, t2}, {t2}) == {t1}


@given(st.lists(st.integers(0, 5), max_size=12))
def test_combo_sum_is_parity(xs):
    out = combo_sum(xs)
    assert out == frozenset(x for x in set(xs) if xs.count(x) % 2)


@given(st.integers(3, 5), st.integers(0, 2))
def test_weights_up_to(n, k):
    ws = weights_up_to(n, k)
    assert len(set(ws)) == len(ws)
    assert all(wsize(w) <= k and len(w) == n + 2 for w in ws)
    for w in ws:
        for a, b in weight_splits(w):
            assert tuple(x + y for x, y in zip(a, b)) == w


def test_params_reject_small_n():
    with pytest.raises(ValueError):
        Params(2)
    assert Params(3, Caps(max_inputs=4)).caps.max_inputs == 4
