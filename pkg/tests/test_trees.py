import pytest
from hypothesis import given, settings, strategies as st

from ainfty import trees as tr
from ainfty.ring import unit_vec, wadd, weights_up_to, zero_vec

N = 3
Z = zero_vec(N)
P = lambda text: tr.parse_tree(text, N)


def test_dimensions():
    for n in range(2, 7):
        assert tr.dim(tr.corolla(n, Z)) == n - 2
    assert tr.dim(tr.STUMP) == 0
    assert tr.dim(tr.SHOOT) == 0


def test_unweighted_tree_counts():
    # little Schroeder numbers: planar trees with every vertex at least trivalent
    assert [len(tr.trees_with(n, Z)) for n in range(2, 7)] == [1, 3, 11, 45, 197]


def test_boundary_of_small_corollas():
    assert tr.boundary(tr.corolla(2, Z)) == frozenset()
    assert tr.boundary(tr.corolla(3, Z)) == {P("((* *) *)"), P("(* (* *))")}


# the differential commutes with relabelling weights, so one weight per shape suffices
SHAPES = [Z, unit_vec(N, 1), unit_vec(N, 1, 2), wadd(unit_vec(N, 1), unit_vec(N, 2))]


@pytest.mark.parametrize("n", range(0, 6))
@pytest.mark.parametrize("w", SHAPES, ids=["0", "e1", "2e1", "e1+e2"])
def test_boundary_squares_to_zero(n, w):
    if n + 2 * sum(w) < 2:
        return
    for t in tr.trees_with(n, w):
        assert tr.boundary_chain(tr.boundary(t)) == frozenset()
        assert all(tr.dim(s) == tr.dim(t) - 1 for s in tr.boundary(t))


def test_boundary_commutes_with_relabelling():
    perm = [3, 0, 4, 1, 2]
    for t in tr.trees_with(3, wadd(unit_vec(N, 1), unit_vec(N, 2))):
        moved = frozenset(tr.relabel(s, perm) for s in tr.boundary(t))
        assert moved == tr.boundary(tr.relabel(t, perm))


def test_gluing_rules():
    t = P("((* *) * *)")
    assert tr.glue(t, 2, tr.SHOOT) == t
    assert tr.glue(tr.corolla(2, Z), 1, tr.STUMP) == tr.SHOOT
    assert tr.glue(tr.corolla(4, Z), 2, tr.STUMP) is None
    assert tr.stack(1, 2, 3, tr.corolla(2, Z), tr.corolla(2, Z)) == P("((* *) *)")
    with pytest.raises(IndexError):
        tr.glue(t, 5, tr.corolla(2, Z))


small_trees = st.sampled_from([t for n in range(2, 5) for w in weights_up_to(N, 1)
                               for t in tr.trees_with(n, w)])


@settings(max_examples=60)
@given(small_trees, small_trees, st.integers(1, 4))
def test_gluing_adds_weights_and_dimensions(s, t, i):
    i = min(i, tr.n_inputs(t))
    g = tr.glue(t, i, s)
    assert tr.weight_vector(g, N) == wadd(tr.weight_vector(s, N), tr.weight_vector(t, N))
    assert tr.n_inputs(g) == tr.n_inputs(s) + tr.n_inputs(t) - 1
    assert tr.dim(g) == tr.dim(s) + tr.dim(t)


@given(small_trees)
def test_text_round_trip(t):
    assert P(tr.to_text(t)) == t


def test_profiles():
    t = P("([e1](* *) [e0](* * *))")
    assert tr.profile(t, range(1, 6)) == P("((* *) (* * *))")
    assert tr.profile(tr.corolla(5, unit_vec(N, 2)), [1, 3]) == tr.corolla(2, Z)
    left = P("((* *) *)")
    assert tr.profile(left, [1, 2, 3]) == left


def test_right_moving_basics():
    c3 = tr.corolla(3, Z)
    left, right = P("((* *) *)"), P("(* (* *))")
    # a corolla profile is both left and right, so max <= min fails
    assert not tr.is_right_moving(c3, c3)
    assert tr.is_right_moving(c3, right) and tr.is_right_moving(left, c3)
    assert tr.is_right_moving(left, right)
    assert not tr.is_right_moving(right, left)


def test_relabel_moves_weight():
    t = tr.corolla(2, unit_vec(N, 1))
    perm = [0, 2, 1, 3, 4]
    assert tr.relabel(t, perm) == tr.corolla(2, unit_vec(N, 2))
