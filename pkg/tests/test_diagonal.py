import pytest

from ainfty import trees as tr
from ainfty.diagonal import (Diagonal, DiagonalError, chain_boundary, default_seeds, pair_dim,
                             pair_key, verify_diagonal)
from ainfty.ring import unit_vec, zero_vec

N = 3
Z = zero_vec(N)
P = lambda text: tr.parse_tree(text, N)


@pytest.fixture(scope="module")
def diag():
    return Diagonal(N, max_inputs=5, max_weight=1).build()


def test_base_values(diag):
    psi2 = tr.corolla(2, Z)
    assert diag.gamma(psi2) == {(psi2, psi2)}
    e0 = unit_vec(N, 0)
    assert diag.gamma(tr.corolla(0, e0)) == {(tr.STUMP, tr.corolla(0, e0))}
    e2 = unit_vec(N, 2)
    assert diag.gamma(tr.corolla(0, e2)) == {(tr.corolla(0, e2), tr.STUMP)}


def test_three_corolla_is_right_moving(diag):
    got = sorted(pair_key(p) for p in diag.gamma(tr.corolla(3, Z)))
    assert got == [("((* *) *)", "(* * *)"), ("(* * *)", "(* (* *))")]


def test_chain_map_and_dimension(diag):
    for n in range(2, 6):
        psi = tr.corolla(n, Z)
        g = diag.gamma(psi)
        assert all(pair_dim(p) == n - 2 for p in g)
        assert chain_boundary(g) == diag.gamma_chain(tr.boundary(psi))


def test_axioms_within_caps(diag):
    r = verify_diagonal(diag)
    assert r["violations"] == []
    assert r["counts"]["trees"] > 0


def test_relabelled_weights_agree(diag):
    e1, e3 = unit_vec(N, 1), unit_vec(N, 3)
    perm = [0, 3, 2, 1, 4]
    g1 = diag.gamma(tr.corolla(2, e1))
    g3 = diag.gamma(tr.corolla(2, e3))
    assert g3 == {(tr.relabel(s, perm), tr.relabel(t, perm)) for s, t in g1}


def test_deleted_summand_is_detected():
    d = Diagonal(N, max_inputs=4, max_weight=0).build()
    key = (4, Z)
    chain = sorted(d._corollas[key], key=pair_key)
    d._corollas[key] = frozenset(chain[1:])
    d._cache.clear()
    kinds = {v[0] for v in verify_diagonal(d)["violations"]}
    assert kinds & {"WD1", "chain-map"}


def test_stump_pair_is_detected():
    d = Diagonal(N, max_inputs=3, max_weight=1).build()
    key = (0, unit_vec(N, 1))
    d._corollas[key] = d._corollas[key] | {(tr.STUMP, tr.STUMP)}
    d._cache.clear()
    kinds = {v[0] for v in verify_diagonal(d)["violations"]}
    assert "WD4c" in kinds


def test_outside_caps_raises(diag):
    with pytest.raises(DiagonalError):
        diag.gamma(tr.corolla(9, Z))
    with pytest.raises(DiagonalError):
        diag.gamma(tr.STUMP)


def test_seeds_follow_weight_side():
    seeds = default_seeds(N)
    assert all(next(iter(seeds[i]))[1] == tr.STUMP for i in range(1, N + 2))
    assert next(iter(seeds[0]))[0] == tr.STUMP
