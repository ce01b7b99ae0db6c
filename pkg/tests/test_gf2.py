from hypothesis import given, strategies as st

from ainfty.gf2 import Eliminator, Indexer, bits, rank

vectors = st.lists(st.integers(0, 2 ** 10 - 1), max_size=12)


@given(vectors)
def test_rank_bounds(vs):
    r = rank(vs)
    assert 0 <= r <= min(len(vs), 10)
    assert rank(vs + vs) == r


@given(vectors, st.integers(0, 2 ** 10 - 1))
def test_solve_reproduces_target(vs, target):
    e = Eliminator()
    for v in vs:
        e.add_column(v)
    combo = e.solve(target)
    if combo is None:
        assert rank(vs + [target]) == rank(vs) + 1
    else:
        acc = 0
        for k in bits(combo):
            acc ^= vs[k]
        assert acc == target


def test_indexer_is_stable():
    ix = Indexer()
    assert ix.vector(["a", "b", "a"]) == ix.bit("b")
    assert bits(ix.vector(["a", "c"])) == [0, 2]
