"""End-to-end acceptance checks at desk scale, one test per numbered check.

Each check is computed once per session; the grading check reuses the
audits of the runs before it. Time limits are asserted alongside the
results.
"""
import time

import pytest

from ainfty import trees as tr
from ainfty.algebra_a import AlgebraA
from ainfty.algebra_b import AlgebraB, element_text
from ainfty.bimodules import BimoduleY, dd_relation_check, verify_duality, verify_phi_vanishing
from ainfty.diagonal import Diagonal, verify_diagonal
from ainfty.relations import audit_summary
from ainfty.ring import unit_vec, zero_vec
from ainfty.sweeps import recognition_census, sweep_a, sweep_b

pytestmark = pytest.mark.slow

N = 3
AUDITS = {}


def timed(fn, *args, **kw):
    start = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - start


def criterion(n, name):
    return pytest.mark.criterion(n, name)


@pytest.fixture(scope="session")
def census():
    A = AlgebraA(N)
    r, wall = timed(recognition_census, N, 1, None, A)
    AUDITS["census A"] = audit_summary(A.audit)
    return r, wall


@pytest.fixture(scope="session")
def a_sweeps():
    out = {}
    for n in (3, 4, 5):
        r, wall = timed(sweep_a, n, samples=10000, seed=0, max_weight=2)
        AUDITS["A relations N=%d" % n] = r["grading"]
        out[n] = (r, wall)
    return out


@pytest.fixture(scope="session")
def b_sweep():
    r, wall = timed(sweep_b, N, max_k=5, max_total=2 * N + 2)
    AUDITS["B relations"] = r["grading"]
    return r, wall


@pytest.fixture(scope="session")
def dd():
    A, B = AlgebraA(N), AlgebraB(N)
    r, wall = timed(dd_relation_check, N, A=A, B=B)
    AUDITS["DD A"] = audit_summary(A.audit)
    AUDITS["DD B"] = audit_summary(B.audit)
    return r, wall


@pytest.fixture(scope="session")
def duality():
    Y = BimoduleY(N)
    start = time.perf_counter()
    r = verify_duality(N, max_len=3, Y=Y)
    v = verify_phi_vanishing(N, K=4)
    wall = time.perf_counter() - start
    AUDITS["duality Y"] = audit_summary(Y.audit)
    AUDITS["duality A"] = audit_summary(Y.A.audit)
    AUDITS["duality B"] = audit_summary(Y.B.audit)
    return r, v, wall


@criterion(1, "recognition census")
def test_recognition_census(census):
    (total, found), wall = census
    letters = ["U1", "s1,1", "U2", "s2,1", "U3", "s3,1"]
    rotations = sorted(tuple(letters[k:] + letters[:k]) for k in range(6))
    assert total == 192
    assert [seq for seq, _ in found] == rotations
    assert all(out.startswith("V0*i") for _, out in found)
    assert wall < 1.0


@criterion(2, "A relations, N = 3, 4, 5")
def test_a_relations(a_sweeps):
    for n, (r, wall) in a_sweeps.items():
        assert r["failures"] == [], n
        assert r["counts"]["random"] >= 10 ** 4
        assert r["counts"]["witnesses"] > 0
        assert r["counts"]["nontrivial"] > 0
    assert sum(wall for _, wall in a_sweeps.values()) < 300


@criterion(3, "B relations and d^2 = 0")
def test_b_relations(b_sweep):
    r, wall = b_sweep
    assert r["failures"] == []
    assert r["counts"]["words"] > 0 and r["counts"]["nontrivial"] > 0
    assert wall < 300


@criterion(4, "diagonal axioms")
def test_diagonal_axioms():
    start = time.perf_counter()
    d = Diagonal(N, max_inputs=6, max_weight=1).build()
    r = verify_diagonal(d)
    wall = time.perf_counter() - start
    assert r["violations"] == []
    z = zero_vec(N)
    psi2 = tr.corolla(2, z)
    assert d.gamma(psi2) == {(psi2, psi2)}
    for i in range(N + 2):
        psi = tr.corolla(0, unit_vec(N, i))
        want = (tr.STUMP, psi) if i == 0 else (psi, tr.STUMP)
        assert d.gamma(psi) == {want}
    assert wall < 120


@criterion(5, "DD relation and census")
def test_dd_census(dd):
    r, wall = dd
    assert r["sum_is_zero"]
    assert r["unexpected"] == []
    assert r["census_ok"]
    assert all(counts == [2] for counts in r["census"].values())
    assert wall < 120


@criterion(6, "duality")
def test_duality(duality):
    r, v, wall = duality
    assert r["failures"] == []
    assert v["failures"] == []
    assert v["counts"]["A"] > 0 and v["counts"]["B"] > 0
    assert wall < 60


@criterion(7, "bounded homology of B")
def test_homology():
    start = time.perf_counter()
    h = AlgebraB(N).homology(2)
    wall = time.perf_counter() - start
    got = sorted(element_text(frozenset(c), N) for c in h["classes"])
    assert got == ["s1", "s1.r1.s3", "s2", "s2.r2.s1", "s3", "s3.r3.s2"]
    assert [name for name, _ in h["boundaries"]] == ["V1", "V2", "V3"]
    assert all(ok for _, ok in h["boundaries"])
    assert wall < 30


@criterion(8, "grading laws")
def test_grading(census, a_sweeps, b_sweep, dd, duality):
    assert len(AUDITS) == 10
    for name, g in AUDITS.items():
        assert g["failures"] == [], name
    for name in ("census A", "A relations N=3", "B relations", "DD A", "DD B", "duality Y"):
        assert AUDITS[name]["operations"] > 0, name
