"""Build the weighted diagonal on trees and look at its first values.

    python demos/diagonal.py
"""
from ainfty import trees as tr
from ainfty.diagonal import Diagonal, pair_key, verify_diagonal
from ainfty.ring import unit_vec, zero_vec

N = 3
z = zero_vec(N)

# The tree complex: the boundary of a corolla is the sum of all ways to
# insert one internal edge, and it squares to zero.
psi4 = tr.corolla(4, z)
print("d(C4) has %d trees; d^2 = %s" % (len(tr.boundary(psi4)),
                                      tr.boundary_chain(tr.boundary(psi4)) or "0"))

d = Diagonal(N, max_inputs=5, max_weight=1).build()
for n, w in ((2, z), (3, z), (0, unit_vec(N, 0)), (0, unit_vec(N, 1)), (1, unit_vec(N, 2)), (4, z)):
    chain = sorted(d.gamma(tr.corolla(n, w)), key=pair_key)
    print("\nGamma(%s), %d pairs" % (tr.to_text(tr.corolla(n, w)), len(chain)))
    for s, t in (pair_key(p) for p in chain[:6]):
        print("  %s  x  %s" % (s, t))

r = verify_diagonal(d)
print("\nchecked %d trees, %d pairs: %d violations" % (
    r["counts"]["trees"], r["counts"]["pairs"], len(r["violations"])))
