"""The bimodules X and Y and the two box tensor products built from them.

    python demos/duality.py
"""
from ainfty import algebra_a as aa
from ainfty import algebra_b as ab
from ainfty.bimodules import (BimoduleX, BimoduleY, BoxTensor, Homomorphism,
                              dd_relation_check, verify_duality)
from ainfty.report import dd_term_text
from ainfty.ring import unit_vec, zero_vec

N = 3
z = zero_vec(N)

X = BimoduleX(N)
for a, b, y in X.delta1(1):
    print("delta1(x1) contains %s (x) %s (x) x%d" % (aa.term_text(a), ab.term_text(b, N), y))

# Y pairs letters of A with letters of B along a common path.
Y = BimoduleY(N)
print("\nm(r1, {1}, U1) =", Y.m(z, [(z, ab.rho(1))], 1, [(z, aa.upow(1))]))
print("m(s1, {1}, s1) =", Y.m(z, [(z, ab.sigma(1))], 1, [(z, aa.chord(1))]))
print("m(r1, {1}, s1) =", Y.m(z, [(z, ab.rho(1))], 1, [(z, aa.chord(1))]) or "0")

# The DD relation at N = 3: every surviving term shows up exactly twice.
r = dd_relation_check(N)
print("\nDD relation: %d contributions, sum zero: %s" % (r["contributions"], r["sum_is_zero"]))
for key, count in sorted(r["term_counts"].items(), key=lambda kv: dd_term_text(kv[0], N)):
    print("  %dx  %s" % (count, dd_term_text(key, N)))

# X [x] Y has no differential and delta^1_2 passes algebra elements through,
# so it reads off a homomorphism phi_1 that is the identity.
box = BoxTensor(N, "XY")
phi = Homomorphism(box)
for body in (aa.upow(2, 2), aa.chord(3, 2)):
    print("phi_1(%s) = %s" % (aa.body_text(body), aa.element_text(phi.phi1((z, body)))))
res = verify_duality(N, max_len=2)
print("duality checks:", res["counts"], "failures:", len(res["failures"]))
