"""The algebra B at N = 3: words, the differential, higher products and
the homology of short words.

    python demos/b_algebra.py
"""
from ainfty import algebra_b as ab
from ainfty.algebra_b import AlgebraB
from ainfty.ring import unit_vec

N = 3
B = AlgebraB(N)
show = lambda x: ab.element_text(x, N)
word = lambda text: (B.zero, ab.parse_word(text, N))

# Words are written right to left: "r2.s1" is sigma_1 followed by rho_2.
for text in ("r1", "s1", "r2.s1", "s2.r2.s1"):
    t = word(text)
    print("%-9s maslov %3d  alexander %s" % (text, B.maslov(t), B.alexander(t)))

# The differential removes a rho or splits off a V.
for text in ("r1", "r2.s1", "r2.s1.r1", "s1.r1.s3"):
    print("d(%s) = %s" % (text, show(B.diff(word(text)))))

# Products of up to N words, and the curvature U0 = mu_0^{e0}.
print("\nmu_2(s2, s1) =", show(B.mu(B.zero, [{word("s2")}, {word("s1")}])))
print("mu_3(s3, s2, s1) =", show(B.mu(B.zero, [{word("s3")}, {word("s2")}, {word("s1")}])))
print("U0 =", show(B.mu(unit_vec(N, 0), [])))
print("d(U0) =", show(B.mu(B.zero, [B.mu(unit_vec(N, 0), [])])))

# Homology of words of sigma-length <= 2: six classes, and every V_i
# times an idempotent is a boundary.
h = B.homology(2)
print("\nclasses:", ", ".join(sorted(show(frozenset(c)) for c in h["classes"])))
for name, ok in h["boundaries"]:
    print("%s is a boundary: %s" % (name, ok))
