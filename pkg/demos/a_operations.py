"""Tour of the algebra A at N = 3: products, gradings, and which long
sequences carry a higher operation.

    python demos/a_operations.py
"""
from ainfty import algebra_a as aa
from ainfty.algebra_a import AlgebraA
from ainfty.sweeps import recognition_census

N = 3
A = AlgebraA(N)
show = aa.element_text

# U's multiply only with U's of the same index, and chords compose when
# the spokes line up.
print("U1 * U1     =", show(A.mul(A.U(1), A.U(1))))
print("s1 * s2     =", show(A.mul(A.s(1), A.s(2))))
print("s1 * s3     =", show(A.mul(A.s(1), A.s(3))))
print("U1 * s1     =", show(A.mul(A.U(1), A.s(1))))

# Gradings: Maslov degree and the Alexander vector over the 2N boundary slots.
for t in (A.U(2), A.s(2), A.s(1, 3)):
    print("%-6s maslov %3d  alexander %s" % (aa.term_text(t), A.maslov(t), A.alexander(t)))

# A weighted mu_0 is a constant: e_i gives U_i, and e_{N+1} gives the
# sum of the N full loops.
for i in range(1, N + 2):
    w = A.weight(**{"e%d" % i: 1})
    print("mu_0^e%d     =" % i, show(A.mu(w, [])))

# Every chained 6-letter word of single U's and s's, fed to mu_6 with no
# weight. Only the rotations of the full turn survive, each giving V0.
total, found = recognition_census(N, 1)
print("\n%d chained six-letter sequences, %d operations:" % (total, len(found)))
for seq, out in found:
    print("  mu_6(%s) = %s" % (", ".join(seq), out))

# Lengthen the last chord by one step and the sequence overshoots the full
# turn: it is read as a right extension and the overhang comes out.
seq = [A.U(1), A.s(1), A.U(2), A.s(2), A.U(3), A.s(3, 2)]
print("\nclassify(U1 s1 U2 s2 U3 s3,2) ->", A.classify(A.zero, seq))
print("mu_6(U1, s1, U2, s2, U3, s3,2) =", show(A.mu_terms(A.zero, seq)))

# Relations: the sum over all ways of nesting two operations vanishes.
w = A.weight(e2=1)
seq = [A.U(1), A.s(1), A.s(2), A.U(3), A.s(3)]
print("relation terms for e2 on (U1, s1, s2, U3, s3):")
for p, q, inner, out in A.relation_terms(w, seq):
    print("  inner block %d..%d weight %s -> %s" % (p, q, inner, show(out)))
print("relation sum =", show(A.relation_sum(w, seq)))
