"""The beta-bordered A-infinity algebra.

A word is ('w', start, ell, lrho, rrho): reading along the path from the
start idempotent it is
  [rho_start] sigma_start rho_{start+1} sigma_{start+1} ... sigma_top [rho_{top+1}]
with top = start + ell - 1, and it is written right to left in the usual
notation, e.g. rho_2 sigma_1 starts at 1. A bare rho_i is ('w', i, 0, False, True).
Idempotent units are ('i', i). Terms are (vmonomial, body); sequences are
given in written order (tau_k, ..., tau_1), so tau_1 is traversed first.

High-length outputs are produced by cutting a full turn of N sigmas off one
end of the sequence; the turn becomes V_{N+1} times the V's of its interior
rhos, and what is left over stays as a word.
"""
from itertools import product as iproduct

from .gf2 import Eliminator, Indexer
from .relations import AuditedOperations, multilinear, relation_sum, relation_terms
from .ring import (alex_add, alex_slot, alex_zero, alexander_of_vmonomial, check_N,
                   combo_sum, maslov_of_vmonomial, maslov_of_weight, unit_vec, vmul, wsize,
                   zero_vec)


def spoke(N, i, m=0):
    return (i - 1 + m) % N + 1


def word(start, ell, lrho=False, rrho=False):
    if ell == 0:
        if lrho == rrho:
            raise ValueError("a length-0 word is a single rho")
        return ("w", start, 0, False, True)
    return ("w", start, ell, bool(lrho), bool(rrho))


def rho(i):
    return word(i, 0, rrho=True)


def sigma(i):
    return word(i, 1)


def idem(i):
    return ("i", i)


def init_idem(b, N):
    return b[1]


def final_idem(b, N):
    if b[0] == "i":
        return b[1]
    return spoke(N, b[1], b[2])


def first_is_rho(b):
    return b[0] == "w" and b[4]


def last_is_rho(b):
    return b[0] == "w" and (b[3] or b[2] == 0)


def letters(b, N):
    """Path-order letters as ('r'|'s', index)."""
    if b[0] == "i":
        return []
    _, start, ell, lr, rr = b
    out = []
    if rr:
        out.append(("r", start))
    for m in range(ell):
        if m:
            out.append(("r", spoke(N, start, m)))
        out.append(("s", spoke(N, start, m)))
    if lr and ell:
        out.append(("r", spoke(N, start, ell)))
    return out


def mul_body(x, y, N):
    """x * y (y traversed first), None when zero."""
    if x[0] == "i":
        return y if final_idem(y, N) == x[1] else None
    if y[0] == "i":
        return x if init_idem(x, N) == y[1] else None
    if final_idem(y, N) != init_idem(x, N):
        return None
    if last_is_rho(y) == first_is_rho(x):
        return None
    return ("w", y[1], x[2] + y[2], last_is_rho(x), first_is_rho(y))


def u_zero(N):
    """U_0: the 2N full-loop words with exactly one exposed rho."""
    z = zero_vec(N)
    out = set()
    for i in range(1, N + 1):
        out.add((z, word(i, N, lrho=True)))
        out.add((z, word(i, N, rrho=True)))
    return frozenset(out)


# gradings

def b_maslov(t, N):
    return -len(letters(t[1], N)) + maslov_of_vmonomial(t[0], N)


def b_alexander(t, N):
    a = alexander_of_vmonomial(t[0], N)
    for kind, i in letters(t[1], N):
        a = alex_add(a, alex_slot(N, 2 * i - 1 if kind == "r" else 2 * i))
    return a


# high-length evaluation

def _flatten(bodies, N):
    """Describe an allowable-shaped sequence (written order) along the path.

    Returns (start, ell, B, lflank, rflank, cuts) where B[p] for 1 <= p < ell
    is 'r' or ',' between sigma number p-1 and p, and cuts lists the comma
    positions. Returns None when the shape condition fails.
    """
    path = list(reversed(bodies))
    k = len(path)
    for idx, b in enumerate(path):
        if b[0] != "w" or b[2] == 0:
            return None
        if idx > 0 and b[4]:
            return None
        if idx < k - 1 and b[3]:
            return None
    for y, x in zip(path, path[1:]):
        if final_idem(y, N) != init_idem(x, N):
            return None
    start = path[0][1]
    ell = sum(b[2] for b in path)
    B = [None] * ell
    commas = []
    pos = 0
    for idx, b in enumerate(path):
        for m in range(1, b[2]):
            B[pos + m] = "r"
        pos += b[2]
        if idx < k - 1:
            B[pos] = ","
            commas.append(pos)
    return start, ell, B, path[-1][3], path[0][4], commas


def _turn_coeff(N, start, B, lo, hi):
    """V_{N+1} times V_lambda for each rho strictly inside sigma positions lo..hi."""
    v = [0] * (N + 2)
    v[N + 1] = 1
    for p in range(lo + 1, hi + 1):
        if B[p] == "r":
            v[spoke(N, start, p)] += 1
    return tuple(v)


def _cut_terms(N, start, ell, B, lflank, rflank, from_right, from_left):
    """Terms obtained by cutting a full turn off the allowed ends."""
    out = []
    if ell == N:
        if (lflank and rflank) or not (from_right or from_left):
            return out
        v = _turn_coeff(N, start, B, 0, N - 1)
        body = rho(start) if (lflank or rflank) else idem(start)
        out.append((v, body))
        return out
    if from_right and not rflank:
        # the first N sigmas along the path; the remainder starts with rho
        v = _turn_coeff(N, start, B, 0, N - 1)
        out.append((v, word(start, ell - N, lrho=lflank, rrho=True)))
    if from_left and not lflank:
        v = _turn_coeff(N, start, B, ell - N, ell - 1)
        out.append((v, word(start, ell - N, lrho=True, rrho=rflank)))
    return out


def diff_body(b, N):
    """Differential of a single word, as a list of (vmonomial, body)."""
    if b[0] == "i":
        return []
    _, start, ell, lr, rr = b
    out = []
    if ell == 0:
        return [(unit_vec(N, start), idem(start))]
    if lr:
        out.append((unit_vec(N, spoke(N, start, ell)), word(start, ell, rrho=rr)))
    if rr:
        out.append((unit_vec(N, start), word(start, ell, lrho=lr)))
    if ell >= N:
        B = ["r"] * ell
        out.extend(_cut_terms(N, start, ell, B, lr, rr, True, True))
    return out


def higher_body(bodies, N):
    """mu_k for k >= 2 on words (written order), excluding the plain product."""
    k = len(bodies)
    if k > N:
        return []
    flat = _flatten(bodies, N)
    if flat is None:
        return []
    start, ell, B, lflank, rflank, commas = flat
    if ell < N:
        return []
    len_first = commas[0]
    len_last = ell - commas[-1]
    s1 = ell - len_first >= N
    s2 = ell - len_last >= N
    if s1 and s2:
        return []
    # the right cut needs the remainder inside tau_k, the left cut inside tau_1
    return _cut_terms(N, start, ell, B, lflank, rflank, not s2, not s1)


class AlgebraB(AuditedOperations):
    def __init__(self, N):
        check_N(N)
        self.N = N
        self.zero = zero_vec(N)
        self._init_memo()

    def rho(self, i):
        return (self.zero, rho(i))

    def sigma(self, i):
        return (self.zero, sigma(i))

    def word(self, start, ell, lrho=False, rrho=False):
        return (self.zero, word(start, ell, lrho, rrho))

    def iota(self, i):
        return (self.zero, idem(i))

    def mul(self, x, y):
        b = mul_body(x[1], y[1], self.N)
        if b is None:
            return frozenset()
        return frozenset({(vmul(x[0], y[0]), b)})

    def diff(self, t):
        return combo_sum((vmul(t[0], v), b) for v, b in diff_body(t[1], self.N))

    def vanishes(self, w, terms):
        k = len(terms)
        if any(w):
            return not (k == 0 and w[0] == 1 and sum(w) == 1)
        return k == 0 or k > max(self.N, 2)

    def _mu_terms(self, w, terms):
        """Operation on single terms (written order); returns an element."""
        N = self.N
        w = tuple(w)
        k = len(terms)
        if wsize(w):
            if k == 0 and wsize(w) == 1 and w[0] == 1:
                return u_zero(N)
            return frozenset()
        if k == 0:
            return frozenset()
        if k == 1:
            return self.diff(terms[0])
        bodies = [t[1] for t in terms]
        raw = []
        if k == 2:
            b = mul_body(bodies[0], bodies[1], N)
            if b is not None:
                raw.append((None, b))
        if k <= N and not any(b[0] == "i" for b in bodies):
            raw.extend(higher_body(bodies, N))
        if not raw:
            return frozenset()
        coeff = terms[0][0]
        for t in terms[1:]:
            coeff = vmul(coeff, t[0])
        return combo_sum((coeff if v is None else vmul(coeff, v), b) for v, b in raw)

    def mu(self, w, elements):
        return multilinear(self.mu_terms, w, elements)

    def relation_terms(self, w, terms):
        """Every nonzero composite outer(..., inner(block), ...) for (w, terms).

        Entries are (p, q, inner weight, output); the block is terms[p:q].
        """
        return relation_terms(self.mu_terms, w, terms)

    def relation_sum(self, w, terms):
        """Zero iff the weighted relation holds on this input sequence."""
        return relation_sum(self.mu_terms, w, terms)

    # gradings

    def maslov(self, t):
        return b_maslov(t, self.N)

    def alexander(self, t):
        return b_alexander(t, self.N)

    def check_grading(self, w, terms, out):
        N = self.N
        m_in = sum(self.maslov(t) for t in terms) + maslov_of_weight(w, N) + len(terms) - 2
        a_in = alexander_of_vmonomial(w, N)
        for t in terms:
            a_in = alex_add(a_in, self.alexander(t))
        return all(self.maslov(t) == m_in and self.alexander(t) == a_in for t in out)

    # structural predicates on sequences

    def total_length(self, terms):
        return sum(t[1][2] for t in terms if t[1][0] == "w")

    def is_allowable(self, terms):
        N = self.N
        bodies = [t[1] for t in terms]
        if not 1 <= len(bodies) <= N:
            return False
        flat = _flatten(bodies, N)
        if flat is None:
            return False
        start, ell, B, lflank, rflank, commas = flat
        if ell < N:
            return False
        s1 = bool(commas) and ell - commas[0] >= N
        s2 = bool(commas) and commas[-1] >= N
        if s1 and s2:
            return False
        if lflank and rflank:
            return False
        if lflank and s2 and not s1:
            return False
        if rflank and s1 and not s2:
            return False
        return True

    # words within bounds

    def all_words(self, max_len):
        out = []
        for start in range(1, self.N + 1):
            out.append(rho(start))
            for ell in range(1, max_len + 1):
                for lr in (False, True):
                    for rr in (False, True):
                        out.append(word(start, ell, lr, rr))
        return out

    def homology(self, max_len, max_exp=1):
        """Homology of words of sigma-length <= max_len with V-exponents <= max_exp.

        The complex is truncated by the ideal of V-monomials with some exponent
        above max_exp, which is preserved by the differential. Returns a dict:
          'classes'  V-free representatives of classes of positive length
          'boundaries'  (label, bool) for V_i * idempotent being a boundary
        """
        N = self.N
        bodies = self.all_words(max_len) + [idem(i) for i in range(1, N + 1)]
        monos = [tuple(e) for e in iproduct(range(max_exp + 1), repeat=N + 2)]

        def ok(v):
            return max(v) <= max_exp

        rows = Indexer()
        boundary = Eliminator()
        for b in bodies:
            for v in monos:
                d = [(vmul(v, dv), db) for dv, db in diff_body(b, N)]
                d = [x for x in combo_sum(d) if ok(x[0])]
                boundary.add_column(rows.vector(d))
        # V-free cycles among positive-length words
        z = self.zero
        free = [b for b in bodies if b[0] == "w"]
        cyc = Eliminator()
        cycles = []
        basis_vecs = []
        # kernel of d on the V-free span, via column reduction on (image | identity)
        index = {b: k for k, b in enumerate(free)}
        pending = []
        for b in free:
            img = rows.vector([x for x in combo_sum(diff_body(b, N)) if ok(x[0])])
            pending.append((img, 1 << index[b]))
        piv = {}
        kernel = []
        for img, tag in pending:
            while img:
                low = img & -img
                if low not in piv:
                    piv[low] = (img, tag)
                    break
                img ^= piv[low][0]
                tag ^= piv[low][1]
            if not img:
                kernel.append(tag)
        classes = []
        for tag in kernel:
            chain = [(z, free[k]) for k in range(len(free)) if tag >> k & 1]
            vec = rows.vector(chain)
            red, _ = boundary.reduce(vec)
            if red and cyc.add_column(red):
                classes.append(chain)
        checks = []
        for i in range(1, N + 1):
            vec = rows.vector([(unit_vec(N, i), idem(i))])
            checks.append(("V%d" % i, boundary.solve(vec) is not None))
        return {"classes": classes, "boundaries": checks}


# text syntax

def body_text(b, N):
    if b[0] == "i":
        return "i%d" % b[1]
    parts = []
    for kind, i in reversed(letters(b, N)):
        parts.append(("r%d" if kind == "r" else "s%d") % i)
    return ".".join(parts)


def term_text(t, N):
    from .algebra_a import vmono_text
    v = vmono_text(t[0])
    b = body_text(t[1], N)
    return v + "*" + b if v else b


def element_text(x, N):
    if not x:
        return "0"
    return " + ".join(sorted(term_text(t, N) for t in x))


def parse_word(text, N):
    """Inverse of body_text for a single word such as 'r2.s1.r1' or 'i3'."""
    text = text.replace(" ", "")
    if text.startswith("i"):
        return idem(int(text[1:]))
    toks = [(p[0], int(p[1:])) for p in text.split(".")]
    path = list(reversed(toks))
    if len(path) == 1 and path[0][0] == "r":
        return rho(path[0][1])
    rr = path[0][0] == "r"
    lr = path[-1][0] == "r"
    sig = [i for kind, i in path if kind == "s"]
    b = word(sig[0], len(sig), lr, rr)
    if [tuple(x) for x in letters(b, N)] != path:
        raise ValueError("not an alternating word: %r" % text)
    return b
