"""The alpha-bordered weighted A-infinity algebra.

Terms are (vmonomial, body) with body one of
  ('i', i)            idempotent unit of spoke i
  ('U', i, p)         U_i^p, p >= 1
  ('s', start, len)   the chord s_{start, start+len}, len >= 1 (may wrap past N)

Elements are frozensets of terms (coefficients in F2).

Higher operations are read off planar graphs. A centered unweighted graph
is a plane tree of 2N-valent vertices whose corners carry a rotation of
(U_1, s_1, ..., U_N, s_N); reading the boundary faces clockwise from the
root edge gives the inputs. Weight comes from closing an interior face:
a bare U_i face closes to a petal (e_i), a face reading s_1 s_2 ... s_N
closes to an internal cycle (e_{N+1}). Extensions add a factor on the
outer side of the first or last input.
"""
from functools import lru_cache

from .relations import AuditedOperations, multilinear, relation_sum, relation_terms
from .ring import (alex_add, alex_slot, alex_zero, alexander_of_vmonomial, combo_sum,
                   maslov_of_vmonomial, maslov_of_weight, unit_vec, vmul, wsize, zero_vec)


def spoke(N, i, m=0):
    return (i - 1 + m) % N + 1


# bodies

def idem(i):
    return ("i", i)


def upow(i, p=1):
    return ("U", i, p)


def chord(start, length=1):
    return ("s", start, length)


def init_idem(b, N):
    return b[1]


def final_idem(b, N):
    if b[0] == "s":
        return spoke(N, b[1], b[2])
    return b[1]


def mul_body(x, y, N):
    """Product of two bodies, None when it vanishes."""
    if x[0] == "i":
        return y if init_idem(y, N) == x[1] else None
    if y[0] == "i":
        return x if final_idem(x, N) == y[1] else None
    if x[0] == "U" and y[0] == "U":
        return ("U", x[1], x[2] + y[2]) if x[1] == y[1] else None
    if x[0] == "s" and y[0] == "s":
        if final_idem(x, N) == y[1]:
            return ("s", x[1], x[2] + y[2])
        return None
    return None


def body_length(b):
    return 0 if b[0] == "i" else b[2]


def factorizations(b, N):
    """All ways to write b = left * right with neither factor a unit."""
    out = []
    if b[0] == "U":
        for q in range(1, b[2]):
            out.append((("U", b[1], q), ("U", b[1], b[2] - q)))
    elif b[0] == "s":
        for m in range(1, b[2]):
            out.append((("s", b[1], m), ("s", spoke(N, b[1], m), b[2] - m)))
    return out


def basic_letters(b, N):
    """Decompose a body into its truly basic factors U_i, s_i."""
    if b[0] == "U":
        return [("U", b[1], 1)] * b[2]
    if b[0] == "s":
        return [("s", spoke(N, b[1], m), 1) for m in range(b[2])]
    return []


# terms and elements

def term(body, v=None, N=None):
    if v is None:
        v = zero_vec(N)
    return (tuple(v), body)


def element(*terms):
    return combo_sum(terms)


def u_top(N):
    """U_{N+1}, the sum of the N full loops."""
    z = zero_vec(N)
    return frozenset((z, chord(c, N)) for c in range(1, N + 1))


def a_mul(x, y, N):
    """Product of two terms as an element."""
    b = mul_body(x[1], y[1], N)
    if b is None:
        return frozenset()
    return frozenset({(vmul(x[0], y[0]), b)})


def a_mul_elements(x, y, N):
    acc = []
    for s in x:
        for t in y:
            b = mul_body(s[1], t[1], N)
            if b is not None:
                acc.append((vmul(s[0], t[0]), b))
    return combo_sum(acc)


# gradings

def a_maslov(t, N):
    return maslov_of_vmonomial(t[0], N)


def body_alexander(b, N):
    a = alex_zero(N)
    if b[0] == "U":
        a = tuple(b[2] * x for x in alex_slot(N, 2 * b[1] - 1))
    elif b[0] == "s":
        for m in range(b[2]):
            a = alex_add(a, alex_slot(N, 2 * spoke(N, b[1], m)))
    return a


def a_alexander(t, N):
    return alex_add(body_alexander(t[1], N), alexander_of_vmonomial(t[0], N))


def full_cycle(N, j=1):
    return (j,) * (2 * N)


# graph enumeration

def _base_corners(N):
    out = []
    for i in range(1, N + 1):
        out.append(("U", i, 1))
        out.append(("s", i, 1))
    return out


@lru_cache(maxsize=None)
def _shapes(j, arity):
    """Plane trees with j vertices, each vertex having `arity` ordered slots."""
    if j == 0:
        return ()
    out = []

    def fill(slot, left, acc):
        if slot == arity:
            if left == 0:
                out.append(tuple(acc))
            return
        acc.append(None)
        fill(slot + 1, left, acc)
        acc.pop()
        for size in range(1, left + 1):
            for sub in _shapes(size, arity):
                acc.append(sub)
                fill(slot + 1, left - size, acc)
                acc.pop()

    fill(0, j - 1, [])
    return tuple(out)


def _tour(shape, first, N, faces):
    """Walk one vertex clockwise, appending corner labels to faces[-1]."""
    base = _base_corners(N)
    L = 2 * N
    corners = [base[(first + k) % L] for k in range(L)]
    faces[-1].append(corners[0])
    for k in range(1, L):
        child = shape[k - 1]
        if child is None:
            faces.append([])
        else:
            prev = (first + k - 1) % L
            # the child's first corner has the same type as the corner before the edge
            cfirst = prev if base[prev][0] == "U" else (prev + 2) % L
            _tour(child, cfirst, N, faces)
        faces[-1].append(corners[k])


@lru_cache(maxsize=None)
def centered_faces(N, j):
    """Every centered unweighted graph with j vertices, as lists of face corner lists."""
    out = []
    for shape in _shapes(j, 2 * N - 1):
        for r in range(2 * N):
            faces = [[]]
            _tour(shape, r, N, faces)
            out.append(tuple(tuple(f) for f in faces))
    return tuple(out)


def _product(bodies, N):
    acc = bodies[0]
    for b in bodies[1:]:
        acc = mul_body(acc, b, N)
        if acc is None:
            raise AssertionError("graph face with vanishing product")
    return acc


def _closable(face, N):
    """Weight index gained by closing this face, or None."""
    if len(face) == 1 and face[0][0] == "U":
        return face[0][1]
    if len(face) == N and all(c[0] == "s" for c in face):
        return N + 1
    return None


def _closings(faces, N, k):
    """Every way to close k regions of a face list, as (weight, merged regions).

    Closing region t removes it and merges its two neighbours into one region,
    which may itself be closed later. Configurations are keyed by the set of
    closed regions, so the order of closing does not matter.
    """
    out = []
    seen = set()

    def rec(regions, closed, w):
        key = frozenset(closed)
        if key in seen:
            return
        seen.add(key)
        if len(closed) == k:
            out.append((tuple(w), regions))
            return
        for t in range(1, len(regions) - 1):
            kind = _closable([c for f in regions[t] for c in faces[f]], N)
            if kind is None:
                continue
            merged = regions[:t - 1] + (regions[t - 1] + regions[t + 1],) + regions[t + 2:]
            w[kind] += 1
            rec(merged, closed + [regions[t]], w)
            w[kind] -= 1

    rec(tuple((t,) for t in range(len(faces))), [], [0] * (N + 2))
    return out


@lru_cache(maxsize=None)
def centered_table(N, j, k):
    """Weighted input sequences realized by some graph with j vertices and k closed regions.

    A ring with a petal inside can be entered at more than one spoke, so the
    same sequence may come from several graphs; it is still one operation.
    """
    out = set()
    for faces in centered_faces(N, j):
        for w, regions in _closings(faces, N, k):
            out.add((w, tuple(_product([c for f in r for c in faces[f]], N) for r in regions)))
    return frozenset(out)


def vertex_count(N, n, k):
    """j with n = j(2N-2) + 2 - 2k, or None."""
    num = n - 2 + 2 * k
    if num < 0 or num % (2 * N - 2):
        return None
    return num // (2 * N - 2)


def _centered(N, w, bodies, j, k):
    return (w, bodies) in centered_table(N, j, k)


def recognize_bodies(N, w, bodies):
    """Output of the higher operation on basic-coefficient inputs, as a list of bodies.

    Each entry is (left factor, V0 exponent, right factor) with factors bodies or None.
    The weight must avoid e_0; n >= 2 and (n, w) != (2, 0) are handled here.
    """
    n = len(bodies)
    k = wsize(w)
    j = vertex_count(N, n, k)
    if j is None or j == 0:
        return []
    out = []
    if _centered(N, w, bodies, j, k):
        out.append((None, j, None))
    for alpha, rest in factorizations(bodies[0], N):
        if _centered(N, w, (rest,) + bodies[1:], j, k):
            out.append((alpha, j, None))
    for rest, alpha in factorizations(bodies[-1], N):
        if _centered(N, w, bodies[:-1] + (rest,), j, k):
            out.append((None, j, alpha))
    return out


class AlgebraA(AuditedOperations):
    def __init__(self, N):
        from .ring import check_N
        check_N(N)
        self.N = N
        self.zero = zero_vec(N)
        self._init_memo()

    # construction helpers

    def U(self, i, p=1):
        return (self.zero, upow(i, p))

    def s(self, i, length=1):
        return (self.zero, chord(i, length))

    def iota(self, i):
        return (self.zero, idem(i))

    def V(self, i, e=1):
        return unit_vec(self.N, i, e)

    def weight(self, **kw):
        w = [0] * (self.N + 2)
        for key, val in kw.items():
            w[int(key[1:])] = val
        return tuple(w)

    def mul(self, x, y):
        return a_mul(x, y, self.N)

    # operations

    def vanishes(self, w, terms):
        n, k = len(terms), sum(w)
        if w[0] or n == 1:
            return True
        if n == 0:
            return k != 1
        if n == 2 and k == 0:
            return False
        return not vertex_count(self.N, n, k)

    def _mu_terms(self, w, terms):
        """Operation on single terms; returns an element."""
        N = self.N
        w = tuple(w)
        n = len(terms)
        if w[0]:
            return frozenset()
        coeff = self.zero
        for t in terms:
            coeff = vmul(coeff, t[0])
        bodies = tuple(t[1] for t in terms)
        k = wsize(w)
        if n == 0:
            if k != 1:
                return frozenset()
            i = w.index(1)
            if i == N + 1:
                return u_top(N)
            return frozenset({(self.zero, upow(i))})
        if any(b[0] == "i" for b in bodies):
            if n == 2 and k == 0:
                b = mul_body(bodies[0], bodies[1], N)
                return frozenset() if b is None else frozenset({(coeff, b)})
            return frozenset()
        if n == 1:
            return frozenset()
        if n == 2 and k == 0:
            b = mul_body(bodies[0], bodies[1], N)
            return frozenset() if b is None else frozenset({(coeff, b)})
        for x, y in zip(bodies, bodies[1:]):
            if final_idem(x, N) != init_idem(y, N):
                return frozenset()
        acc = []
        for left, jv, right in recognize_bodies(N, w, bodies):
            v = vmul(coeff, unit_vec(N, 0, jv))
            if left is not None:
                acc.append((v, left))
            elif right is not None:
                acc.append((v, right))
            else:
                acc.append((v, idem(init_idem(bodies[0], N))))
        return combo_sum(acc)

    def mu(self, w, elements):
        """Multilinear extension of mu_terms to elements."""
        return multilinear(self.mu_terms, w, elements)

    def recognize(self, w, terms):
        """Output of the operation on a weighted sequence of single terms, or None."""
        out = self.mu_terms(w, terms)
        return out if out else None

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
        return a_maslov(t, self.N)

    def alexander(self, t):
        return a_alexander(t, self.N)

    def check_grading(self, w, terms, out):
        """Maslov law and Alexander conservation for one accepted operation."""
        N = self.N
        n = len(terms)
        m_in = sum(self.maslov(t) for t in terms) + maslov_of_weight(w, N) + n - 2
        a_in = alexander_of_vmonomial(w, N)
        for t in terms:
            a_in = alex_add(a_in, self.alexander(t))
        ok = True
        for t in out:
            if self.maslov(t) != m_in or self.alexander(t) != a_in:
                ok = False
        return ok

    def classify(self, w, terms):
        """Sequence-level classification from the Alexander grading alone.

        Returns ('centered', None), ('left', alpha), ('right', alpha) or ('invalid', None).
        """
        N = self.N
        n = len(terms)
        k = wsize(w)
        j = vertex_count(N, n, k)
        if j is None:
            return ("invalid", None)
        total = alexander_of_vmonomial(w, N)
        for t in terms:
            total = alex_add(total, self.alexander(t))
        target = full_cycle(N, j)
        if total == target:
            return ("centered", None)
        hits = []
        for alpha, _ in factorizations(terms[0][1], N):
            if alex_add(body_alexander(alpha, N), target) == total:
                hits.append(("left", alpha))
        for _, alpha in factorizations(terms[-1][1], N):
            if alex_add(body_alexander(alpha, N), target) == total:
                hits.append(("right", alpha))
        if len(hits) == 1:
            return hits[0]
        return ("invalid", None)


# text syntax

def body_text(b):
    if b[0] == "i":
        return "i%d" % b[1]
    if b[0] == "U":
        return "U%d" % b[1] if b[2] == 1 else "U%d^%d" % (b[1], b[2])
    return "s%d,%d" % (b[1], b[2])


def vmono_text(v):
    parts = []
    for i, e in enumerate(v):
        if e == 1:
            parts.append("V%d" % i)
        elif e > 1:
            parts.append("V%d^%d" % (i, e))
    return "*".join(parts)


def term_text(t):
    v = vmono_text(t[0])
    b = body_text(t[1])
    return v + "*" + b if v else b


def element_text(x):
    if not x:
        return "0"
    return " + ".join(sorted(term_text(t) for t in x))


def parse_term(text, N):
    """Inverse of term_text for a single term like 'V0*U1^2' or 's2,3'."""
    v = [0] * (N + 2)
    body = None
    for part in text.replace(" ", "").split("*"):
        if part.startswith("V"):
            idx, _, e = part[1:].partition("^")
            v[int(idx)] += int(e) if e else 1
        elif part.startswith("U"):
            idx, _, e = part[1:].partition("^")
            body = upow(int(idx), int(e) if e else 1)
        elif part.startswith("s"):
            a, _, b = part[1:].partition(",")
            body = chord(int(a), int(b) if b else 1)
        elif part.startswith("i"):
            body = idem(int(part[1:]))
        else:
            raise ValueError("cannot parse %r" % text)
    if body is None:
        raise ValueError("term %r has no algebra part" % text)
    return (tuple(v), body)
