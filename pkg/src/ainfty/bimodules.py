"""The AA bimodule Y, the DD bimodule X, their box tensor products and the
duality checks built on them.

Y has generators {i}, i = 1..N, all in Maslov degree 0. An operation is
written m^w(b_k, ..., b_1, x, a_1, ..., a_n): the B-inputs are listed in
written order, so b_1 sits next to x and is traversed first. Operations
are recognized from the input sequence alone: idempotents must chain on
both sides, the Maslov identity must hold, the Alexander total must be
even, and the basic letters must admit a matching.

X has generators xbar_i, i = 1..N, with
  delta1(xbar_i) = U_i (x) rho_i (x) xbar_i + s_i (x) sigma_i (x) xbar_{i+1}.
"""
from collections import Counter
from functools import lru_cache

from . import algebra_a as aa
from . import algebra_b as ab
from . import trees as tr
from .algebra_a import AlgebraA
from .algebra_b import AlgebraB
from .relations import new_audit
from .ring import (alex_add, alex_even, alexander_of_vmonomial, combo_sum, maslov_of_weight,
                   unit_vec, vmul, weight_splits, weights_up_to, wsize, wsub, zero_vec)


def spoke(N, i, m=0):
    return (i - 1 + m) % N + 1


# basic decomposition

def a_letters(t, N):
    """Basic letters of an A-term: ('U', i), ('s', i) in order, V's as a Counter."""
    body = [(kind, i) for kind, i, _ in aa.basic_letters(t[1], N)]
    return body, Counter({i: k for i, k in enumerate(t[0]) if k})


def b_letters(t, N):
    """Basic letters of a B-term in path order, V's as a Counter."""
    body = [("U" if kind == "r" else "s", i) for kind, i in ab.letters(t[1], N)]
    return body, Counter({i: k for i, k in enumerate(t[0]) if k})


def basic_decomposition(N, w, bs, as_):
    """Letters and weights on the two sides.

    e_1..e_{N+1} are counted on the A-side and e_0 on the B-side; B-letters
    are recorded with rho as 'U' so that matched letters compare equal.
    """
    a_seq, a_v = [], Counter()
    for t in as_:
        body, v = a_letters(t, N)
        a_seq.extend(body)
        a_v.update(v)
    b_seq, b_v = [], Counter()
    for t in reversed(bs):
        body, v = b_letters(t, N)
        b_seq.extend(body)
        b_v.update(v)
    return {"a": a_seq, "a_v": a_v, "a_weights": {i: w[i] for i in range(1, N + 2) if w[i]},
            "b": b_seq, "b_v": b_v, "b_weights": w[0]}


def find_matching(N, w, bs, as_):
    """An order-preserving matching of the basic decomposition, or None.

    Returns a list of pairs (a_item, b_item), items being ('a', pos),
    ('b', pos), ('V', i) or ('e', i). Letters match letters of the same
    Alexander slot in order; V_i on one side matches e_i on the other;
    e_i (1 <= i <= N) may also take a rho_i; weights never match weights.
    """
    dec = basic_decomposition(N, w, bs, as_)
    a_seq, b_seq = dec["a"], dec["b"]
    a_v, b_v = dec["a_v"], dec["b_v"]
    pairs = []
    # V's on the A-side only pair with e_0 on the B-side
    if any(k for i, k in a_v.items() if i != 0) or a_v[0] != w[0]:
        return None
    pairs.extend((("V", 0), ("e", 0)) for _ in range(w[0]))
    # V's on the B-side pair with the A-side weight of the same index
    if b_v[0]:
        return None
    spare = [0] * (N + 2)
    for i in range(1, N + 2):
        spare[i] = w[i] - b_v[i]
        if spare[i] < 0:
            return None
        pairs.extend((("e", i), ("V", i)) for _ in range(b_v[i]))
    if spare[N + 1]:
        return None
    # remaining petal weights each absorb one rho of the same index
    need = tuple(spare[1:N + 1])

    @lru_cache(maxsize=None)
    def walk(p, q, left):
        if p == len(a_seq) and q == len(b_seq):
            return () if not any(left) else None
        if q < len(b_seq):
            kind, i = b_seq[q]
            if kind == "U" and left[i - 1]:
                nl = left[:i - 1] + (left[i - 1] - 1,) + left[i:]
                rest = walk(p, q + 1, nl)
                if rest is not None:
                    return ((("e", i), ("b", q)),) + rest
            if p < len(a_seq) and a_seq[p] == b_seq[q]:
                rest = walk(p + 1, q + 1, left)
                if rest is not None:
                    return ((("a", p), ("b", q)),) + rest
        return None

    rest = walk(0, 0, need)
    if rest is None:
        return None
    return pairs + list(rest)


# the AA bimodule

class BimoduleY:
    def __init__(self, N, A=None, B=None):
        self.N = N
        self.A = A if A is not None else AlgebraA(N)
        self.B = B if B is not None else AlgebraB(N)
        self.zero = zero_vec(N)
        self.audit = new_audit()
        self._memo = lru_cache(maxsize=1 << 20)(self._audited_m)

    def generators(self):
        return list(range(1, self.N + 1))

    # conditions

    def idempotent_output(self, bs, x, as_):
        """Output generator forced by the idempotents, or None if they do not chain."""
        N = self.N
        y = x
        for t in as_:
            if aa.init_idem(t[1], N) != y:
                return None
            y = aa.final_idem(t[1], N)
        z = x
        for t in reversed(bs):
            if ab.init_idem(t[1], N) != z:
                return None
            z = ab.final_idem(t[1], N)
        if as_ and bs and y != z:
            return None
        return y if as_ else z

    def maslov_defect(self, w, bs, as_):
        """m(w) + m(x) + sum m(a) + sum m(b) + k + n - 1, with m(x) = 0."""
        N = self.N
        total = maslov_of_weight(w, N) + len(bs) + len(as_) - 1
        total += sum(self.A.maslov(t) for t in as_)
        total += sum(self.B.maslov(t) for t in bs)
        return total

    def alexander_total(self, w, bs, as_):
        a = alexander_of_vmonomial(w, self.N)
        for t in as_:
            a = alex_add(a, self.A.alexander(t))
        for t in bs:
            a = alex_add(a, self.B.alexander(t))
        return a

    def recognize(self, w, bs, x, as_):
        """The output generator of m^w(bs, x, as), or None when the operation vanishes."""
        w = tuple(w)
        bs, as_ = tuple(bs), tuple(as_)
        out = self._memo(w, bs, x, as_)
        return next(iter(out)) if out else None

    def m(self, w, bs, x, as_):
        """m^w(b_k, ..., b_1, x, a_1, ..., a_n) on single terms, as a set of generators."""
        return self._memo(tuple(w), tuple(bs), x, tuple(as_))

    def _audited_m(self, w, bs, x, as_):
        out = self._m(w, bs, x, as_)
        key = (w, bs, x, as_)
        if out and key not in self.audit["seen"]:
            self.audit["seen"].add(key)
            if not self.check_grading(w, bs, x, as_, out):
                self.audit["failures"].add(key)
        return out

    def _m(self, w, bs, x, as_):
        N = self.N
        units = [t for t in bs + as_ if t[1][0] == "i" and not any(t[0])]
        if units:
            # strictly unital: only the bare unit acting on x survives
            if len(bs) + len(as_) == 1 and not any(w) and units[0][1][1] == x:
                return frozenset({x})
            return frozenset()
        y = self.idempotent_output(bs, x, as_)
        if y is None:
            return frozenset()
        if self.maslov_defect(w, bs, as_) != 0:
            return frozenset()
        if not alex_even(self.alexander_total(w, bs, as_)):
            return frozenset()
        if find_matching(N, w, bs, as_) is None:
            return frozenset()
        return frozenset({y})

    def check_grading(self, w, bs, x, as_, out=None):
        """Grading law for an operation: the output (degree 0) has degree
        m(w) + sum m(a) + sum m(b) + k + n - 1, and the Alexander total is even.
        Unit operations are exempt.
        """
        if len(bs) + len(as_) == 1 and not any(w) and (bs + as_)[0][1][0] == "i":
            return True
        return (self.maslov_defect(w, bs, as_) == 0
                and alex_even(self.alexander_total(w, bs, as_)))

    # relations

    def relation_terms(self, w, bs, x, as_):
        """Every nonzero composite in the relation for (w, bs, x, as).

        Entries are (kind, position, inner weight, output) with kind one of
        'A' (an A-side block), 'B' (a B-side block) or 'split'.
        """
        w = tuple(w)
        bs, as_ = list(bs), list(as_)
        k, n = len(bs), len(as_)
        out = []
        for w_in, w_out in weight_splits(w):
            empty_ok = any(w_in)
            for p in range(n + 1):
                for q in range(p if empty_ok else p + 1, n + 1):
                    inner = self.A.mu_terms(w_in, as_[p:q])
                    acc = set()
                    for t in inner:
                        acc.symmetric_difference_update(
                            self.m(w_out, bs, x, as_[:p] + [t] + as_[q:]))
                    if acc:
                        out.append(("A", (p, q), w_in, frozenset(acc)))
            for p in range(k + 1):
                for q in range(p if empty_ok else p + 1, k + 1):
                    inner = self.B.mu_terms(w_in, bs[p:q])
                    acc = set()
                    for t in inner:
                        acc.symmetric_difference_update(
                            self.m(w_out, bs[:p] + [t] + bs[q:], x, as_))
                    if acc:
                        out.append(("B", (p, q), w_in, frozenset(acc)))
            for j in range(k + 1):
                for i in range(n + 1):
                    inner = self.m(w_in, bs[k - j:], x, as_[:i])
                    acc = set()
                    for y in inner:
                        acc.symmetric_difference_update(self.m(w_out, bs[:k - j], y, as_[i:]))
                    if acc:
                        out.append(("split", (j, i), w_in, frozenset(acc)))
        return out

    def relation_sum(self, w, bs, x, as_):
        acc = set()
        for entry in self.relation_terms(w, bs, x, as_):
            acc.symmetric_difference_update(entry[3])
        return frozenset(acc)


# sampling Y-queries whose letters pair up across the two sides

def paired_path(rng, N, x, chunks):
    """A path of paired letters from idempotent x built from random chunks.

    A chunk is a single letter, a full (U, s) turn or a run of N s's.
    """
    cur = x
    pairs = []
    for _ in range(chunks):
        r = rng.random()
        if r < 0.6:
            kinds = "U" if rng.random() < 0.5 else "s"
        elif r < 0.8:
            kinds = "Us" * N
        else:
            kinds = "s" * N
        for kind in kinds:
            pairs.append((kind, cur))
            if kind == "s":
                cur = spoke(N, cur, 1)
    return pairs


def _group(rng, N, bodies, mul):
    out = []
    for body in bodies:
        if out and rng.random() < 0.6:
            m = mul(out[-1], body)
            if m is not None:
                out[-1] = m
                continue
        out.append(body)
    return out


def random_y_query(rng, N, max_chunks=4, max_terms=9):
    """A weighted query (w, bs, x, as) biased towards nontrivial relations.

    Letters are paired along a common path, then one side may lose a petal
    rho, a full (U, s) turn or a run of N sigmas in exchange for the
    corresponding weight, and inputs may pick up V coefficients together
    with their weights. Returns None when the query grows past max_terms.
    """
    z = zero_vec(N)
    x = rng.randint(1, N)
    pairs = paired_path(rng, N, x, rng.randint(1, max_chunks))
    a_l, b_l = list(pairs), list(pairs)
    w = [0] * (N + 2)
    kinds = "".join(k for k, _ in pairs)
    r = rng.random()
    if r < 0.2:
        idx = [j for j, p in enumerate(pairs) if p[0] == "U"]
        if idx:
            j = rng.choice(idx)
            del a_l[j]
            w[pairs[j][1]] += 1
    elif r < 0.4:
        idx = [j for j in range(len(pairs)) if kinds.startswith("Us" * N, j)]
        if idx:
            j = rng.choice(idx)
            del a_l[j:j + 2 * N]
            w[0] += 1
    elif r < 0.6:
        idx = [j for j in range(len(pairs)) if kinds.startswith("s" * N, j)]
        if idx:
            j = rng.choice(idx)
            del b_l[j:j + N]
            w[N + 1] += 1
    elif r < 0.7:
        w[rng.randrange(N + 2)] += 1
    a_bodies = [aa.upow(i) if k == "U" else aa.chord(i) for k, i in a_l]
    b_bodies = [ab.rho(i) if k == "U" else ab.sigma(i) for k, i in b_l]
    a_bodies = _group(rng, N, a_bodies, lambda p, q: aa.mul_body(p, q, N))
    b_bodies = _group(rng, N, b_bodies, lambda p, q: ab.mul_body(q, p, N))
    as_ = [(z, b) for b in a_bodies]
    bs = [(z, b) for b in reversed(b_bodies)]
    if as_ and rng.random() < 0.15:
        j = rng.randrange(len(as_))
        as_[j] = (unit_vec(N, 0), as_[j][1])
        w[0] += 1
    if bs and rng.random() < 0.15:
        j = rng.randrange(len(bs))
        i = rng.randint(1, N + 1)
        bs[j] = (unit_vec(N, i), bs[j][1])
        w[i] += 1
    if len(as_) + len(bs) > max_terms:
        return None
    return tuple(w), bs, x, as_


def basic_y_queries(N, max_terms, max_weight):
    """Every query on single basic letters with k + n <= max_terms whose idempotents chain."""
    from itertools import product
    z = zero_vec(N)
    a_let = [(z, aa.upow(i)) for i in range(1, N + 1)] + [(z, aa.chord(i)) for i in range(1, N + 1)]
    b_let = [(z, ab.rho(i)) for i in range(1, N + 1)] + [(z, ab.sigma(i)) for i in range(1, N + 1)]
    Y = BimoduleY(N)
    for w in weights_up_to(N, max_weight):
        for total in range(max_terms + 1):
            for k in range(total + 1):
                for bs in product(b_let, repeat=k):
                    for as_ in product(a_let, repeat=total - k):
                        for x in range(1, N + 1):
                            if Y.idempotent_output(bs, x, as_) is not None:
                                yield w, list(bs), x, list(as_)


def check_y_relations(Y, queries):
    """Relation sums and grading laws over an iterable of queries."""
    counts = {"queries": 0, "nontrivial": 0, "operations": 0}
    failures = []
    for w, bs, x, as_ in queries:
        counts["queries"] += 1
        terms = Y.relation_terms(w, bs, x, as_)
        if terms:
            counts["nontrivial"] += 1
        if combo_sum(g for e in terms for g in e[3]):
            failures.append(("relation", y_query_text(Y.N, w, bs, x, as_)))
        if Y.m(w, bs, x, as_):
            counts["operations"] += 1
            if not Y.check_grading(w, bs, x, as_):
                failures.append(("grading", y_query_text(Y.N, w, bs, x, as_)))
    return {"counts": counts, "failures": failures}


def y_query_text(N, w, bs, x, as_):
    from .trees import _wtext
    left = [ab.term_text(t, N) for t in bs]
    right = [aa.term_text(t) for t in as_]
    return "m^%s(%s)" % (_wtext(w) or "0", ", ".join(left + ["{%d}" % x] + right))


# the DD bimodule

class BimoduleX:
    """delta1(xbar_i) = U_i (x) rho_i (x) xbar_i + s_i (x) sigma_i (x) xbar_{i+1}."""

    def __init__(self, N):
        self.N = N
        self.zero = zero_vec(N)

    def generators(self):
        return list(range(1, self.N + 1))

    def delta1(self, i):
        """List of (A-term, B-term, generator)."""
        z = self.zero
        return [((z, aa.upow(i)), (z, ab.rho(i)), i),
                ((z, aa.chord(i)), (z, ab.sigma(i)), spoke(self.N, i, 1))]

    def delta(self, i, n):
        """The n-fold iterate: list of (A-terms, B-terms in path order, final generator)."""
        out = [((), (), i)]
        for _ in range(n):
            nxt = []
            for a_seq, b_seq, g in out:
                for a, b, h in self.delta1(g):
                    nxt.append((a_seq + (a,), b_seq + (b,), h))
            out = nxt
        return out


def _eval_tree(t, inputs, apply_vertex):
    """Evaluate a planar tree on a list of terms; returns an element."""
    if t == tr.SHOOT or t == tr.LEAF:
        return frozenset({inputs[0]})
    w, children = t
    elems = []
    pos = 0
    for c in children:
        m = tr.n_inputs(c)
        elems.append(_eval_tree(c, inputs[pos:pos + m], apply_vertex))
        pos += m
    return apply_vertex(w, elems)


class TensorAB:
    """Operations on A (x) B defined by a diagonal.

    A pair (S, T) acts as S evaluated in A times T evaluated in B. The
    part of the weight not used by a factor is recorded as a V-monomial
    on that factor. B-trees read their inputs in path order, so each
    vertex hands them to the B operation reversed into written order.
    """

    def __init__(self, diagonal, A=None, B=None):
        self.d = diagonal
        self.N = diagonal.N
        self.A = A if A is not None else AlgebraA(self.N)
        self.B = B if B is not None else AlgebraB(self.N)

    def eval_a(self, s, a_terms, idem):
        if s == tr.STUMP:
            return frozenset({(zero_vec(self.N), aa.idem(idem))})
        return _eval_tree(s, list(a_terms), self.A.mu)

    def eval_b(self, t, b_terms, idem):
        if t == tr.STUMP:
            return frozenset({(zero_vec(self.N), ab.idem(idem))})
        return _eval_tree(t, list(b_terms), lambda w, el: self.B.mu(w, list(reversed(el))))

    def pair_terms(self, pair, w, a_terms, b_terms, x, y):
        """Output terms (V, A-body, B-body) of one pair; idempotents filtered to x -> y."""
        N = self.N
        s, t = pair
        ea = self.eval_a(s, a_terms, x)
        if not ea:
            return []
        eb = self.eval_b(t, b_terms, x)
        if not eb:
            return []
        da = wsub(w, tr.weight_vector(s, N))
        db = wsub(w, tr.weight_vector(t, N))
        out = []
        for va, ba in ea:
            if aa.init_idem(ba, N) != x or aa.final_idem(ba, N) != y:
                continue
            for vb, bb in eb:
                if ab.init_idem(bb, N) != x or ab.final_idem(bb, N) != y:
                    continue
                out.append((vmul(vmul(va, vb), vmul(da, db)), ba, bb))
        return out

    def differential_terms(self, a_terms, b_terms, x, y):
        """The n = 1, w = 0 operation: d (x) 1 + 1 (x) d (the A-side d vanishes)."""
        (a,), (b,) = a_terms, b_terms
        out = []
        for vb, bb in self.B.diff(b):
            out.append((vmul(a[0], vb), a[1], bb))
        return out


def dd_relation_check(N, diagonal=None, max_weight=1, A=None, B=None):
    """Census of (mu_n^w (x) 1) o delta^n over every generator, n <= 2N, |w| <= max_weight.

    Each nonzero pair contribution is recorded before cancellation. The
    census passes when the char-2 total vanishes and the recorded terms are
    exactly twice the support of U_i (x) V_i (1 <= i <= N+1) and V_0 (x) U_0.
    """
    from .diagonal import Diagonal
    if diagonal is None:
        diagonal = Diagonal(N, max_inputs=2 * N, max_weight=max_weight)
    d = diagonal
    if 2 * N + 2 * max_weight > d.max_size or max_weight > d.max_weight:
        raise ValueError("diagonal caps too small for the DD census")
    X = BimoduleX(N)
    ten = TensorAB(d, A, B)
    contributions = []
    for x in X.generators():
        for w in weights_up_to(N, max_weight):
            for n in range(0, 2 * N + 1):
                if n + 2 * wsize(w) < 2 and not (n == 1 and wsize(w) == 0):
                    continue
                for a_seq, b_seq, y in X.delta(x, n):
                    if n == 1 and wsize(w) == 0:
                        terms = ten.differential_terms(a_seq, b_seq, x, y)
                        if terms:
                            contributions.append((x, n, w, "d", terms, y))
                        continue
                    for pair in d.gamma(tr.corolla(n, w)):
                        terms = ten.pair_terms(pair, w, a_seq, b_seq, x, y)
                        if terms:
                            contributions.append((x, n, w, pair, terms, y))
    term_count = Counter()
    for x, n, w, pair, terms, y in contributions:
        for v, ba, bb in terms:
            term_count[(v, ba, bb, y)] += 1
    targets = dd_targets(N)
    expected = Counter()
    for name, support in targets.items():
        for key in support:
            expected[key] += 2
    census = {}
    for name, support in targets.items():
        census[name] = sorted({term_count[key] for key in support})
    unexpected = sorted((k for k in term_count if k not in expected), key=str)
    total = combo_sum(k for k, c in term_count.items() for _ in range(c))
    return {
        "contributions": len(contributions),
        "census": census,
        "term_counts": term_count,
        "unexpected": unexpected,
        "sum_is_zero": not total,
        "census_ok": term_count == expected,
        "detail": contributions,
    }


def dd_targets(N):
    """Supports of U_i (x) V_i for 1 <= i <= N+1 and of V_0 (x) U_0, tagged by generator."""
    out = {}
    for i in range(1, N + 1):
        out["U%d*V%d" % (i, i)] = {(unit_vec(N, i), aa.upow(i), ab.idem(i), i)}
    out["U%d*V%d" % (N + 1, N + 1)] = {(unit_vec(N, N + 1), aa.chord(c, N), ab.idem(c), c)
                                       for c in range(1, N + 1)}
    u0 = set()
    for c in range(1, N + 1):
        u0.add((unit_vec(N, 0), aa.idem(c), ab.word(c, N, lrho=True), c))
        u0.add((unit_vec(N, 0), aa.idem(c), ab.word(c, N, rrho=True), c))
    out["V0*U0"] = u0
    return out


# box tensor products with at most one algebra input

def f_a(a_terms, N, idem):
    """Iterated A-product of the A-outputs of delta^n (the unit when n = 0)."""
    acc = frozenset({(zero_vec(N), aa.idem(idem))})
    for t in a_terms:
        acc = aa.a_mul_elements(acc, frozenset({t}), N)
    return acc


def f_b(b_terms, N, idem):
    """Iterated B-product of path-ordered B-outputs (the unit when n = 0)."""
    acc = frozenset({(zero_vec(N), ab.idem(idem))})
    for t in b_terms:
        nxt = []
        for u in acc:
            b = ab.mul_body(t[1], u[1], N)
            if b is not None:
                nxt.append((vmul(t[0], u[0]), b))
        acc = combo_sum(nxt)
    return acc


class BoxTensor:
    """delta^1_{1+j} for X [x] Y (side 'XY', over A) or Y [x] X (side 'YX', over B), j <= 1.

    Generator z_i stands for xbar_i (x) {i}. An operation of Y with weight w
    contributes its weight as a V-monomial on the output algebra element.
    """

    def __init__(self, N, side="XY", max_n=None, max_weight=1, Y=None):
        if side not in ("XY", "YX"):
            raise ValueError("side must be 'XY' or 'YX'")
        self.N = N
        self.side = side
        self.max_n = 2 * N + 2 if max_n is None else max_n
        self.max_weight = max_weight
        self.Y = Y if Y is not None else BimoduleY(N)
        self.X = BimoduleX(N)

    def generators(self):
        return list(range(1, self.N + 1))

    def letter_bound(self, inputs):
        """Largest n for which delta^n of X can feed a nonzero operation of Y.

        Every letter coming out of X must be matched by an input letter or
        absorbed by one unit of weight.
        """
        N = self.N
        if not inputs:
            return self.max_n
        letters = 0
        for t in inputs:
            if self.side == "XY":
                letters += len(a_letters(t, N)[0])
            else:
                letters += len(b_letters(t, N)[0])
        return min(self.max_n, letters + self.max_weight)

    def delta(self, z, inputs):
        """delta^1_{1+j}(z, inputs) as a set of (algebra term, generator)."""
        if len(inputs) > 1:
            raise ValueError("box tensor operations are computed for at most one input")
        N, Y = self.N, self.Y
        acc = []
        for n in range(self.letter_bound(inputs) + 1):
            for a_seq, b_seq, l in self.X.delta(z, n):
                for w in weights_up_to(N, self.max_weight):
                    if self.side == "XY":
                        out = Y.m(w, list(reversed(b_seq)), z, list(inputs))
                        alg = f_a(a_seq, N, z) if l in out else ()
                    else:
                        out = Y.m(w, list(inputs), z, list(a_seq))
                        alg = f_b(b_seq, N, z) if l in out else ()
                    for v, body in alg:
                        acc.append(((vmul(v, w), body), l))
        return combo_sum(acc)

    def delta_total(self, inputs):
        """The operation on the sum of all generators."""
        acc = []
        for z in self.generators():
            acc.extend(self.delta(z, inputs))
        return combo_sum(acc)


def box_tensor_delta(N, side, j, inputs, **kw):
    if j != len(inputs) or j > 1:
        raise ValueError("j must equal the number of inputs and be at most 1")
    return BoxTensor(N, side, **kw).delta_total(inputs)


class Homomorphism:
    """phi_1 read off a box tensor product with delta^1_1 = 0."""

    def __init__(self, box):
        self.box = box
        self.N = box.N
        for z in box.generators():
            if box.delta(z, []):
                raise ValueError("delta^1_1 does not vanish")

    def phi1(self, t):
        """Algebra factor of delta^1_2 summed over generators."""
        return combo_sum(alg for alg, _ in self.box.delta_total([t]))

    def phi1_element(self, x):
        acc = []
        for t in x:
            acc.extend(self.phi1(t))
        return combo_sum(acc)


def extract_phi(box):
    return Homomorphism(box)


def a_bodies(N, max_len):
    """V-free A-bodies: idempotents, U_i^p and chords of length up to max_len."""
    out = [aa.idem(i) for i in range(1, N + 1)]
    for i in range(1, N + 1):
        for p in range(1, max_len + 1):
            out.append(aa.upow(i, p))
            out.append(aa.chord(i, p))
    return out


def b_bodies(N, max_len):
    return [ab.idem(i) for i in range(1, N + 1)] + AlgebraB(N).all_words(max_len)


def verify_duality(N, max_len=3, max_n=None, max_weight=1, Y=None):
    """delta^1_1 = 0, delta^1_2 = id on short chords, phi_1 = id and multiplicative.

    Pass Y to inspect the operations it was asked for afterwards.
    """
    z = zero_vec(N)
    failures = []
    counts = {}
    for side, bodies, mul, short in (
            ("XY", a_bodies(N, max_len), lambda p, q: aa.mul_body(p, q, N),
             [aa.upow(i) for i in range(1, N + 1)] + [aa.chord(i) for i in range(1, N + 1)]),
            ("YX", b_bodies(N, max_len), lambda p, q: ab.mul_body(q, p, N),
             [ab.rho(i) for i in range(1, N + 1)] + [ab.sigma(i) for i in range(1, N + 1)])):
        box = BoxTensor(N, side, max_n=max_n, max_weight=max_weight, Y=Y)
        for g in box.generators():
            if box.delta(g, []):
                failures.append((side, "delta1_1", g))
        for b in short:
            g = b[1]
            fin = aa.final_idem(b, N) if side == "XY" else ab.final_idem(b, N)
            if box.delta(g, [(z, b)]) != frozenset({((z, b), fin)}):
                failures.append((side, "delta1_2", b))
        phi = Homomorphism(box)
        images = {}
        for b in bodies:
            images[b] = phi.phi1((z, b))
            if images[b] != frozenset({(z, b)}):
                failures.append((side, "phi1", b))
        pairs = 0
        for p in bodies:
            for q in bodies:
                prod = mul(p, q)
                if prod is None or prod not in images:
                    continue
                pairs += 1
                lhs = images[prod]
                rhs = combo_sum((vmul(u[0], v[0]), r) for u in images[p] for v in images[q]
                                for r in [mul(u[1], v[1])] if r is not None)
                if lhs != rhs:
                    failures.append((side, "multiplicative", p, q))
        counts[side] = {"inputs": len(bodies), "pairs": pairs}
    return {"counts": counts, "failures": failures}


# graded vanishing of the higher homomorphism components

def a_terms_with_alexander(N, target, first, last):
    """A-terms (V, body) with Alexander grading target from idempotent first to last."""
    from itertools import product
    target = tuple(target)
    basics = [alexander_of_vmonomial(unit_vec(N, i), N) for i in range(N + 2)]
    bound = max(target) if target else 0
    out = []
    for exps in product(range(bound + 1), repeat=N + 2):
        a = alexander_of_vmonomial(exps, N)
        if any(x > y for x, y in zip(a, target)):
            continue
        rest = tuple(y - x for x, y in zip(a, target))
        for body in _bodies_with_alexander(N, rest):
            if aa.init_idem(body, N) == first and aa.final_idem(body, N) == last:
                out.append((tuple(exps), body))
    return out


def _bodies_with_alexander(N, rest):
    if not any(rest):
        return [aa.idem(i) for i in range(1, N + 1)]
    out = []
    odd = [k for k in range(0, 2 * N, 2) if rest[k]]
    even = [k for k in range(1, 2 * N, 2) if rest[k]]
    if odd and not even and len(odd) == 1:
        i = odd[0] // 2 + 1
        out.append(aa.upow(i, rest[odd[0]]))
    if even and not odd:
        length = sum(rest)
        for c in range(1, N + 1):
            if aa.body_alexander(aa.chord(c, length), N) == tuple(rest):
                out.append(aa.chord(c, length))
    return out


def verify_phi_vanishing(N, K=4, max_len=2, hom_len=None):
    """For 2 <= k <= K, the graded piece that a nonzero phi_k value would need is empty.

    A-side: every composable tuple of V-free bodies of length <= max_len
    needs an A-term of Maslov degree sum m(a_i) + k - 1 and Alexander
    grading sum A(a_i); the A-terms of that Alexander grading are listed
    exhaustively. B-side: tuples of homology classes of B need a class of
    Maslov degree sum m + k - 1 and the summed Alexander grading.
    """
    A = AlgebraA(N)
    B = AlgebraB(N)
    z = zero_vec(N)
    failures = []
    counts = {"A": 0, "B": 0}
    bodies = [b for b in a_bodies(N, max_len) if b[0] != "i"]
    for k in range(2, K + 1):
        for seq in _chains(bodies, k, aa.init_idem, aa.final_idem, N):
            counts["A"] += 1
            terms = [(z, b) for b in seq]
            need_m = sum(A.maslov(t) for t in terms) + k - 1
            alex = alexander_of_vmonomial(z, N)
            for t in terms:
                alex = alex_add(alex, A.alexander(t))
            first, last = aa.init_idem(seq[0], N), aa.final_idem(seq[-1], N)
            for v, body in a_terms_with_alexander(N, alex, first, last):
                if A.maslov((v, body)) == need_m:
                    failures.append(("A", k, [aa.body_text(b) for b in seq], aa.term_text((v, body))))
    hom = B.homology(hom_len if hom_len is not None else N - 1)
    classes = [c[0][1] for c in hom["classes"] if len(c) == 1]
    degrees = {}
    for c in classes:
        t = (z, c)
        degrees.setdefault((B.maslov(t), B.alexander(t), ab.init_idem(c, N), ab.final_idem(c, N)),
                           []).append(c)
    for k in range(2, K + 1):
        for seq in _chains(classes, k, ab.init_idem, ab.final_idem, N):
            counts["B"] += 1
            terms = [(z, b) for b in seq]
            need_m = sum(B.maslov(t) for t in terms) + k - 1
            alex = alexander_of_vmonomial(z, N)
            for t in terms:
                alex = alex_add(alex, B.alexander(t))
            key = (need_m, alex, ab.init_idem(seq[0], N), ab.final_idem(seq[-1], N))
            if key in degrees:
                failures.append(("B", k, [ab.body_text(b, N) for b in seq], degrees[key]))
    return {"counts": counts, "classes": len(classes), "failures": failures}


def _chains(bodies, k, init, final, N):
    """Sequences of k bodies, each starting where the previous one ends (path order)."""
    by_init = {}
    for b in bodies:
        by_init.setdefault(init(b, N), []).append(b)

    def rec(seq):
        if len(seq) == k:
            yield tuple(seq)
            return
        for b in by_init.get(final(seq[-1], N), ()):
            seq.append(b)
            yield from rec(seq)
            seq.pop()

    for b in bodies:
        yield from rec([b])
