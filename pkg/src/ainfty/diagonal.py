"""Weighted diagonal on stably weighted trees, built by acyclic models.

A chain of tree pairs is a frozenset of (S, T). For a source of weight w
the bookkeeping exponents are the componentwise deficits w - w(S) and
w - w(T); they are recomputed on demand rather than stored.

Corollas are solved for directly; every other tree is handled by
stacking its vertices, so the stacking axiom holds by construction on
root factorizations and is checked on all other factorizations.
"""
from . import trees as tr
from .gf2 import Eliminator, Indexer, bits
from .ring import combo_sum, unit_vec, wle, wsize, wsub, zero_vec

DEGENERATE = (tr.STUMP, tr.SHOOT)


class DiagonalError(RuntimeError):
    pass


def pair_dim(p):
    return tr.dim(p[0]) + tr.dim(p[1])


def pair_boundary(p):
    s, t = p
    out = [(x, t) for x in tr.boundary(s)]
    out.extend((s, y) for y in tr.boundary(t))
    return out


def chain_boundary(chain):
    acc = []
    for p in chain:
        acc.extend(pair_boundary(p))
    return combo_sum(acc)


def glue_chains(outer, i, inner):
    acc = []
    for s1, t1 in outer:
        for s2, t2 in inner:
            s = tr.glue(s1, i, s2)
            if s is None:
                continue
            t = tr.glue(t1, i, t2)
            if t is None:
                continue
            acc.append((s, t))
    return combo_sum(acc)


def pair_key(p):
    return (tr.to_text(p[0]), tr.to_text(p[1]))


def sorted_chain(chain):
    return sorted(chain, key=pair_key)


def y_exponents(p, w, N):
    """Deficit vectors (for Y1, Y2) of a pair in the image of a weight-w tree."""
    return (wsub(w, tr.weight_vector(p[0], N)), wsub(w, tr.weight_vector(p[1], N)))


def default_seeds(N):
    """e_0 goes to the right factor, every other e_i to the left factor."""
    seeds = {}
    for i in range(N + 2):
        e = unit_vec(N, i)
        psi = tr.corolla(0, e)
        seeds[i] = frozenset({(tr.STUMP, psi)}) if i == 0 else frozenset({(psi, tr.STUMP)})
    return seeds


class Diagonal:
    def __init__(self, N, max_inputs=6, max_weight=1, seeds=None, basic=tr.BASIC_RIGHT_MOVING):
        self.N = N
        self.max_inputs = max_inputs
        self.max_weight = max_weight
        self.seeds = seeds if seeds is not None else default_seeds(N)
        self.basic = basic
        self._corollas = {}
        self._cache = {}
        self.stats = {}

    # weight relabelling: indices 1..N+1 play symmetric roles

    def _canonical(self, w):
        order = sorted(range(1, self.N + 2), key=lambda i: (-w[i], i))
        perm = [0] * (self.N + 2)
        for new, old in enumerate(order, start=1):
            perm[old] = new
        cw = [0] * (self.N + 2)
        cw[0] = w[0]
        for old in range(1, self.N + 2):
            cw[perm[old]] = w[old]
        inv = [0] * (self.N + 2)
        for old, new in enumerate(perm):
            inv[new] = old
        return tuple(cw), inv

    @property
    def max_size(self):
        # a corolla with n inputs and weight w has n + 2|w| "slots"; pushing a
        # weight off a vertex trades 2 of them for one extra input
        return self.max_inputs + 2 * self.max_weight

    def in_caps(self, n, w):
        return wsize(w) <= self.max_weight and n + 2 * wsize(w) <= self.max_size

    def corolla(self, n, w):
        w = tuple(w)
        if not self.in_caps(n, w):
            raise DiagonalError("corolla (%d, %r) outside caps" % (n, w))
        cw, inv = self._canonical(w)
        chain = self._corollas.get((n, cw))
        if chain is None:
            chain = self._solve_corolla(n, cw)
            self._corollas[(n, cw)] = chain
        if cw == w:
            return chain
        return frozenset((tr.relabel(s, inv), tr.relabel(t, inv)) for s, t in chain)

    def __call__(self, t):
        return self.gamma(t)

    def gamma(self, t):
        if t in DEGENERATE:
            raise DiagonalError("the diagonal is defined on genuine trees only")
        hit = self._cache.get(t)
        if hit is not None:
            return hit
        root, subs = tr.vertex_factorization(t)
        chain = self.corolla(len(root[1]), root[0])
        for i, sub in reversed(subs):
            chain = glue_chains(chain, i, self.gamma(sub))
        self._cache[t] = chain
        return chain

    def gamma_chain(self, chain):
        acc = set()
        for t in chain:
            acc.symmetric_difference_update(self.gamma(t))
        return frozenset(acc)

    def _base(self, n, w):
        if n == 2 and wsize(w) == 0:
            psi = tr.corolla(2, w)
            return frozenset({(psi, psi)})
        if n == 0 and wsize(w) == 1:
            return self.seeds[w.index(1)]
        return None

    def candidates(self, n, w):
        """Right-moving pairs in the weight block of the corolla, of its dimension."""
        wl = (0,) + tuple(w[1:])
        wr = (w[0],) + (0,) * (self.N + 1)
        D = n + 2 * wsize(w) - 2
        left = tr.generalized_trees_with(n, wl)
        right = tr.generalized_trees_with(n, wr)
        by_dim = {}
        for t in right:
            by_dim.setdefault(tr.dim(t), []).append(t)
        out = []
        for s in left:
            for t in by_dim.get(D - tr.dim(s), ()):
                if s in DEGENERATE and t in DEGENERATE:
                    continue
                if tr.is_right_moving(s, t, self.basic):
                    out.append((s, t))
        out.sort(key=pair_key)
        return out

    def _solve_corolla(self, n, w):
        base = self._base(n, w)
        if base is not None:
            return base
        psi = tr.corolla(n, w)
        target = self.gamma_chain(tr.boundary(psi))
        cols = self.candidates(n, w)
        rows = Indexer()
        elim = Eliminator()
        for p in cols:
            elim.add_column(rows.vector(pair_boundary(p)))
        missing = [p for p in target if p not in rows.index]
        if missing:
            raise DiagonalError("no right-moving solution for corolla (%d, %r)" % (n, w))
        combo = elim.solve(rows.vector(target))
        if combo is None:
            raise DiagonalError("no right-moving solution for corolla (%d, %r)" % (n, w))
        self.stats[(n, w)] = {"candidates": len(cols), "rank": elim.rank}
        return frozenset(cols[k] for k in bits(combo))

    def build(self):
        """Solve every corolla within caps in increasing (|w|, n) order."""
        from .ring import weights_up_to
        for size in range(self.max_weight + 1):
            for n in range(self.max_inputs + 1):
                for w in weights_up_to(self.N, size):
                    if wsize(w) != size:
                        continue
                    if n + 2 * size < 2:
                        continue
                    cw, _ = self._canonical(w)
                    if cw == w:
                        self.corolla(n, w)
        return self

    def table(self):
        """(n, canonical weight) -> sorted chain, for every corolla solved so far."""
        return {k: sorted_chain(v) for k, v in sorted(self._corollas.items())}


def build_diagonal(N, max_inputs=6, max_weight=1, **kw):
    return Diagonal(N, max_inputs, max_weight, **kw).build()


# axiom checks

def _source_trees(d, max_inputs, max_weight, all_labels):
    from .ring import weights_up_to
    for w in weights_up_to(d.N, max_weight):
        if not all_labels and d._canonical(w)[0] != w:
            continue
        for n in range(max_inputs + 1):
            if n + 2 * wsize(w) < 2:
                continue
            for t in tr.trees_with(n, w):
                yield t, w


def verify_diagonal(d, max_inputs=None, max_weight=None, all_labels=False):
    """Check dimension, weight, stacking, non-degeneracy, seeds and the chain-map identity.

    Returns a dict of counters plus a list of violations (empty on success).
    """
    max_inputs = d.max_inputs if max_inputs is None else max_inputs
    max_weight = d.max_weight if max_weight is None else max_weight
    N = d.N
    bad = []
    counts = {"trees": 0, "pairs": 0, "factorizations": 0}
    z = zero_vec(N)
    psi2 = tr.corolla(2, z)
    if d.gamma(psi2) != frozenset({(psi2, psi2)}):
        bad.append(("WD4a", tr.to_text(psi2)))
    if max_weight >= 1:
        for i in range(N + 2):
            e = unit_vec(N, i)
            if d.gamma(tr.corolla(0, e)) != default_seeds(N)[i]:
                bad.append(("WD4b", "e%d" % i))
    for t, w in _source_trees(d, max_inputs, max_weight, all_labels):
        counts["trees"] += 1
        g = d.gamma(t)
        dt = tr.dim(t)
        for p in g:
            counts["pairs"] += 1
            if pair_dim(p) != dt:
                bad.append(("WD1", tr.to_text(t), pair_key(p)))
            if not (wle(tr.weight_vector(p[0], N), w) and wle(tr.weight_vector(p[1], N), w)):
                bad.append(("WD2", tr.to_text(t), pair_key(p)))
            if p[0] in DEGENERATE and p[1] in DEGENERATE:
                bad.append(("WD4c", tr.to_text(t), pair_key(p)))
            if tr.n_inputs(p[0]) != tr.n_inputs(t) or tr.n_inputs(p[1]) != tr.n_inputs(t):
                bad.append(("arity", tr.to_text(t), pair_key(p)))
            if not tr.is_right_moving(p[0], p[1], d.basic):
                bad.append(("right-moving", tr.to_text(t), pair_key(p)))
        for outer, i, inner in tr.vertex_decompositions(t):
            counts["factorizations"] += 1
            if glue_chains(d.gamma(outer), i, d.gamma(inner)) != g:
                bad.append(("WD3", tr.to_text(t), tr.to_text(outer), i))
        if chain_boundary(g) != d.gamma_chain(tr.boundary(t)):
            bad.append(("chain-map", tr.to_text(t)))
    return {"counts": counts, "violations": bad}
