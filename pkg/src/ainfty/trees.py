"""Stably weighted planar trees, their differential, gluing and profiles.

A tree is one of
  LEAF            the int 0, an input slot
  (w, children)   an internal vertex with weight tuple w and a tuple of children
  STUMP, SHOOT    the two degenerate trees (no inputs / one bare input)

Inputs are numbered 1..n left to right.
"""
from functools import lru_cache
from itertools import combinations

from .ring import combo_sum, wadd, wsize, wsub, weight_splits, zero_vec

LEAF = 0
STUMP = "T"
SHOOT = "|"


def is_vertex(t):
    return type(t) is tuple


def corolla(n, w):
    return (tuple(w), (LEAF,) * n)


def n_inputs(t):
    if t == STUMP:
        return 0
    if t == SHOOT or t == LEAF:
        return 1
    return sum(n_inputs(c) for c in t[1])


def n_vertices(t):
    if t == STUMP:
        return -1
    if t == SHOOT or t == LEAF:
        return 0
    return 1 + sum(n_vertices(c) for c in t[1])


def weight_vector(t, N):
    if not is_vertex(t):
        return zero_vec(N)
    w = t[0]
    for c in t[1]:
        if is_vertex(c):
            w = wadd(w, weight_vector(c, N))
    return w


def wt(t):
    if not is_vertex(t):
        return 0
    return wsize(t[0]) + sum(wt(c) for c in t[1])


def dim(t):
    return n_inputs(t) + 2 * wt(t) - n_vertices(t) - 1


def is_stable(t):
    if not is_vertex(t):
        return True
    w, ch = t
    if len(ch) < 2 and wsize(w) == 0:
        return False
    return all(is_stable(c) for c in ch)


# differential

def _vertex_expansions(v):
    """All stable ways to replace vertex v by an edge, at v itself."""
    w, ch = v
    k = len(ch)
    out = []
    for a in range(k + 1):
        for b in range(a, k + 1):
            inner_ch = ch[a:b]
            outer_len = k - (b - a) + 1
            for w_in, w_out in weight_splits(w):
                if len(inner_ch) < 2 and wsize(w_in) == 0:
                    continue
                if outer_len < 2 and wsize(w_out) == 0:
                    continue
                inner = (w_in, inner_ch)
                out.append((w_out, ch[:a] + (inner,) + ch[b:]))
    return out


def _expansions(t):
    if not is_vertex(t):
        return []
    out = list(_vertex_expansions(t))
    w, ch = t
    for idx, c in enumerate(ch):
        for c2 in _expansions(c):
            out.append((w, ch[:idx] + (c2,) + ch[idx + 1:]))
    return out


def boundary(t):
    """F2-chain of trees obtained by expanding one vertex into an edge."""
    if not is_vertex(t):
        return frozenset()
    return combo_sum(_expansions(t))


def boundary_chain(chain):
    acc = []
    for t in chain:
        acc.extend(_expansions(t))
    return combo_sum(acc)


# gluing

def _leaf_parent(t, i):
    """Locate input i (1-based); return the path of child indices to it."""
    path = []

    def walk(node, count):
        if node == LEAF:
            return count + 1, count + 1 == i
        for idx, c in enumerate(node[1]):
            path.append(idx)
            count, found = walk(c, count)
            if found:
                return count, True
            path.pop()
        return count, False

    _, found = walk(t, 0)
    if not found:
        raise IndexError("input %d out of range" % i)
    return path


def _replace_at(t, path, new):
    if not path:
        return new
    w, ch = t
    idx = path[0]
    return (w, ch[:idx] + (_replace_at(ch[idx], path[1:], new),) + ch[idx + 1:])


def _get_at(t, path):
    for idx in path:
        t = t[1][idx]
    return t


def glue(t, i, s):
    """t o_i s: graft the output of s onto input i of t. None means zero."""
    if not 1 <= i <= n_inputs(t):
        raise IndexError("input %d out of range" % i)
    if s == SHOOT:
        return t
    if t == SHOOT:
        return s
    path = _leaf_parent(t, i)
    if s != STUMP:
        return _replace_at(t, path, s)
    ppath, idx = path[:-1], path[-1]
    p = _get_at(t, ppath)
    w, ch = p
    if len(ch) != 2 or wsize(w) != 0:
        return None
    rest = ch[1 - idx]
    if not ppath and rest == LEAF:
        return SHOOT
    return _replace_at(t, ppath, rest)


def stack(i, j, n, s, t):
    """Stacking map: graft s (inputs i..j of the result) into input i of t."""
    if n_inputs(s) != j - i + 1 or n_inputs(t) != n + i - j:
        raise ValueError("incompatible input counts for stacking")
    return glue(t, i, s)


def vertex_decompositions(t):
    """Every way to write t = outer o_i inner with inner rooted at a non-root vertex.

    Yields (outer, i, inner) where outer has inner replaced by a leaf.
    """
    out = []

    def walk(node, path, offset):
        if node == LEAF:
            return offset + 1
        if path:
            outer = _replace_at(t, path, LEAF)
            out.append((outer, offset + 1, node))
        for idx, c in enumerate(node[1]):
            offset = walk(c, path + [idx], offset)
        return offset

    if is_vertex(t):
        walk(t, [], 0)
    return out


def vertex_factorization(t):
    """Split t at its root: (root corolla, [(input index, subtree)]) for the children.

    Rebuilding: glue the subtrees into the corolla right-to-left.
    """
    w, ch = t
    root = (w, (LEAF,) * len(ch))
    return root, [(k + 1, c) for k, c in enumerate(ch) if is_vertex(c)]


# enumeration

@lru_cache(maxsize=None)
def _trees(n, w):
    out = []
    for wv, rest in weight_splits(w):
        mink = 0 if wsize(wv) > 0 else 2
        for ch in _forest(n, rest, mink):
            out.append((wv, ch))
    return tuple(out)


@lru_cache(maxsize=None)
def _forest(n, w, mink):
    """Child sequences with n inputs, weight w and at least mink members."""
    out = []
    if n == 0 and wsize(w) == 0:
        return ((),) if mink == 0 else ()
    nxt = max(mink - 1, 0)
    if n >= 1:
        for rest in _forest(n - 1, w, nxt):
            out.append((LEAF,) + rest)
    for w1, w2 in weight_splits(w):
        for n1 in range(n + 1):
            if n1 <= 1 and wsize(w1) == 0:
                continue
            if (n1, w1) == (n, w) and nxt > 0:
                continue
            subs = _trees(n1, w1)
            if not subs:
                continue
            for rest in _forest(n - n1, w2, nxt):
                for c in subs:
                    out.append((c,) + rest)
    return tuple(out)


def trees_with(n, w):
    """All stably weighted trees with n inputs and total weight exactly w."""
    return list(_trees(n, tuple(w)))


def generalized_trees_with(n, w):
    """Like trees_with but including the stump and shoot where they live."""
    out = trees_with(n, w)
    if wsize(w) == 0 and n == 0:
        out = [STUMP] + out
    if wsize(w) == 0 and n == 1:
        out = [SHOOT] + out
    return out


# profiles and the right-moving predicate

def _leaf_paths(t):
    paths = []

    def walk(node, path):
        if node == LEAF:
            paths.append(tuple(path))
            return
        for idx, c in enumerate(node[1]):
            path.append(idx)
            walk(c, path)
            path.pop()

    if is_vertex(t):
        walk(t, [])
    elif t == SHOOT:
        paths.append(())
    return paths


def _common(p, q):
    k = 0
    for x, y in zip(p, q):
        if x != y:
            break
        k += 1
    return k


def profile3(t, a, b, c):
    """Shape of the 3-input profile: 'L' = ((ab)c), 'R' = (a(bc)), 'C' = corolla."""
    paths = _leaf_paths(t)
    return _shape(paths, a - 1, b - 1, c - 1)


def _shape(paths, a, b, c):
    pab = _common(paths[a], paths[b])
    pbc = _common(paths[b], paths[c])
    if pab == pbc:
        return "C"
    return "L" if pab > pbc else "R"


def profile(t, I):
    """Profile tree on the input subset I (1-based), weights forgotten."""
    I = sorted(I)
    if not I:
        raise ValueError("profile needs a non-empty subset")
    keep = set(I)
    counter = [0]

    def walk(node):
        if node == LEAF:
            counter[0] += 1
            return LEAF if counter[0] in keep else None
        kids = [k for k in (walk(c) for c in node[1]) if k is not None]
        if not kids:
            return None
        if len(kids) == 1:
            return kids[0]
        return (zero_vec(len(node[0]) - 2), tuple(kids))

    if t == SHOOT:
        return SHOOT
    r = walk(t)
    return SHOOT if r == LEAF else r


@lru_cache(maxsize=None)
def _triples(n):
    return tuple(combinations(range(n), 3))


@lru_cache(maxsize=None)
def rm_masks(t):
    """Bitmasks over 3-subsets: (has R-side, has L-side) of each profile."""
    n = n_inputs(t)
    if n < 3:
        return 0, 0
    paths = _leaf_paths(t)
    rmask = lmask = 0
    for k, (a, b, c) in enumerate(_triples(n)):
        s = _shape(paths, a, b, c)
        if s != "L":
            rmask |= 1 << k
        if s != "R":
            lmask |= 1 << k
    return rmask, lmask


# the basic right-moving pairs: max(left profile) <= min(right profile)
# in the order L < R with the corolla spanning both
BASIC_RIGHT_MOVING = frozenset({("L", "L"), ("L", "R"), ("R", "R"), ("L", "C"), ("C", "R")})


def is_right_moving(s, t, basic=BASIC_RIGHT_MOVING):
    n = n_inputs(s)
    if n != n_inputs(t):
        raise ValueError("pair with different input counts")
    if basic == BASIC_RIGHT_MOVING:
        return rm_masks(s)[0] & rm_masks(t)[1] == 0
    ps, pt = _leaf_paths(s), _leaf_paths(t)
    for a, b, c in _triples(n):
        if (_shape(ps, a, b, c), _shape(pt, a, b, c)) not in basic:
            return False
    return True


# text syntax

def _wtext(w):
    parts = []
    for i, k in enumerate(w):
        if k == 1:
            parts.append("e%d" % i)
        elif k > 1:
            parts.append("%de%d" % (k, i))
    return "+".join(parts)


def to_text(t):
    if t == STUMP:
        return "T"
    if t == SHOOT:
        return "|"
    if t == LEAF:
        return "*"
    w, ch = t
    ws = _wtext(w)
    head = "[%s]" % ws if ws else ""
    return head + "(" + " ".join(to_text(c) for c in ch) + ")"


def tree_key(t):
    return to_text(t)


def parse_tree(text, N):
    """Inverse of to_text."""
    s = text.replace(" ", "")
    pos = [0]

    def weight():
        w = [0] * (N + 2)
        if s[pos[0]] != "[":
            return tuple(w)
        end = s.index("]", pos[0])
        body = s[pos[0] + 1:end]
        pos[0] = end + 1
        for part in body.split("+"):
            if not part:
                continue
            k, i = part.split("e")
            w[int(i)] += int(k) if k else 1
        return tuple(w)

    def node():
        c = s[pos[0]]
        if c == "*":
            pos[0] += 1
            return LEAF
        w = weight()
        if s[pos[0]] != "(":
            raise ValueError("bad tree text %r" % text)
        pos[0] += 1
        kids = []
        while s[pos[0]] != ")":
            kids.append(node())
        pos[0] += 1
        return (w, tuple(kids))

    if s == "T":
        return STUMP
    if s == "|":
        return SHOOT
    t = node()
    if pos[0] != len(s):
        raise ValueError("trailing text in %r" % text)
    return t


def relabel(t, perm):
    """Apply a permutation of weight indices (perm[i] = new index of e_i)."""
    if not is_vertex(t):
        return t
    w, ch = t
    nw = [0] * len(w)
    for i, k in enumerate(w):
        nw[perm[i]] += k
    return (tuple(nw), tuple(relabel(c, perm) for c in ch))


def sub_weight(a, b):
    return wsub(a, b)
