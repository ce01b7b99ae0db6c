"""Ground ring F2[V0..V_{N+1}], weight vectors and the two gradings.

Monomials and weights are plain tuples of N+2 non-negative ints indexed
0..N+1. Alexander vectors are tuples of 2N ints; slot k (1-based) lives
at position k-1. Linear combinations over F2 are frozensets of terms.
"""
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache


@dataclass(frozen=True)
class Caps:
    max_inputs: int = 6
    max_weight: int = 2
    max_len: int = 8


@dataclass(frozen=True)
class Params:
    N: int
    caps: Caps = field(default_factory=Caps)

    def __post_init__(self):
        if not isinstance(self.N, int) or self.N < 3:
            raise ValueError("N must be an integer >= 3, got %r" % (self.N,))


@dataclass(frozen=True)
class GradingTable:
    """Maslov degrees of the weight generators.

    The degree of e_{N+1} is configurable; 2 is the only value for which
    the weighted operations obey the grading law.
    """
    m_e_top: int = 2


DEFAULT_TABLE = GradingTable()


def check_N(N):
    if not isinstance(N, int) or N < 3:
        raise ValueError("N must be an integer >= 3, got %r" % (N,))


# monomials and weights

def zero_vec(N):
    return (0,) * (N + 2)


def unit_vec(N, i, k=1):
    v = [0] * (N + 2)
    v[i] = k
    return tuple(v)


def vmul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def wadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def wsub(a, b):
    """a - b, or None if some component would go negative."""
    out = tuple(x - y for x, y in zip(a, b))
    if min(out) < 0:
        return None
    return out


def wle(a, b):
    return all(x <= y for x, y in zip(a, b))


def wsize(w):
    return sum(w)


@lru_cache(maxsize=None)
def weight_splits(w):
    """All (w1, w2) with w1 + w2 = w, as a tuple."""
    out = [()]
    for k in w:
        out = [p + (x,) for p in out for x in range(k + 1)]
    return tuple((p, tuple(x - y for x, y in zip(w, p))) for p in out)


def weights_up_to(N, max_size):
    """Every weight vector with total magnitude <= max_size."""
    out = []

    def rec(pos, left, acc):
        if pos == N + 2:
            out.append(tuple(acc))
            return
        for k in range(left + 1):
            acc.append(k)
            rec(pos + 1, left - k, acc)
            acc.pop()

    rec(0, max_size, [])
    out.sort(key=lambda w: (sum(w), tuple(-x for x in w)))
    return out


def weight_letters(w):
    """Expand a weight vector into the sorted list of basic indices."""
    out = []
    for i, k in enumerate(w):
        out.extend([i] * k)
    return out


# gradings

def maslov_of_weight(w, N, table=DEFAULT_TABLE):
    total = 0
    for i, k in enumerate(w):
        if i == 0:
            total += k * (-(2 * N - 2))
        elif i == N + 1:
            total += k * table.m_e_top
        else:
            total += k * 2
    return total


def maslov_of_vmonomial(v, N):
    return v[0] * (2 * N - 2) - 2 * sum(v[1:])


def _alex_basic(i, N):
    """Alexander vector of e_i, equivalently of V_i."""
    a = [0] * (2 * N)
    if i == 0:
        a = [1] * (2 * N)
    elif i == N + 1:
        for k in range(1, 2 * N, 2):
            a[k] = 1
    else:
        a[2 * i - 2] = 1
    return a


def alexander_of_weight(w, N):
    out = [0] * (2 * N)
    for i, k in enumerate(w):
        if k:
            for s, x in enumerate(_alex_basic(i, N)):
                out[s] += k * x
    return tuple(out)


def alexander_of_vmonomial(v, N):
    return alexander_of_weight(v, N)


def alex_zero(N):
    return (0,) * (2 * N)


def alex_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def alex_slot(N, k):
    """Unit vector in slot k (1-based, read mod 2N)."""
    a = [0] * (2 * N)
    a[(k - 1) % (2 * N)] = 1
    return tuple(a)


def alex_even(a):
    return all(x % 2 == 0 for x in a)


# characteristic-2 linear combinations

def combo_add(x, y):
    return frozenset(x).symmetric_difference(y)


def combo_sum(terms):
    """Sum an iterable of terms (with repetition) over F2."""
    terms = list(terms)
    if len(terms) < 2:
        return frozenset(terms)
    c = Counter(terms)
    return frozenset(t for t, k in c.items() if k % 2)


def combo_sum_many(combos):
    acc = set()
    for c in combos:
        acc.symmetric_difference_update(c)
    return frozenset(acc)
