"""Sparse GF(2) linear algebra on Python int bitsets.

Vectors are ints whose set bits index rows. Columns are reduced in the
order given, so the solution picks the earliest independent columns and
sets every free variable to zero.
"""


class Eliminator:
    def __init__(self):
        self.pivots = {}  # lowest set bit -> (reduced vector, column combination)
        self.ncols = 0

    def reduce(self, vec):
        combo = 0
        pivots = self.pivots
        while vec:
            low = vec & -vec
            hit = pivots.get(low)
            if hit is None:
                return vec, combo
            vec ^= hit[0]
            combo ^= hit[1]
        return 0, combo

    def add_column(self, vec):
        """Insert column number self.ncols; return True if it raised the rank."""
        k = self.ncols
        self.ncols += 1
        red, combo = self.reduce(vec)
        if not red:
            return False
        low = red & -red
        self.pivots[low] = (red, combo ^ (1 << k))
        return True

    def solve(self, target):
        """Column combination hitting target, or None if outside the span."""
        red, combo = self.reduce(target)
        if red:
            return None
        return combo

    @property
    def rank(self):
        return len(self.pivots)


class Indexer:
    """Assigns bit positions to hashable keys."""

    def __init__(self):
        self.index = {}

    def bit(self, key):
        i = self.index.get(key)
        if i is None:
            i = len(self.index)
            self.index[key] = i
        return 1 << i

    def vector(self, keys):
        v = 0
        for k in keys:
            v ^= self.bit(k)
        return v


def bits(combo):
    """Indices of set bits, ascending."""
    out = []
    while combo:
        low = combo & -combo
        out.append(low.bit_length() - 1)
        combo ^= low
    return out


def rank(vectors):
    e = Eliminator()
    for v in vectors:
        e.add_column(v)
    return e.rank

