"""Generic helpers for operations given on single terms."""
from functools import lru_cache
from itertools import product

from .ring import weight_splits


def multilinear(f, w, elements):
    """Extend f(w, terms) to a list of elements (frozensets of terms)."""
    if all(len(e) == 1 for e in elements):
        return f(w, [next(iter(e)) for e in elements])
    acc = set()
    for chosen in product(*elements):
        acc.symmetric_difference_update(f(w, list(chosen)))
    return frozenset(acc)


def relation_terms(f, w, terms):
    """Nonzero composites f(w_out; ..., f(w_in; terms[p:q]), ...) over all blocks and splits.

    Entries are (p, q, w_in, output element). Empty blocks carry the
    zero-input weighted operations.
    """
    terms = list(terms)
    n = len(terms)
    out = []
    for w_in, w_out in weight_splits(tuple(w)):
        empty_ok = any(w_in)
        for p in range(n + 1):
            for q in range(p if empty_ok else p + 1, n + 1):
                inner = f(w_in, terms[p:q])
                if not inner:
                    continue
                head, tail = terms[:p], terms[q:]
                acc = set()
                for t in inner:
                    acc.symmetric_difference_update(f(w_out, head + [t] + tail))
                if acc:
                    out.append((p, q, w_in, frozenset(acc)))
    return out


def relation_sum(f, w, terms):
    acc = set()
    for _, _, _, outer in relation_terms(f, w, terms):
        acc.symmetric_difference_update(outer)
    return frozenset(acc)


EMPTY = frozenset()


def new_audit():
    """Distinct nonzero operations seen, and those violating the grading law."""
    return {"seen": set(), "failures": set()}


def merge_audit(into, other):
    into["seen"] |= other["seen"]
    into["failures"] |= other["failures"]
    return into


def audit_summary(audit):
    return {"operations": len(audit["seen"]),
            "failures": sorted(audit["failures"], key=repr)}


class AuditedOperations:
    """Memoizes mu_terms and checks the grading law once per distinct nonzero operation.

    Subclasses provide _mu_terms(w, terms) and check_grading(w, terms, out), and
    may override vanishes(w, terms).
    """

    def _init_memo(self):
        self.audit = new_audit()
        self._memo = lru_cache(maxsize=1 << 20)(self._audited_mu)

    def _audited_mu(self, w, terms):
        out = self._mu_terms(w, terms)
        if out and (w, terms) not in self.audit["seen"]:
            self.audit["seen"].add((w, terms))
            if not self.check_grading(w, terms, out):
                self.audit["failures"].add((w, terms))
        return out

    def vanishes(self, w, terms):
        """Cheap test for operations that are zero by arity or weight alone."""
        return False

    def mu_terms(self, w, terms):
        """Operation on single terms; returns an element (memoized)."""
        w, terms = tuple(w), tuple(terms)
        if self.vanishes(w, terms):
            return EMPTY
        return self._memo(w, terms)
