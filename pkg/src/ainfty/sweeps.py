"""Relation sweeps for the two algebras and the AA bimodule.

Random samples come from a counter-based generator: sample number idx
under seed s is drawn from random.Random("s:idx"), so the sample set does
not depend on the order in which samples are evaluated. Random samples can
be spread over worker processes (AINFTY_THREADS); chunks are contiguous and
merged in order, so reports do not depend on the worker count.
"""
import os
import random
from concurrent.futures import ProcessPoolExecutor
from itertools import product

from . import algebra_a as aa
from . import algebra_b as ab
from .algebra_a import AlgebraA
from .algebra_b import AlgebraB
from .bimodules import BimoduleY, basic_y_queries, check_y_relations, random_y_query
from .relations import audit_summary, merge_audit, new_audit
from .ring import combo_sum, unit_vec, weights_up_to, wsize, zero_vec


def sample_rng(seed, idx):
    return random.Random("%d:%d" % (seed, idx))


def worker_count():
    try:
        return max(1, int(os.environ.get("AINFTY_THREADS", "1")))
    except ValueError:
        return 1


def _chunks(total, parts):
    step = -(-total // parts) if total else 1
    return [(lo, min(total, lo + step)) for lo in range(0, total, step)]


def _fan_out(fn, tasks, threads):
    if threads <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, tasks))


def _merge(results):
    """Sum counters, concatenate failures in task order, union audits."""
    counts, failures, audits = {}, [], {}
    for r in results:
        for k, v in r["counts"].items():
            counts[k] = counts.get(k, 0) + v
        failures.extend(r["failures"])
        for name, a in r.get("audits", {}).items():
            merge_audit(audits.setdefault(name, new_audit()), a)
    return counts, failures, audits


def _result(counts, failures, audit=None):
    out = {"counts": counts, "failures": failures}
    if audit is not None:
        out["grading"] = audit_summary(audit)
    return out


# A-side

def a_letter_bodies(N):
    return [aa.upow(i) for i in range(1, N + 1)] + [aa.chord(i) for i in range(1, N + 1)]


def a_push_body(N, i, idem):
    """The summand of mu_0^{e_i} starting at idem, or None."""
    if i <= N:
        return aa.upow(i) if i == idem else None
    return aa.chord(idem, N)


def a_witnesses(N, js=(1, 2), ks=(0, 1, 2), max_n=None):
    """Sequences one edge away from an accepted centered operation.

    Each accepted (w, bodies) yields: a split of one input into two factors,
    an extension by a basic letter at either end, and a push that trades one
    unit of weight for its mu_0 output inserted at any position.
    """
    max_n = 4 * N - 1 if max_n is None else max_n
    letters = a_letter_bodies(N)
    out = set()
    for j in js:
        for k in ks:
            for w, seq in aa.centered_table(N, j, k):
                seq = list(seq)
                n = len(seq)
                for p in range(n):
                    for left, right in aa.factorizations(seq[p], N):
                        out.add((w, tuple(seq[:p] + [left, right] + seq[p + 1:])))
                for a in letters:
                    if aa.mul_body(a, seq[0], N) is not None:
                        out.add((w, tuple([a] + seq)))
                    if aa.mul_body(seq[-1], a, N) is not None:
                        out.add((w, tuple(seq + [a])))
                for p in range(n + 1):
                    idem = aa.final_idem(seq[p - 1], N) if p else aa.init_idem(seq[0], N)
                    for i in range(1, N + 2):
                        if w[i]:
                            body = a_push_body(N, i, idem)
                            if body is None:
                                continue
                            w2 = list(w)
                            w2[i] -= 1
                            out.add((tuple(w2), tuple(seq[:p] + [body] + seq[p:])))
    return sorted((w, s) for w, s in out if len(s) <= max_n)


def random_a_sequence(rng, N, max_n=None, max_weight=2):
    """A random weighted sequence of chained A-bodies.

    Half of the samples perturb an accepted centered operation (merging
    neighbours, splitting, extending, pushing weight), the rest are
    uniformly random chains of short bodies.
    """
    max_n = 4 * N - 1 if max_n is None else max_n
    if rng.random() < 0.5:
        j = rng.choice((1, 1, 2))
        k = rng.choice((0, 1, 2))
        table = sorted(aa.centered_table(N, j, k))
        if table:
            w, seq = rng.choice(table)
            w, seq = list(w), list(seq)
            for _ in range(rng.randint(1, 2)):
                r = rng.random()
                p = rng.randrange(len(seq))
                if r < 0.3:
                    splits = aa.factorizations(seq[p], N)
                    if splits:
                        left, right = rng.choice(splits)
                        seq[p:p + 1] = [left, right]
                elif r < 0.55 and p + 1 < len(seq):
                    m = aa.mul_body(seq[p], seq[p + 1], N)
                    if m is not None:
                        seq[p:p + 2] = [m]
                elif r < 0.8:
                    a = rng.choice(a_letter_bodies(N))
                    if rng.random() < 0.5:
                        seq.insert(0, a)
                    else:
                        seq.append(a)
                else:
                    i = rng.choice([i for i in range(1, N + 2) if w[i]] or [rng.randint(1, N + 1)])
                    q = rng.randint(0, len(seq))
                    idem = aa.final_idem(seq[q - 1], N) if q else aa.init_idem(seq[0], N)
                    body = a_push_body(N, i, idem)
                    if body is not None:
                        if w[i]:
                            w[i] -= 1
                        seq.insert(q, body)
            if len(seq) <= max_n and wsize(w) <= max_weight:
                return tuple(w), tuple(seq)
    n = rng.randint(1, max_n)
    cur = rng.randint(1, N)
    seq = []
    for _ in range(n):
        if rng.random() < 0.5:
            body = aa.upow(cur, rng.choice((1, 1, 1, 2)))
        else:
            body = aa.chord(cur, rng.choice((1, 1, 1, 2, N - 1)))
        seq.append(body)
        cur = aa.final_idem(body, N)
    w = [0] * (N + 2)
    for _ in range(rng.randint(0, max_weight)):
        w[rng.randint(1, N + 1)] += 1
    return tuple(w), tuple(seq)


def check_a_relations(A, cases):
    """Relation sums over (w, bodies) cases; counts nontrivial relations."""
    z = A.zero
    counts = {"sequences": 0, "nontrivial": 0}
    failures = []
    for w, bodies in cases:
        counts["sequences"] += 1
        terms = A.relation_terms(w, [(z, b) for b in bodies])
        if len(terms) >= 2:
            counts["nontrivial"] += 1
        if combo_sum(t for e in terms for t in e[3]):
            failures.append((w, tuple(aa.body_text(b) for b in bodies)))
    return _result(counts, failures, A.audit)


def _a_task(task):
    kind, N, seed, lo, hi, max_weight = task
    A = AlgebraA(N)
    if kind == "witness":
        cases = a_witnesses(N)
    else:
        cases = (random_a_sequence(sample_rng(seed, i), N, max_weight=max_weight)
                 for i in range(lo, hi))
    counts, failures = {"witnesses": 0, "random": 0}, []
    r = check_a_relations(A, cases)
    counts.update(r["counts"])
    counts["witnesses" if kind == "witness" else "random"] = r["counts"]["sequences"]
    return {"counts": counts, "failures": r["failures"], "audits": {"A": A.audit}}


def sweep_a(N, samples=10000, seed=0, max_weight=2, witnesses=True, threads=None):
    """Witness families plus random samples; zero failures means every relation held."""
    threads = worker_count() if threads is None else threads
    tasks = [("witness", N, seed, 0, 0, max_weight)] if witnesses else []
    tasks += [("random", N, seed, lo, hi, max_weight)
              for lo, hi in _chunks(samples, threads)]
    counts, failures, audits = _merge(_fan_out(_a_task, tasks, threads))
    return _result(counts, failures, audits.get("A", new_audit()))


def recognition_census(N, j=1, w=None, A=None):
    """Every chained sequence of single letters U_i, s_i accepted at j vertices.

    Returns (number of candidates, sorted list of (letters, output text)).
    """
    A = AlgebraA(N) if A is None else A
    w = zero_vec(N) if w is None else tuple(w)
    n = j * (2 * N - 2) + 2 - 2 * wsize(w)
    z = A.zero
    found = []
    total = 0

    def rec(seq, cur):
        nonlocal total
        if len(seq) == n:
            total += 1
            out = A.mu_terms(w, tuple((z, b) for b in seq))
            if out:
                found.append((tuple(aa.body_text(b) for b in seq), aa.element_text(out)))
            return
        for b in (aa.upow(cur), aa.chord(cur)):
            seq.append(b)
            rec(seq, aa.final_idem(b, N))
            seq.pop()

    for start in range(1, N + 1):
        rec([], start)
    return total, sorted(found)


# B-side

def b_sequences(N, max_k, max_total, words=None):
    """Chained sequences (written order) of words with sigma-length total <= max_total."""
    if words is None:
        words = AlgebraB(N).all_words(max_total)
    by_start = {}
    for b in words:
        by_start.setdefault(ab.init_idem(b, N), []).append(b)

    def rec(path, total):
        yield tuple(reversed(path))
        if len(path) == max_k:
            return
        for b in by_start.get(ab.final_idem(path[-1], N), ()):
            if total + b[2] <= max_total:
                path.append(b)
                yield from rec(path, total + b[2])
                path.pop()

    for b in words:
        if b[2] <= max_total:
            yield from rec([b], b[2])


def check_b_differential(B, max_len):
    """d^2 = 0 on every word of sigma-length <= max_len."""
    z = B.zero
    failures = []
    words = B.all_words(max_len)
    for b in words:
        if B.mu(z, [B.mu(z, [frozenset({(z, b)})])]):
            failures.append(ab.body_text(b, B.N))
    return {"words": len(words), "failures": failures}


def sweep_b(N, max_k=5, max_total=None, weights=None):
    """Exhaustive relation check for B plus d^2 = 0.

    weights defaults to (0, e_0); e_0 is the only weight B carries.
    """
    B = AlgebraB(N)
    max_total = 2 * N + 2 if max_total is None else max_total
    z = zero_vec(N)
    if weights is None:
        weights = (z, unit_vec(N, 0))
    counts = {"sequences": 0, "nontrivial": 0}
    failures = []
    for bodies in b_sequences(N, max_k, max_total):
        terms = [(z, b) for b in bodies]
        for w in weights:
            counts["sequences"] += 1
            rel = B.relation_terms(w, terms)
            if len(rel) >= 2:
                counts["nontrivial"] += 1
            if combo_sum(t for e in rel for t in e[3]):
                failures.append((w, tuple(ab.body_text(b, N) for b in bodies)))
    out = _result(counts, failures, B.audit)
    diff = check_b_differential(B, max_total)
    out["counts"]["words"] = diff["words"]
    out["failures"].extend(("d^2", b) for b in diff["failures"])
    return out


# the AA bimodule

def _y_task(task):
    kind, N, seed, lo, hi, max_terms, max_weight = task
    Y = BimoduleY(N)
    if kind == "basic":
        r = check_y_relations(Y, basic_y_queries(N, max_terms, max_weight))
    else:
        queries = []
        i = lo
        while i < hi:
            q = random_y_query(sample_rng(seed, i), N)
            i += 1
            if q is not None:
                queries.append(q)
        r = check_y_relations(Y, queries)
    counts = {"%s_%s" % (kind, k): v for k, v in r["counts"].items()}
    return {"counts": counts, "failures": r["failures"],
            "audits": {"Y": Y.audit, "A": Y.A.audit, "B": Y.B.audit}}


def sweep_y(N, max_terms=6, max_weight=2, samples=10000, seed=0, exhaustive=True, threads=None):
    """Exhaustive basic-letter queries plus random composite queries.

    Random sample indices that do not yield a valid query are skipped, so
    the random part checks at most `samples` queries.
    """
    threads = worker_count() if threads is None else threads
    tasks = [("basic", N, seed, 0, 0, max_terms, max_weight)] if exhaustive else []
    tasks += [("random", N, seed, lo, hi, max_terms, max_weight)
              for lo, hi in _chunks(samples, threads)]
    counts, failures, audits = _merge(_fan_out(_y_task, tasks, threads))
    grading = {k: audit_summary(audits.get(k, new_audit())) for k in ("Y", "A", "B")}
    for k, g in grading.items():
        failures.extend(("grading " + k, repr(f)) for f in g["failures"])
    return {"counts": counts, "failures": failures, "grading": grading}
