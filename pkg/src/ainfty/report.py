"""Run configuration and report assembly for the command line.

JSON reports are deterministic for a fixed RunConfig: they carry no wall
time and every list is emitted in a fixed order. Text reports add the wall
time and are meant for people, not parsers.
"""
import json
import time
from dataclasses import asdict, dataclass
from typing import Optional

from . import algebra_a as aa
from . import algebra_b as ab
from . import trees as tr
from .ring import check_N, wsize

SCHEMA_VERSION = 1

VERIFY_TARGETS = ("algebra-a", "algebra-b", "bimodule-y", "bimodule-dd", "diagonal", "duality")
ENUMERATE_TARGETS = ("algebra-a", "diagonal", "homology-b")

# hard ceilings; beyond these a run would not finish on a desk machine
LIMITS = {"max_inputs": 12, "max_weight": 3, "max_len": 12, "samples": 10 ** 7, "j": 4}


class CapError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    target: str
    N: int = 3
    max_inputs: Optional[int] = None
    max_weight: Optional[int] = None
    max_len: Optional[int] = None
    samples: Optional[int] = None
    seed: int = 0
    j: Optional[int] = None

    def validate(self):
        check_N(self.N)
        targets = VERIFY_TARGETS if self.command == "verify" else ENUMERATE_TARGETS
        if self.target not in targets:
            raise ValueError("unknown %s target %r" % (self.command, self.target))
        for name, limit in LIMITS.items():
            v = getattr(self, name)
            if v is None:
                continue
            low = 0 if name in ("max_weight", "samples") else 1
            if v < low:
                raise CapError("--%s must be >= %d" % (name.replace("_", "-"), low))
            if v > limit:
                raise CapError("--%s %d exceeds the cap %d" % (name.replace("_", "-"), v, limit))
        return self

    def pick(self, name, default):
        v = getattr(self, name)
        return default if v is None else v


def _w(w):
    return tr._wtext(w) or "0"


# verify

def _verify_algebra_a(cfg):
    from .sweeps import sweep_a
    caps = {"samples": cfg.pick("samples", 10000), "max_weight": cfg.pick("max_weight", 2)}
    r = sweep_a(cfg.N, samples=caps["samples"], seed=cfg.seed, max_weight=caps["max_weight"])
    failures = ["relation %s %s" % (_w(w), " ".join(seq)) for w, seq in r["failures"]]
    failures += ["grading %r" % (f,) for f in r["grading"]["failures"]]
    counts = dict(r["counts"], operations=r["grading"]["operations"])
    return caps, counts, failures, None


def _verify_algebra_b(cfg):
    from .sweeps import sweep_b
    caps = {"max_inputs": cfg.pick("max_inputs", 5), "max_len": cfg.pick("max_len", 2 * cfg.N + 2)}
    r = sweep_b(cfg.N, max_k=caps["max_inputs"], max_total=caps["max_len"])
    failures = []
    for f in r["failures"]:
        if f[0] == "d^2":
            failures.append("d^2 %s" % f[1])
        else:
            failures.append("relation %s %s" % (_w(f[0]), " ".join(f[1])))
    failures += ["grading %r" % (f,) for f in r["grading"]["failures"]]
    counts = dict(r["counts"], operations=r["grading"]["operations"])
    return caps, counts, failures, None


def _verify_bimodule_y(cfg):
    from .sweeps import sweep_y
    caps = {"max_inputs": cfg.pick("max_inputs", 6), "max_weight": cfg.pick("max_weight", 2),
            "samples": cfg.pick("samples", 10000)}
    r = sweep_y(cfg.N, max_terms=caps["max_inputs"], max_weight=caps["max_weight"],
                samples=caps["samples"], seed=cfg.seed)
    failures = ["%s %s" % f for f in r["failures"]]
    counts = dict(r["counts"])
    for k, g in r["grading"].items():
        counts["operations_" + k] = g["operations"]
    return caps, counts, failures, None


def dd_term_text(key, N):
    v, ba, bb, y = key
    mono = aa.vmono_text(v)
    left = (mono + "*" if mono else "") + aa.body_text(ba)
    return "%s (x) %s -> x%d" % (left, ab.body_text(bb, N), y)


def _verify_bimodule_dd(cfg):
    from .bimodules import dd_relation_check, dd_targets
    caps = {"max_weight": cfg.pick("max_weight", 1)}
    r = dd_relation_check(cfg.N, max_weight=caps["max_weight"])
    failures = []
    if not r["sum_is_zero"]:
        failures.append("dd relation sum is nonzero")
    if not r["census_ok"]:
        failures.append("census differs from the expected multiset")
    failures += ["unexpected term %s" % dd_term_text(k, cfg.N) for k in r["unexpected"]]
    census = {}
    for name, support in dd_targets(cfg.N).items():
        census[name] = {dd_term_text(k, cfg.N): r["term_counts"][k]
                        for k in sorted(support, key=lambda k: dd_term_text(k, cfg.N))}
    counts = {"contributions": r["contributions"], "terms": sum(r["term_counts"].values())}
    return caps, counts, failures, census


def _verify_diagonal(cfg):
    from .diagonal import Diagonal, verify_diagonal
    caps = {"max_inputs": cfg.pick("max_inputs", 6), "max_weight": cfg.pick("max_weight", 1)}
    d = Diagonal(cfg.N, caps["max_inputs"], caps["max_weight"]).build()
    r = verify_diagonal(d)
    failures = [" ".join(str(x) for x in v) for v in r["violations"]]
    return caps, dict(r["counts"]), failures, None


def _verify_duality(cfg):
    from .bimodules import verify_duality, verify_phi_vanishing
    caps = {"max_len": cfg.pick("max_len", 3), "max_inputs": cfg.pick("max_inputs", 4)}
    r = verify_duality(cfg.N, max_len=caps["max_len"])
    v = verify_phi_vanishing(cfg.N, K=caps["max_inputs"])
    counts = {}
    for side, c in r["counts"].items():
        for k, n in c.items():
            counts["%s_%s" % (side, k)] = n
    counts["phi_vanishing_A"] = v["counts"]["A"]
    counts["phi_vanishing_B"] = v["counts"]["B"]
    counts["homology_classes"] = v["classes"]
    failures = [" ".join(str(x) for x in f) for f in r["failures"]]
    failures += ["phi_k %s" % " ".join(str(x) for x in f) for f in v["failures"]]
    return caps, counts, failures, None


# enumerate

def _enumerate_algebra_a(cfg):
    from .sweeps import recognition_census
    j = cfg.pick("j", 1)
    total, found = recognition_census(cfg.N, j)
    items = ["%s -> %s" % (" ".join(seq), out) for seq, out in found]
    return {"j": j}, {"candidates": total, "operations": len(found)}, [], items


def _enumerate_diagonal(cfg):
    from .diagonal import Diagonal, pair_key
    caps = {"max_inputs": cfg.pick("max_inputs", 4), "max_weight": cfg.pick("max_weight", 0)}
    d = Diagonal(cfg.N, max(caps["max_inputs"], 2), caps["max_weight"]).build()
    items = []
    for (n, w), chain in d.table().items():
        if n > caps["max_inputs"] or wsize(w) > caps["max_weight"]:
            continue
        for p in chain:
            items.append("G^{%d,%s}: %s | %s" % ((n, _w(w)) + pair_key(p)))
    return caps, {"pairs": len(items)}, [], items


def _enumerate_homology_b(cfg):
    from .algebra_b import AlgebraB
    caps = {"max_len": cfg.pick("max_len", 2)}
    h = AlgebraB(cfg.N).homology(caps["max_len"])
    items = sorted(ab.element_text(frozenset(c), cfg.N) for c in h["classes"])
    items += ["%s*i%s is a boundary: %s" % (name, name[1:], "yes" if ok else "no")
              for name, ok in h["boundaries"]]
    failures = ["%s is not a boundary" % name for name, ok in h["boundaries"] if not ok]
    return caps, {"classes": len(h["classes"])}, failures, items


RUNNERS = {
    ("verify", "algebra-a"): _verify_algebra_a,
    ("verify", "algebra-b"): _verify_algebra_b,
    ("verify", "bimodule-y"): _verify_bimodule_y,
    ("verify", "bimodule-dd"): _verify_bimodule_dd,
    ("verify", "diagonal"): _verify_diagonal,
    ("verify", "duality"): _verify_duality,
    ("enumerate", "algebra-a"): _enumerate_algebra_a,
    ("enumerate", "diagonal"): _enumerate_diagonal,
    ("enumerate", "homology-b"): _enumerate_homology_b,
}


def run(cfg):
    """Run one command; returns (report dict, wall time in seconds)."""
    cfg.validate()
    start = time.perf_counter()
    caps, counts, failures, extra = RUNNERS[(cfg.command, cfg.target)](cfg)
    wall = time.perf_counter() - start
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": {k: v for k, v in asdict(cfg).items() if v is not None},
        "params": dict(caps, N=cfg.N, seed=cfg.seed),
        "counts": counts,
        "failures": failures,
        "ok": not failures,
    }
    if cfg.command == "enumerate":
        report["items"] = extra
    elif extra is not None:
        report["census"] = extra
    return report, wall


def to_json(report):
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def to_text(report, wall=None):
    cmd = report["command"]
    lines = ["%s %s  N=%d" % (cmd["command"], cmd["target"], report["params"]["N"])]
    lines.append("params: " + ", ".join("%s=%s" % kv for kv in sorted(report["params"].items())))
    for k, v in sorted(report["counts"].items()):
        lines.append("  %-24s %s" % (k, v))
    for name, table in sorted(report.get("census", {}).items()):
        lines.append("census %s" % name)
        for term, c in table.items():
            lines.append("  %dx  %s" % (c, term))
    for item in report.get("items", []):
        lines.append("  " + item)
    for f in report["failures"]:
        lines.append("FAIL " + f)
    lines.append("result: %s" % ("ok" if report["ok"] else "%d failures" % len(report["failures"])))
    if wall is not None:
        lines.append("wall time: %.2f s" % wall)
    return "\n".join(lines) + "\n"
