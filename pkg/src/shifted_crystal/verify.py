"""Invariant suites run by ``shifted-crystal verify``.

Each check returns a list of witnesses; an empty list is a pass.
"""

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .cactus import braid_order, long_element_check, sigma_permutation, verify_cactus_relations
from .graph import build, components, strings, weight_multiset
from .involutions import complement_tableau, complement_word, eta
from .jdt import rect
from .operators import WORD_OPS, is_ballot, length_functions, walk_endpoint
from .shapes import ShiftedShape
from .tableau import column_word, enumerate_tableaux

APPENDIX = {
    (3, 2, 1): (8, 3),
    (4, 2, 1): (24, 3),
    (4, 3, 1): (24, 3),
    (5, 2, 1): (48, 9),
    (5, 3, 1): (64, 45),
    (5, 4, 1): (48, 9),
    (6, 2, 1): (80, 18),
    (6, 3, 1): (120, 18),
    (6, 4, 1): (120, 18),
}

SUITES = ("all", "crystal", "involution", "cactus", "appendix")


def _ops():
    return ("E", "F", "Ep", "Fp")


def check_inverse_pairs(g):
    bad = []
    for i in range(1, g.n):
        for name in ("E", "Ep"):
            succ = g.op(name, i)
            for v, t in enumerate(g.vertices):
                w = WORD_OPS[name](t.word, i)
                got = -1 if w is None else g.index[w]
                if got != succ[v]:
                    bad.append({"i": i, "op": name, "vertex": v})
    return bad


def check_complement_oracle(g):
    bad = []
    n = g.n
    for i in range(1, n):
        for v, t in enumerate(g.vertices):
            e = WORD_OPS["E"](t.word, i)
            f = WORD_OPS["F"](complement_word(t.word, n), n - i)
            if e != (None if f is None else complement_word(f, n)):
                bad.append({"i": i, "vertex": v})
    return bad


def check_walk_shift(g):
    bad = []
    for i in range(1, g.n):
        for v, t in enumerate(g.vertices):
            x, y = walk_endpoint(t.word, i)
            for name, (dx, dy) in (("F", (-1, 1)), ("E", (1, -1))):
                u = g.op(name, i)[v]
                if u >= 0 and walk_endpoint(g.vertices[u].word, i) != (x + dx, y + dy):
                    bad.append({"i": i, "op": name, "vertex": v})
            if x == 0 and g.f[i][v] >= 0:
                bad.append({"i": i, "op": "F at x=0", "vertex": v})
    return bad


def check_commutation(g):
    bad = []
    names = _ops()
    for i in range(1, g.n):
        for a in range(len(names)):
            for b in range(a + 1, len(names)):
                sa, sb = g.op(names[a], i), g.op(names[b], i)
                for v in range(len(g)):
                    x = sb[v]
                    x = sa[x] if x >= 0 else -1
                    y = sa[v]
                    y = sb[y] if y >= 0 else -1
                    if x >= 0 and y >= 0 and x != y:
                        bad.append({"i": i, "ops": [names[a], names[b]], "vertex": v})
    return bad


def check_coplactic(g):
    bad = []
    if g.shape.is_straight:
        return bad
    rects = [rect(t) for t in g.vertices]
    for i in range(1, g.n):
        for name in _ops():
            succ = g.op(name, i)
            for v, r in enumerate(rects):
                w = WORD_OPS[name](r.word, i)
                u = succ[v]
                if (w is None) != (u < 0) or (w is not None and rects[u].word != w):
                    bad.append({"i": i, "op": name, "vertex": v})
    return bad


def check_highest_weights(g):
    bad = []
    tops = set(g.highest_weights())
    bottoms = set(g.lowest_weights())
    for comp in components(g):
        hs = [v for v in comp if v in tops]
        ls = [v for v in comp if v in bottoms]
        if len(hs) != 1 or len(ls) != 1:
            bad.append({"component": comp[0], "highest": hs, "lowest": ls})
            continue
        top = g.vertices[hs[0]]
        if not is_ballot(top.word, g.n):
            bad.append({"component": comp[0], "highest_not_ballot": hs[0]})
        if eta(top) != g.vertices[ls[0]]:
            bad.append({"component": comp[0], "eta_of_highest_not_lowest": hs[0]})
        if not g.shape.is_straight:
            nu = tuple(x for x in top.weight if x)
            h = build(ShiftedShape(nu), g.n)
            if weight_multiset(g, comp) != weight_multiset(h):
                bad.append({"component": comp[0], "weight_multiset": "differs"})
    return bad


def check_strings(g):
    bad = []
    for i in range(1, g.n):
        try:
            parts = strings(g, i)
        except RuntimeError as exc:
            bad.append({"i": i, "error": str(exc)})
            continue
        for vs, shape in parts:
            top = [v for v in vs if g.e(i)[v] < 0 and g.ep(i)[v] < 0]
            if len(top) != 1:
                bad.append({"i": i, "string": vs[0], "tops": top})
                continue
            t = g.vertices[top[0]]
            same = g.f[i][top[0]] == g.fp[i][top[0]]
            if same != (t.weight[i] == 0):
                bad.append({"i": i, "string_top": top[0], "rule": "F=F' iff wt_{i+1}=0"})
            for v in vs:
                lf = length_functions(g.vertices[v], i)
                if shape.kind == "collapsed":
                    ok = lf.eps_total == lf.eps_hat == lf.eps_prime and lf.phi_total == lf.phi_hat == lf.phi_prime
                else:
                    ok = (
                        lf.eps_total == lf.eps_hat + lf.eps_prime
                        and lf.phi_total == lf.phi_hat + lf.phi_prime
                        and lf.eps_prime in (0, 1)
                        and lf.phi_prime in (0, 1)
                    )
                if not ok:
                    bad.append({"i": i, "vertex": v, "kind": shape.kind, "lengths": lf.__dict__})
    return bad


def check_eta(g):
    bad = []
    n = g.n
    image = [g.find(eta(t)) for t in g.vertices]
    for v, t in enumerate(g.vertices):
        u = image[v]
        if image[u] != v:
            bad.append({"vertex": v, "rule": "eta^2"})
        if g.vertices[u].weight != t.weight[::-1]:
            bad.append({"vertex": v, "rule": "weight reversed"})
        for i in range(1, n):
            j = n - i
            for a, b in (("Ep", "Fp"), ("E", "F"), ("Fp", "Ep"), ("F", "E")):
                x = g.op(a, i)[u]
                y = g.op(b, j)[v]
                y = image[y] if y >= 0 else -1
                if x != y:
                    bad.append({"vertex": v, "rule": f"{a}_{i} eta = eta {b}_{j}"})
            lf, lg = length_functions(t, i), length_functions(g.vertices[u], j)
            if lf.phi_total != lg.eps_total or lf.eps_total != lg.phi_total:
                bad.append({"vertex": v, "rule": "phi_i = eps_{n-i} eta"})
        c = complement_tableau(t)
        if complement_tableau(c) != t or column_word(c) != complement_word(t.word, n):
            bad.append({"vertex": v, "rule": "complement"})
        r = rect(g.vertices[u])
        if r.rows != rect(c).rows:
            bad.append({"vertex": v, "rule": "eta Knuth equivalent to complement"})
    return bad


def check_cactus(g):
    rep = verify_cactus_relations(g)
    bad = list(rep.violations)
    for i in range(1, g.n):
        s = sigma_permutation(g, i)
        for v in range(len(g)):
            if s[s[v]] != v:
                bad.append({"i": i, "vertex": v, "rule": "sigma^2"})
        for j in range(i + 2, g.n):
            s2 = sigma_permutation(g, j)
            for v in range(len(g)):
                if s[s2[v]] != s2[s[v]]:
                    bad.append({"i": i, "j": j, "vertex": v, "rule": "far sigmas commute"})
    if g.shape.is_straight and g.shape.outer and len(g.shape.outer) <= g.n:
        if not long_element_check(g.shape.outer, g.n):
            bad.append({"rule": "long element"})
    return bad


SUITE_CHECKS = {
    "crystal": (
        ("inverse pairs", check_inverse_pairs),
        ("E table = c F c", check_complement_oracle),
        ("walk shift", check_walk_shift),
        ("commutation", check_commutation),
        ("coplacticity", check_coplactic),
        ("unique highest weight", check_highest_weights),
        ("string classification", check_strings),
    ),
    "involution": (("eta properties", check_eta),),
    "cactus": (("cactus relations", check_cactus),),
}


@dataclass
class CheckResult:
    suite: str
    name: str
    target: str
    passed: bool
    seconds: float
    witness: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "check": self.name,
            "target": self.target,
            "status": "pass" if self.passed else "fail",
            "seconds": round(self.seconds, 4),
            "witness": self.witness[:5],
        }


@dataclass
class RunReport:
    command: str
    results: list = field(default_factory=list)
    artifacts: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "ok": self.ok,
            "checks": [r.to_json() for r in self.results],
            "artifacts": self.artifacts,
        }

    def to_text(self) -> str:
        rows = [("status", "suite", "check", "target", "seconds")]
        for r in self.results:
            rows.append(("PASS" if r.passed else "FAIL", r.suite, r.name, r.target, f"{r.seconds:.3f}"))
        widths = [max(len(row[k]) for row in rows) for k in range(5)]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
        lines.append(f"{'OK' if self.ok else 'FAILED'}: {sum(r.passed for r in self.results)}/{len(self.results)} checks passed")
        return "\n".join(lines)


def _timed(suite, name, target, fn, *args):
    t0 = time.perf_counter()
    try:
        witness = fn(*args)
    except Exception as exc:  # report, do not crash the runner
        witness = [{"error": repr(exc)}]
    return CheckResult(suite, name, target, not witness, time.perf_counter() - t0, witness)


def run_shape(suite: str, shape: ShiftedShape, n: int):
    target = f"B({shape},{n})"
    g = build(shape, n)
    names = ("crystal", "involution", "cactus") if suite == "all" else (suite,)
    out = []
    for s in names:
        for name, fn in SUITE_CHECKS[s]:
            out.append(_timed(s, name, target, fn, g))
    return out


def _appendix_sizes():
    bad = []
    for nu, (size, _) in APPENDIX.items():
        got = len(enumerate_tableaux(ShiftedShape(nu), 3))
        if got != size:
            bad.append({"shape": list(nu), "expected": size, "got": got})
    return bad


def _appendix_orders():
    bad = []
    for nu, (_, m) in APPENDIX.items():
        got, _ = braid_order(nu, 3)
        if got != m:
            bad.append({"shape": list(nu), "expected": m, "got": got})
    return bad


def run_appendix():
    return [
        _timed("appendix", "crystal sizes", "nine shapes, n=3", _appendix_sizes),
        _timed("appendix", "braid orbit orders", "nine shapes, n=3", _appendix_orders),
    ]


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("SHIFTED_CRYSTAL_THREADS", "1")))
    except ValueError:
        return 1


def run(suite: str, targets, command: str = "") -> RunReport:
    """Run ``suite`` over ``targets`` (a list of (shape, n) pairs)."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    report = RunReport(command)
    if suite != "appendix" and targets:
        workers = min(worker_count(), len(targets))
        if workers > 1:
            with ProcessPoolExecutor(workers) as pool:
                for res in pool.map(run_shape, [suite] * len(targets), *zip(*targets)):
                    report.results.extend(res)
        else:
            for shape, n in targets:
                report.results.extend(run_shape(suite, shape, n))
    if suite in ("appendix", "all"):
        report.results.extend(run_appendix())
    return report
