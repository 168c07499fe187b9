"""The crystal graph B(lambda/mu, n) as index-based successor arrays."""

import json
from collections import Counter
from dataclasses import dataclass, field

from .operators import is_ballot, lower_primed, lower_unprimed
from .shapes import ShiftedShape, strict_partition
from .tableau import ShiftedTableau, enumerate_tableaux, tableau_from_json

COLORS = ("red", "blue", "green")


@dataclass
class CrystalGraph:
    """Vertices are tableaux; ``f[i][v]`` / ``fp[i][v]`` give the index of
    F_i / F'_i of vertex ``v``, or -1 when undefined."""

    shape: ShiftedShape
    n: int
    vertices: list
    f: dict = field(default_factory=dict)
    fp: dict = field(default_factory=dict)

    def __post_init__(self):
        self.index = {t.word: k for k, t in enumerate(self.vertices)}
        self._e = {}
        self._ep = {}

    def __len__(self):
        return len(self.vertices)

    def find(self, t) -> int:
        word = t.word if isinstance(t, ShiftedTableau) else tuple(t)
        return self.index[word]

    def _inverse(self, succ):
        inv = [-1] * len(self.vertices)
        for v, w in enumerate(succ):
            if w >= 0:
                if inv[w] >= 0:
                    raise RuntimeError("edge map is not injective")
                inv[w] = v
        return inv

    def e(self, i):
        if i not in self._e:
            self._e[i] = self._inverse(self.f[i])
        return self._e[i]

    def ep(self, i):
        if i not in self._ep:
            self._ep[i] = self._inverse(self.fp[i])
        return self._ep[i]

    def op(self, name: str, i: int):
        """Successor array for E, F, Ep or Fp."""
        if name == "F":
            return self.f[i]
        if name == "Fp":
            return self.fp[i]
        if name == "E":
            return self.e(i)
        if name == "Ep":
            return self.ep(i)
        raise ValueError(f"unknown operator {name!r}")

    def edges(self):
        """(source, target, i, primed) in a fixed order."""
        out = []
        for i in range(1, self.n):
            for v in range(len(self.vertices)):
                if self.f[i][v] >= 0:
                    out.append((v, self.f[i][v], i, False))
                if self.fp[i][v] >= 0:
                    out.append((v, self.fp[i][v], i, True))
        return out

    def highest_weights(self):
        return [v for v in range(len(self)) if all(self.e(i)[v] < 0 and self.ep(i)[v] < 0 for i in range(1, self.n))]

    def lowest_weights(self):
        return [v for v in range(len(self)) if all(self.f[i][v] < 0 and self.fp[i][v] < 0 for i in range(1, self.n))]

    def __eq__(self, other):
        if not isinstance(other, CrystalGraph):
            return NotImplemented
        return (
            self.shape == other.shape
            and self.n == other.n
            and [t.word for t in self.vertices] == [t.word for t in other.vertices]
            and self.edges() == other.edges()
        )


def build(shape: ShiftedShape, n: int) -> CrystalGraph:
    vertices = enumerate_tableaux(shape, n)
    g = CrystalGraph(shape, n, vertices)
    for i in range(1, n):
        fi, fpi = [], []
        for t in vertices:
            for op, succ in ((lower_unprimed, fi), (lower_primed, fpi)):
                w = op(t.word, i)
                if w is None:
                    succ.append(-1)
                    continue
                try:
                    succ.append(g.index[w])
                except KeyError:
                    raise RuntimeError(f"operator output {w} is not a vertex; this is a bug") from None
        g.f[i], g.fp[i] = fi, fpi
    return g


def components(g: CrystalGraph):
    """Connected components (ignoring colors and directions), each sorted."""
    parent = list(range(len(g)))

    def root(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b, _, _ in g.edges():
        ra, rb = root(a), root(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups = {}
    for v in range(len(g)):
        groups.setdefault(root(v), []).append(v)
    return sorted(groups.values())


@dataclass(frozen=True)
class StringShape:
    color: int
    kind: str  # "separated" or "collapsed"
    chain_lengths: tuple[int, ...]


def _chains(vs, succ, pred):
    """Split ``vs`` into maximal chains along ``succ``; None if not a union of paths."""
    out = []
    seen = set()
    for v in vs:
        if pred[v] >= 0 and pred[v] in vs:
            continue
        chain = [v]
        while succ[chain[-1]] >= 0:
            chain.append(succ[chain[-1]])
        out.append(chain)
        seen.update(chain)
    if seen != set(vs):
        return None
    return out


def strings(g: CrystalGraph, i: int):
    """Partition into i-strings, each classified as separated or collapsed."""
    f, fp = g.f[i], g.fp[i]
    e, ep = g.e(i), g.ep(i)
    parent = list(range(len(g)))

    def root(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for v in range(len(g)):
        for w in (f[v], fp[v]):
            if w >= 0:
                parent[root(w)] = root(v)
    groups = {}
    for v in range(len(g)):
        groups.setdefault(root(v), []).append(v)
    out = []
    for vs in sorted(groups.values()):
        vset = set(vs)
        chains = _chains(vset, f, e)
        if chains is None:
            raise RuntimeError(f"{i}-string at vertex {vs[0]} is not a union of chains")
        if all(f[v] == fp[v] for v in vs) and len(chains) == 1:
            out.append((vs, StringShape(i, "collapsed", (len(chains[0]) - 1,))))
            continue
        if len(chains) == 2 and len(chains[0]) == len(chains[1]):
            a, b = chains
            if fp[a[0]] != b[0]:
                a, b = b, a
            if all(fp[x] == y for x, y in zip(a, b)) and all(fp[y] < 0 for y in b):
                out.append((vs, StringShape(i, "separated", (len(a) - 1, len(b) - 1))))
                continue
        raise RuntimeError(f"{i}-string at vertex {vs[0]} matches neither template")
    return out


def lrs_coefficient(lam, mu, nu, n: int | None = None) -> int:
    """Number of tableaux of shape lam/mu and weight nu with ballot reading word."""
    lam, mu, nu = strict_partition(lam), strict_partition(mu), strict_partition(nu)
    if sum(lam) != sum(mu) + sum(nu):
        raise ValueError("|lambda| must equal |mu| + |nu|")
    if n is None:
        n = max(len(nu), 1)
    shape = ShiftedShape(lam, mu)
    return sum(1 for t in enumerate_tableaux(shape, n, nu) if is_ballot(t.word, n))


def weight_multiset(g: CrystalGraph, vertices=None) -> Counter:
    vs = range(len(g)) if vertices is None else vertices
    return Counter(g.vertices[v].weight for v in vs)


def summary(g: CrystalGraph) -> dict:
    comps = components(g)
    out = {
        "shape": str(g.shape),
        "n": g.n,
        "vertices": len(g),
        "edges": len(g.edges()),
        "components": len(comps),
        "highest_weights": [list(g.vertices[v].weight) for v in g.highest_weights()],
        "strings": {},
    }
    for i in range(1, g.n):
        kinds = Counter(s.kind for _, s in strings(g, i))
        out["strings"][str(i)] = dict(sorted(kinds.items()))
    return out


def to_dot(g: CrystalGraph) -> str:
    lines = ["digraph crystal {", "  node [shape=box, fontname=monospace];"]
    for v, t in enumerate(g.vertices):
        label = t.to_text().replace("\n", "\\n")
        lines.append(f'  v{v} [label="{label}"];')
    for a, b, i, primed in g.edges():
        color = COLORS[(i - 1) % len(COLORS)]
        if primed:
            lines.append(f'  v{a} -> v{b} [label="{i}\'", color={color}, style=dashed];')
        else:
            lines.append(f'  v{a} -> v{b} [label="{i}", color={color}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: CrystalGraph) -> dict:
    return {
        "lambda": list(g.shape.outer),
        "mu": list(g.shape.inner),
        "n": g.n,
        "vertices": [t.to_json() for t in g.vertices],
        "edges": [{"from": a, "to": b, "i": i, "primed": p} for a, b, i, p in g.edges()],
    }


def export(g: CrystalGraph, fmt: str = "dot") -> str:
    if fmt == "dot":
        return to_dot(g)
    if fmt == "json":
        return json.dumps(to_json(g), indent=1) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def from_json(doc) -> CrystalGraph:
    if isinstance(doc, str):
        doc = json.loads(doc)
    shape = ShiftedShape(tuple(doc["lambda"]), tuple(doc.get("mu", ())))
    n = doc["n"]
    vertices = [tableau_from_json(v) for v in doc["vertices"]]
    g = CrystalGraph(shape, n, vertices)
    for i in range(1, n):
        g.f[i] = [-1] * len(vertices)
        g.fp[i] = [-1] * len(vertices)
    for e in doc["edges"]:
        (g.fp if e["primed"] else g.f)[e["i"]][e["from"]] = e["to"]
    return g
