"""Reflection operators sigma_i, the restricted involutions eta_{p,q} and
the cactus group action on a crystal graph."""

import math
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from .graph import CrystalGraph, build
from .involutions import eta, evacuate
from .operators import WORD_OPS
from .shapes import ShiftedShape, strict_partition
from .tableau import ShiftedTableau, replace_range, restrict, shift_values, yamanouchi
from .words import weight


def _step(w, op, i):
    out = WORD_OPS[op](w, i)
    if out is None:
        raise RuntimeError(f"{op}_{i} undefined inside sigma; this is a bug")
    return out


def _power(w, op, i, k):
    for _ in range(k):
        w = _step(w, op, i)
    return w


def sigma_word(w, i: int, n: int):
    """The reflection sigma_i on a word, by the case table on k = wt_i - wt_{i+1}."""
    wt = weight(w, n)
    k = wt[i - 1] - wt[i]
    fp = WORD_OPS["Fp"](w, i)
    if k > 0:
        if fp is not None:
            return _step(_power(w, "F", i, k - 1), "Fp", i)
        return _step(_power(w, "F", i, k + 1), "Ep", i)
    if k == 0:
        if fp is not None:
            return _step(fp, "E", i)
        f = WORD_OPS["F"](w, i)
        if f is not None:
            return _step(f, "Ep", i)
        return tuple(w)
    if fp is not None:
        return _power(fp, "E", i, -k + 1)
    return _power(_step(w, "Ep", i), "E", i, -k - 1)


def sigma(t: ShiftedTableau, i: int) -> ShiftedTableau:
    if not 1 <= i < t.n:
        raise ValueError(f"index {i} outside 1..{t.n - 1}")
    return t.with_word(sigma_word(t.word, i, t.n))


def eta_pq(t: ShiftedTableau, p: int, q: int) -> ShiftedTableau:
    """Apply eta to the letters in [p, q]' (relabeled to start at 1) and put them back."""
    if not 1 <= p < q <= t.n:
        raise ValueError(f"need 1 <= p < q <= {t.n}, got p={p}, q={q}")
    if p == 1 and q == t.n:
        return eta(t)
    m = q - p + 1
    piece = shift_values(restrict(t, p, q), -(p - 1), m)
    piece = shift_values(eta(piece), p - 1, t.n)
    return replace_range(t, piece, p, q)


def theta_index(p: int, q: int, i: int) -> int:
    """Action of the longest element on [p, q+1] on operator indices: i -> p+q-i on [p, q]."""
    return p + q - i if p <= i <= q else i


def theta(a: int, b: int, n: int) -> tuple[int, ...]:
    """The longest permutation generated by s_a..s_b, as images of 1..n."""
    return tuple(a + b + 1 - j if a <= j <= b + 1 else j for j in range(1, n + 1))


def compose(u, v):
    """(u v)(j) = u(v(j)) for permutations given as image tuples of 1..n."""
    return tuple(u[v[j] - 1] for j in range(len(v)))


def act_on_weight(perm, wt):
    out = [0] * len(wt)
    for j, x in enumerate(wt):
        out[perm[j] - 1] = x
    return tuple(out)


def intervals(n: int):
    return [(p, q) for p in range(1, n + 1) for q in range(p + 1, n + 1)]


def eta_permutation(g: CrystalGraph, p: int, q: int):
    return [g.find(eta_pq(t, p, q)) for t in g.vertices]


def sigma_permutation(g: CrystalGraph, i: int):
    return [g.index[sigma_word(t.word, i, g.n)] for t in g.vertices]


@dataclass
class CactusReport:
    checked: Counter = field(default_factory=Counter)
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def fail(self, **witness):
        self.violations.append(witness)

    def to_json(self) -> dict:
        return {"ok": self.ok, "checked": dict(self.checked), "violations": self.violations[:50]}


PAIRED = (("Ep", "Fp"), ("E", "F"), ("Fp", "Ep"), ("F", "E"))


def verify_cactus_relations(g: CrystalGraph) -> CactusReport:
    """Check the cactus relations, the intertwining of eta_{p,q} with the
    crystal operators, its weight action, and sigma_i = eta_{i,i+1}."""
    rep = CactusReport()
    n = g.n
    perms = {}
    for p, q in intervals(n):
        try:
            perms[(p, q)] = eta_permutation(g, p, q)
        except KeyError:
            rep.fail(relation="closure", p=p, q=q)
    if not rep.ok:
        return rep
    verts = range(len(g))
    for (p, q), s in perms.items():
        for v in verts:
            rep.checked["involution"] += 1
            if s[s[v]] != v:
                rep.fail(relation="involution", p=p, q=q, vertex=v)
        wperm = theta(p, q - 1, n)
        for v in verts:
            rep.checked["weight"] += 1
            if g.vertices[s[v]].weight != act_on_weight(wperm, g.vertices[v].weight):
                rep.fail(relation="weight", p=p, q=q, vertex=v)
        for i in range(p, q):
            j = theta_index(p, q - 1, i)
            for a, b in PAIRED:
                left, right = g.op(a, i), g.op(b, j)
                for v in verts:
                    rep.checked["intertwining"] += 1
                    x = left[s[v]]
                    y = right[v]
                    y = s[y] if y >= 0 else -1
                    if x != y:
                        rep.fail(relation="intertwining", p=p, q=q, i=i, op=a, vertex=v)
    for (p, q), (k, l) in combinations(perms, 2):
        for (a, b), (c, d) in (((p, q), (k, l)), ((k, l), (p, q))):
            s, t = perms[(a, b)], perms[(c, d)]
            if b < c:
                for v in verts:
                    rep.checked["disjoint"] += 1
                    if s[t[v]] != t[s[v]]:
                        rep.fail(relation="disjoint", pq=[a, b], kl=[c, d], vertex=v)
            elif a <= c and d <= b:
                u = perms[(a + b - d, a + b - c)]
                for v in verts:
                    rep.checked["nested"] += 1
                    if s[t[v]] != u[s[v]]:
                        rep.fail(relation="nested", pq=[a, b], kl=[c, d], vertex=v)
    for i in range(1, n):
        sp = sigma_permutation(g, i)
        for v in verts:
            rep.checked["sigma=eta"] += 1
            if sp[v] != perms[(i, i + 1)][v]:
                rep.fail(relation="sigma=eta", i=i, vertex=v)
    return rep


def cycle_orders(perm):
    """Per-vertex cycle length of a permutation array."""
    order = [0] * len(perm)
    for v in range(len(perm)):
        if order[v]:
            continue
        cyc = [v]
        w = perm[v]
        while w != v:
            cyc.append(w)
            w = perm[w]
        for x in cyc:
            order[x] = len(cyc)
    return order


def braid_order(nu, n: int = 3, graph: CrystalGraph | None = None):
    """(least m, histogram) with (sigma_1 sigma_2)^m fixing every vertex."""
    g = graph if graph is not None else build(ShiftedShape(strict_partition(nu)), n)
    s1 = sigma_permutation(g, 1)
    s2 = sigma_permutation(g, 2)
    c = [s1[s2[v]] for v in range(len(g))]
    orders = cycle_orders(c)
    hist = dict(sorted(Counter(orders).items()))
    least = math.lcm(*orders) if orders else 1
    return least, hist


BRAID_EXAMPLE = (("1", "1", "1", "1", "3'"), ("2", "2", "3'"), ("3",))


def braid_failure_chain():
    """The six tableaux of the braid counterexample on B((5,3,1), 3)."""
    t = ShiftedTableau.from_rows(BRAID_EXAMPLE, n=3)
    s1 = sigma(t, 1)
    s21 = sigma(s1, 2)
    s121 = sigma(s21, 1)
    s2 = sigma(t, 2)
    s12 = sigma(s2, 1)
    s212 = sigma(s12, 2)
    return {"T": t, "s1": s1, "s21": s21, "s121": s121, "s2": s2, "s12": s12, "s212": s212}


def verify_braid_failure() -> bool:
    chain = braid_failure_chain()
    return chain["s121"] != chain["s212"]


def reduced_words_longest(n: int):
    """All reduced words of the longest permutation of S_n."""
    target = tuple(range(n, 0, -1))
    out = []

    def rec(perm, word):
        if perm == target:
            out.append(tuple(word))
            return
        for i in range(1, n):
            if perm[i - 1] < perm[i]:
                nxt = list(perm)
                nxt[i - 1], nxt[i] = nxt[i], nxt[i - 1]
                rec(tuple(nxt), word + [i])

    rec(tuple(range(1, n + 1)), [])
    return out


def long_element_check(nu, n: int, words=None) -> bool:
    """sigma_{i_1} ... sigma_{i_k}(Y_nu) = evac(Y_nu) for reduced words of the
    longest permutation (rightmost factor applied first)."""
    y = yamanouchi(nu, n)
    target = evacuate(y)
    words = reduced_words_longest(n) if words is None else words
    for word in words:
        t = y
        for i in reversed(word):
            t = sigma(t, i)
        if t != target:
            return False
    return True
