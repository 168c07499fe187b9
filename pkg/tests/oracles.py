"""Brute-force reference implementations used only by the tests.

They deliberately avoid the package's fast paths: enumeration tries every
filling, standardization sorts by an explicit key, and destandardization
searches all words of the target weight.
"""

from itertools import permutations, product

from shifted_crystal.shapes import ShiftedShape


def code(v, primed=False):
    return 2 * v - 1 if primed else 2 * v


def val(c):
    return (c + 1) // 2


def canon(w):
    seen = set()
    out = []
    for c in w:
        if val(c) not in seen:
            seen.add(val(c))
            out.append(2 * val(c))
        else:
            out.append(c)
    return tuple(out)


def std_by_sort(w):
    """Sort positions by (value, primed first, primed right-to-left, unprimed left-to-right)."""
    keyed = []
    for k, c in enumerate(w):
        if c % 2:
            keyed.append(((val(c), 0, len(w) - k), k))
        else:
            keyed.append(((val(c), 1, k), k))
    keyed.sort()
    labels = [0] * len(w)
    for lab, (_, k) in enumerate(keyed, 1):
        labels[k] = lab
    return tuple(labels)


def words_of_weight(wt):
    """All canonical words with the given weight."""
    letters = [v for v, m in enumerate(wt, 1) for _ in range(m)]
    seen = set()
    for perm in set(permutations(letters)):
        for primes in product((False, True), repeat=len(perm)):
            w = canon(tuple(code(v, p) for v, p in zip(perm, primes)))
            if w not in seen:
                seen.add(w)
                yield w


def destd_brute(labels, wt):
    hits = [w for w in words_of_weight(wt) if std_by_sort(w) == tuple(labels)]
    assert len(hits) <= 1
    return hits[0] if hits else None


def semistandard(cells):
    for (i, j), c in cells.items():
        r = cells.get((i, j + 1))
        if r is not None and not (r > c or (r == c and c % 2 == 0)):
            return False
        b = cells.get((i + 1, j))
        if b is not None and not (b > c or (b == c and c % 2 == 1)):
            return False
    return True


def enumerate_brute(outer, inner, n):
    """Every canonical semistandard filling, as a set of reading words."""
    shape = ShiftedShape(outer, inner)
    cells = [c for i in range(shape.rows, 0, -1) for c in shape.row_cells(i)]
    out = set()
    for w in product(range(1, 2 * n + 1), repeat=len(cells)):
        if canon(w) != w:
            continue
        if semistandard(dict(zip(cells, w))):
            out.add(w)
    return out


def walk_brute(sub):
    """Walk of a {1',1,2',2} subword given as codes 1..4, from the step table."""
    origin = {1: (1, 0), 2: (1, 0), 3: (0, 1), 4: (0, 1)}
    inside = {1: (1, 0), 2: (0, -1), 3: (-1, 0), 4: (0, 1)}
    x = y = 0
    pts = [(0, 0)]
    for c in sub:
        dx, dy = (origin if x * y == 0 else inside)[c]
        x, y = x + dx, y + dy
        pts.append((x, y))
    return pts


def fillings_of_weight(outer, inner, wt):
    """Canonical semistandard fillings of outer/inner with weight wt, by backtracking."""
    shape = ShiftedShape(outer, inner)
    cells = [c for i in range(shape.rows, 0, -1) for c in shape.row_cells(i)]
    n = len(wt)
    left = list(wt)
    placed = {}
    seen = set()
    out = []

    def rec(k, word):
        if k == len(cells):
            if not any(left):
                out.append(tuple(word))
            return
        i, j = cells[k]
        for c in range(1, 2 * n + 1):
            v = val(c)
            if not left[v - 1]:
                continue
            if v not in seen and c % 2:
                continue
            placed[(i, j)] = c
            if semistandard({x: y for x, y in placed.items() if x[0] in (i, i + 1)}):
                left[v - 1] -= 1
                new = v not in seen
                seen.add(v)
                word.append(c)
                rec(k + 1, word)
                word.pop()
                if new:
                    seen.discard(v)
                left[v - 1] += 1
            del placed[(i, j)]

    rec(0, [])
    return out


def ballot_brute(w, n):
    """Every {i,i+1} subword walk ends on the x axis."""
    for i in range(1, n):
        sub = [c - 2 * (i - 1) for c in w if val(c) in (i, i + 1)]
        if walk_brute(sub)[-1][1] != 0:
            return False
    return True


def lrs_brute(outer, inner, nu):
    n = max(len(nu), 1)
    return sum(1 for w in fillings_of_weight(outer, inner, nu) if ballot_brute(w, n))
