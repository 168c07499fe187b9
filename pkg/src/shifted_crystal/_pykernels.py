"""Pure-Python word kernels.

This module is the reference implementation and the fallback used when the
compiled ``_kernels`` extension is unavailable.  Both expose the same
functions with the same semantics.

Letters are integer codes: ``v'`` is ``2v - 1`` and ``v`` is ``2v``.  The
two-letter operator kernels work on a subword over ``{1', 1, 2', 2}`` coded
as ``1, 2, 3, 4``.
"""


def canonical(word):
    """Unprime the leftmost occurrence of every value."""
    seen = set()
    out = list(word)
    for k, c in enumerate(out):
        v = (c + 1) >> 1
        if v not in seen:
            seen.add(v)
            out[k] = v << 1
    return tuple(out)


def standard_labels(word):
    """Labels 1..N of the standardization of ``word``."""
    def key(k):
        c = word[k]
        # primed copies right to left, then unprimed left to right
        return ((c + 1) >> 1, 0, -k) if c & 1 else ((c + 1) >> 1, 1, k)

    order = sorted(range(len(word)), key=key)
    labels = [0] * len(word)
    for lab, k in enumerate(order, 1):
        labels[k] = lab
    return tuple(labels)


def destandardize(labels, weight):
    """Canonical word of the given weight whose standardization is ``labels``.

    Returns None when no such word exists.
    """
    size = len(labels)
    if sum(weight) != size:
        return None
    pos = [0] * (size + 1)
    for k, lab in enumerate(labels):
        pos[lab] = k
    out = [0] * size
    start = 1
    for v, m in enumerate(weight, 1):
        if m == 0:
            continue
        block = pos[start:start + m]
        start += m
        t = block.index(min(block))
        for a in range(t - 1):
            if block[a] < block[a + 1]:
                return None
        for a in range(t, m - 1):
            if block[a] > block[a + 1]:
                return None
        for a in range(m):
            out[block[a]] = 2 * v - 1 if a < t else 2 * v
    return tuple(out)


def walk(sub):
    """Points of the lattice walk of a two-letter subword."""
    x = y = 0
    pts = [(0, 0)]
    for c in sub:
        if x == 0 or y == 0:
            if c <= 2:
                x += 1
            else:
                y += 1
        elif c == 1:
            x += 1
        elif c == 2:
            y -= 1
        elif c == 3:
            x -= 1
        else:
            y += 1
        pts.append((x, y))
    return pts


def walk_end(sub):
    return walk(sub)[-1]


def _toggles(sub):
    # first occurrence of each of the two values; toggling its prime gives
    # the other representatives
    f1 = f2 = -1
    for k, c in enumerate(sub):
        if c <= 2:
            if f1 < 0:
                f1 = k
        elif f2 < 0:
            f2 = k
        if f1 >= 0 and f2 >= 0:
            break
    return f1, f2


def representatives(sub):
    """The (at most four) representatives of a two-letter subword, no-toggle first."""
    f1, f2 = _toggles(sub)
    reps = [tuple(sub)]
    for f in (f1, f2):
        if f < 0:
            continue
        more = []
        for r in reps:
            s = list(r)
            s[f] = s[f] + 1 if s[f] & 1 else s[f] - 1
            more.append(tuple(s))
        reps.extend(more)
    return reps


def _matches_f(s, k, x, y):
    c = s[k]
    n = len(s)
    found = []
    if c == 2:
        if y == 0 or (y == 1 and x >= 1):
            j = k + 1
            while j < n and s[j] == 1:
                j += 1
            if j < n and s[j] == 3:
                found.append((j - k + 1, 1))
        if x == 0 or (x == 1 and y >= 1):
            j = k + 1
            while j < n and s[j] == 4:
                j += 1
            if j < n and s[j] == 1:
                found.append((j - k + 1, 2))
        if y == 0:
            found.append((1, 3))
        if x == 1 and y >= 1:
            found.append((1, 5))
    elif c == 1:
        if x == 0:
            found.append((1, 4))
    elif c == 3:
        if x == 1 and y >= 1:
            found.append((1, 5))
    return found


def _matches_e(s, k, x, y):
    c = s[k]
    n = len(s)
    found = []
    if c == 3:
        if x == 0 or (x == 1 and y >= 1):
            j = k + 1
            while j < n and s[j] == 4:
                j += 1
            if j < n and s[j] == 2:
                found.append((j - k + 1, 1))
        if y == 0 or (y == 1 and x >= 1):
            j = k + 1
            while j < n and s[j] == 1:
                j += 1
            if j < n and s[j] == 4:
                found.append((j - k + 1, 2))
        if x == 0:
            found.append((1, 3))
        if y == 1 and x >= 1:
            found.append((1, 5))
    elif c == 4:
        if y == 0:
            found.append((1, 4))
    elif c == 2:
        if y == 1 and x >= 1:
            found.append((1, 5))
    return found


def final_critical(sub, lower):
    """All tied final critical substrings as ``(rep, start, length, kind)``.

    ``kind`` is 1..5 from the F table (``lower``) or the E table.  The list
    is empty when no critical substring exists; ties are listed in the fixed
    representative order.
    """
    pts = walk(sub)
    reps = representatives(sub)
    match = _matches_f if lower else _matches_e
    for k in range(len(sub) - 1, -1, -1):
        x, y = pts[k]
        found = []
        for r in reps:
            for length, kind in match(r, k, x, y):
                found.append((r, k, length, kind))
        if found:
            best = max(f[2] for f in found)
            return [f for f in found if f[2] == best]
    return []


def _transform(rep, k, length, kind, lower):
    s = list(rep)
    j = k + length - 1
    if lower:
        if kind == 1:
            s[k], s[j] = 3, 4
        elif kind == 2:
            s[k], s[j] = 3, 2
        elif kind == 3:
            s[k] = 4
        else:
            s[k] = 3
    else:
        if kind == 1:
            s[k], s[j] = 2, 1
        elif kind == 2:
            s[k], s[j] = 2, 3
        elif kind == 3:
            s[k] = 1
        else:
            s[k] = 2
    return tuple(s)


def apply_critical(rep, k, length, kind, lower):
    """Transformed representative, or None for the undefined type."""
    if kind == 5:
        return None
    return _transform(rep, k, length, kind, lower)


def lower_unprimed(sub):
    """F on a two-letter subword; returns a representative or None."""
    found = final_critical(sub, True)
    if not found:
        return None
    return apply_critical(*found[0], True)


def raise_unprimed(sub):
    """E on a two-letter subword; returns a representative or None."""
    found = final_critical(sub, False)
    if not found:
        return None
    return apply_critical(*found[0], False)


def lower_primed(sub):
    """F' on a two-letter subword: last 1 right of last 2' becomes 2'."""
    for r in representatives(sub):
        last1 = last2p = -1
        for k, c in enumerate(r):
            if c == 2:
                last1 = k
            elif c == 3:
                last2p = k
        if last1 > last2p:
            s = list(r)
            s[last1] = 3
            return tuple(s)
    return None


def raise_primed(sub):
    """E' on a two-letter subword: last 2' right of last 1 becomes 1."""
    for r in representatives(sub):
        last1 = last2p = -1
        for k, c in enumerate(r):
            if c == 2:
                last1 = k
            elif c == 3:
                last2p = k
        if last2p > last1:
            s = list(r)
            s[last2p] = 2
            return tuple(s)
    return None
