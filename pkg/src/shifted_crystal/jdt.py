"""Shifted jeu de taquin, rectification, Knuth moves and dual equivalence.

Slides are performed on the standardization of a tableau and the result is
destandardized with the original weight.  Jeu de taquin commutes with
standardization, and on standard labels the slide rule has no ties: an inner
slide moves the smaller of the right and lower neighbours into the hole, an
outer slide the larger of the left and upper neighbours.  The prime changes
on the main diagonal come out of destandardization.
"""

from collections import deque
from dataclasses import dataclass, field

from .shapes import ShiftedShape
from .tableau import ShiftedTableau, diagonal_tableau
from .words import canonicalize, destandardize, letter, standard_labels, toggle_prime, value_of


@dataclass(frozen=True)
class SlideStep:
    kind: str  # "inner" or "outer"
    start: tuple[int, int]
    vacated: tuple[int, int]


@dataclass
class SlideRecord:
    steps: list[SlideStep] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "steps": [{"kind": s.kind, "start": list(s.start), "vacated": list(s.vacated)} for s in self.steps]
        }

    @classmethod
    def from_json(cls, doc) -> "SlideRecord":
        return cls([SlideStep(s["kind"], tuple(s["start"]), tuple(s["vacated"])) for s in doc["steps"]])


def _reading_cells(shape: ShiftedShape):
    return [c for i in range(shape.rows, 0, -1) for c in shape.row_cells(i)]


def standard_cells(t: ShiftedTableau) -> dict:
    """Map from cells to the standard labels of ``t``."""
    return dict(zip(_reading_cells(t.shape), standard_labels(t.word)))


def _from_standard(shape, cells, wt, n) -> ShiftedTableau:
    labels = tuple(cells[c] for c in _reading_cells(shape))
    word = destandardize(tuple(2 * x for x in labels), wt)
    if word is None:
        raise RuntimeError("slide result does not destandardize; this is a bug")
    return ShiftedTableau.from_word(shape, word, n)


def _remove_cell(parts, i):
    parts = list(parts) + [0] * max(0, i - len(parts))
    parts[i - 1] -= 1
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def _add_cell(parts, i):
    parts = list(parts) + [0] * max(0, i - len(parts))
    parts[i - 1] += 1
    return tuple(parts)


def std_inner_slide(shape: ShiftedShape, cells: dict, corner):
    """Inner slide on standard labels, in place.  Returns (new shape, vacated cell)."""
    if corner not in shape.inner_corners():
        raise ValueError(f"{corner} is not an inner corner of {shape}")
    i, j = corner
    while True:
        r = cells.get((i, j + 1))
        b = cells.get((i + 1, j))
        if r is None and b is None:
            break
        if b is None or (r is not None and r < b):
            cells[(i, j)] = cells.pop((i, j + 1))
            j += 1
        else:
            cells[(i, j)] = cells.pop((i + 1, j))
            i += 1
    new = ShiftedShape(_remove_cell(shape.outer, i), _remove_cell(shape.inner, corner[0]))
    return new, (i, j)


def std_outer_slide(shape: ShiftedShape, cells: dict, cell, ambient=None):
    """Outer slide on standard labels, in place.  Returns (new shape, filled inner cell)."""
    if cell not in shape.outer_corners(ambient):
        raise ValueError(f"{cell} is not an outer corner of {shape}")
    i, j = cell
    while True:
        l = cells.get((i, j - 1))
        a = cells.get((i - 1, j))
        if l is None and a is None:
            break
        if a is None or (l is not None and l > a):
            cells[(i, j)] = cells.pop((i, j - 1))
            j -= 1
        else:
            cells[(i, j)] = cells.pop((i - 1, j))
            i -= 1
    new = ShiftedShape(_add_cell(shape.outer, cell[0]), _add_cell(shape.inner, i))
    return new, (i, j)


def inner_slide(t: ShiftedTableau, corner):
    """One inner slide into ``corner``; returns (tableau, vacated cell)."""
    cells = standard_cells(t)
    shape, vacated = std_inner_slide(t.shape, cells, tuple(corner))
    return _from_standard(shape, cells, t.weight, t.n), vacated


def outer_slide(t: ShiftedTableau, cell, ambient=None):
    """One outer slide from ``cell``; returns (tableau, cell that joined the inner shape)."""
    cells = standard_cells(t)
    shape, filled = std_outer_slide(t.shape, cells, tuple(cell), ambient)
    return _from_standard(shape, cells, t.weight, t.n), filled


def pick_corner(shape: ShiftedShape, strategy: str = "last"):
    """``last``: the corner in the highest-index row.  ``first``: the lowest-index row."""
    corners = shape.inner_corners()
    return corners[-1] if strategy == "last" else corners[0]


def std_rectify(shape: ShiftedShape, cells: dict, strategy: str = "last"):
    record = SlideRecord()
    while shape.inner:
        corner = pick_corner(shape, strategy)
        shape, vacated = std_inner_slide(shape, cells, corner)
        record.steps.append(SlideStep("inner", corner, vacated))
    return shape, record


def rectify(t: ShiftedTableau, strategy: str = "last"):
    """Rectify by inner slides; returns (straight tableau, SlideRecord)."""
    if t.shape.is_straight:
        return t, SlideRecord()
    cells = standard_cells(t)
    shape, record = std_rectify(t.shape, cells, strategy)
    return _from_standard(shape, cells, t.weight, t.n), record


def rect(t: ShiftedTableau) -> ShiftedTableau:
    return rectify(t)[0]


def slide_chain(t: ShiftedTableau, strategy: str = "last"):
    """Every intermediate tableau of the rectification, starting with ``t``."""
    out = [t]
    while not t.shape.is_straight:
        t, _ = inner_slide(t, pick_corner(t.shape, strategy))
        out.append(t)
    return out


def rect_word(w, n: int | None = None) -> ShiftedTableau:
    return rect(diagonal_tableau(w, n))


def knuth_equivalent(w1, w2) -> bool:
    a, b = rect_word(w1), rect_word(w2)
    return a.shape == b.shape and a.rows == b.rows


def apply_knuth_move(w, position: int, move: str):
    """Apply K1, K2, S1 or S2 at 0-based ``position``; None if not applicable.

    K1: bac <-> bca and K2: acb <-> cab, with a < b < c in standardization
    order, on the letters at ``position .. position + 2``.  S1: swap the
    first two letters.  S2: toggle the prime of the second letter when the
    first two letters have equal value.  S1 and S2 only apply at position 0.
    """
    w = list(canonicalize(w))
    lab = standard_labels(w)
    p = position
    if move in ("K1", "K2"):
        if p < 0 or p + 2 >= len(w):
            return None
        x, y, z = lab[p], lab[p + 1], lab[p + 2]
        if move == "K1" and min(y, z) < x < max(y, z):
            w[p + 1], w[p + 2] = w[p + 2], w[p + 1]
        elif move == "K2" and min(x, y) < z < max(x, y):
            w[p], w[p + 1] = w[p + 1], w[p]
        else:
            return None
    elif move == "S1":
        if p != 0 or len(w) < 2:
            return None
        w[0], w[1] = w[1], w[0]
    elif move == "S2":
        if p != 0 or len(w) < 2 or value_of(w[0]) != value_of(w[1]):
            return None
        w[1] = toggle_prime(w[1])
    else:
        raise ValueError(f"unknown move {move!r}")
    return canonicalize(w)


DUAL_EQUIVALENCE_MAX_SIZE = 8


def dual_equivalent_oracle(t1: ShiftedTableau, t2: ShiftedTableau) -> bool:
    """Breadth-first search over slide sequences applied to both tableaux.

    True iff no sequence of inner or outer slides (inside the staircase one
    column wider than the input) separates the shapes.  Exponential; guarded
    to tableaux of at most DUAL_EQUIVALENCE_MAX_SIZE cells.
    """
    if t1.shape != t2.shape:
        return False
    if t1.size > DUAL_EQUIVALENCE_MAX_SIZE:
        raise ValueError(f"oracle limited to {DUAL_EQUIVALENCE_MAX_SIZE} cells")
    ambient = (t1.shape.outer[0] if t1.shape.outer else 0) + 1

    def key(shape, a, b):
        return shape, tuple(sorted(a.items())), tuple(sorted(b.items()))

    start = (t1.shape, standard_cells(t1), standard_cells(t2))
    seen = {key(*start)}
    queue = deque([start])
    while queue:
        shape, a, b = queue.popleft()
        moves = [("inner", c) for c in shape.inner_corners()]
        moves += [("outer", c) for c in shape.outer_corners(ambient)]
        for kind, c in moves:
            a2, b2 = dict(a), dict(b)
            if kind == "inner":
                s1, _ = std_inner_slide(shape, a2, c)
                s2, _ = std_inner_slide(shape, b2, c)
            else:
                s1, _ = std_outer_slide(shape, a2, c, ambient)
                s2, _ = std_outer_slide(shape, b2, c, ambient)
            if s1 != s2:
                return False
            k = key(s1, a2, b2)
            if k not in seen:
                seen.add(k)
                queue.append((s1, a2, b2))
    return True


def standard_tableau(t: ShiftedTableau) -> ShiftedTableau:
    """The standardization of ``t`` as a tableau over [size]."""
    word = tuple(letter(x) for x in standard_labels(t.word))
    return ShiftedTableau.from_word(t.shape, word, max(t.size, 1))
