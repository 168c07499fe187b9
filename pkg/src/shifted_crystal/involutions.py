"""Complementation, evacuation, reversal and the involution eta."""

from .jdt import _from_standard, rect, standard_cells, std_outer_slide, std_rectify
from .shapes import ShiftedShape, complement_shape, strict_partition
from .tableau import ShiftedTableau, yamanouchi
from .words import canonicalize, is_primed, letter, value_of


def complement_letter(code: int, n: int) -> int:
    """k -> (n-k+1)' and k' -> n-k+1."""
    return letter(n - value_of(code) + 1, not is_primed(code))


def complement_word(w, n: int) -> tuple[int, ...]:
    """Complement every letter (order kept) and canonicalize."""
    for c in w:
        if value_of(c) > n:
            raise ValueError(f"letter value {value_of(c)} exceeds {n}")
    return canonicalize(complement_letter(c, n) for c in w)


def complement_tableau(t: ShiftedTableau, n: int | None = None) -> ShiftedTableau:
    """Flip across the anti-diagonal of the ambient staircase and complement entries."""
    n = t.n if n is None else n
    m = t.shape.outer[0] if t.shape.outer else 0
    shape = ShiftedShape(complement_shape(t.shape.inner, m), complement_shape(t.shape.outer, m))
    moved = {(m - j + 1, m - i + 1): complement_letter(c, n) for (i, j), c in t.cells.items()}
    word = [moved[c] for i in range(shape.rows, 0, -1) for c in shape.row_cells(i)]
    return ShiftedTableau.from_word(shape, canonicalize(word), n)


def evacuate(t: ShiftedTableau) -> ShiftedTableau:
    if not t.shape.is_straight:
        raise ValueError("evacuation needs a straight shape")
    if t.size == 0:
        return t
    return rect(complement_tableau(t))


def evac_yamanouchi_direct(nu, n: int) -> ShiftedTableau:
    """Evacuation of the Yamanouchi tableau by its closed-form filling.

    Row n is n^{nu_n}; row i < n is i^{nu_n} followed, for k = i+1..n, by
    k' k^{nu_{n+i-k} - nu_{n+i-k+1} - 1}.
    """
    nu = strict_partition(nu)
    if len(nu) != n:
        raise ValueError(f"need a partition with exactly {n} parts")
    rows = []
    for i in range(1, n + 1):
        row = [letter(i)] * nu[n - 1]
        for k in range(i + 1, n + 1):
            row.append(letter(k, True))
            row += [letter(k)] * (nu[n + i - k - 1] - nu[n + i - k] - 1)
        rows.append(tuple(row))
    return ShiftedTableau(ShiftedShape(nu), tuple(rows), n)


def reversal(t: ShiftedTableau) -> ShiftedTableau:
    """Rectify while recording, evacuate, then undo the slides with outer slides."""
    if t.shape.is_straight:
        return evacuate(t)
    cells = standard_cells(t)
    shape, record = std_rectify(t.shape, cells)
    straight = _from_standard(shape, cells, t.weight, t.n)
    ev = evacuate(straight)
    cells = standard_cells(ev)
    for step in reversed(record.steps):
        shape, filled = std_outer_slide(shape, cells, step.vacated)
        if filled != step.start:
            raise RuntimeError("outer slide did not retrace the rectification")
    return _from_standard(shape, cells, t.weight[::-1], t.n)


def eta(t: ShiftedTableau) -> ShiftedTableau:
    """Evacuation on straight shapes, reversal on skew shapes."""
    return evacuate(t) if t.shape.is_straight else reversal(t)


def lowest_weight_straight(nu, n: int) -> ShiftedTableau:
    return evacuate(yamanouchi(nu, n))
