"""Shifted semistandard tableaux."""

import json
from dataclasses import dataclass
from functools import cached_property

from .shapes import ShiftedShape, strict_partition
from .words import (
    Entry,
    canonicalize,
    format_letter,
    is_primed,
    letter,
    max_value,
    parse_letter,
    value_of,
    weight,
)


@dataclass(frozen=True)
class ShiftedTableau:
    """A filling of a shifted shape, stored as its rows of entries.

    ``rows[i - 1]`` holds the entries of row ``i`` from left to right,
    without the holes of the inner shape.  Entries are letter codes.
    Tableaux are kept in canonical form.
    """

    shape: ShiftedShape
    rows: tuple[tuple[int, ...], ...]
    n: int

    @classmethod
    def from_word(cls, shape: ShiftedShape, word, n: int) -> "ShiftedTableau":
        """Fill ``shape`` so that its reading word is ``word``."""
        word = tuple(word)
        rows = []
        end = len(word)
        for i in range(1, shape.rows + 1):
            k = shape.row_length(i)
            rows.append(word[end - k:end])
            end -= k
        if end != 0:
            raise ValueError(f"word of length {len(word)} does not fit shape {shape}")
        return cls(shape, tuple(rows), n)

    @classmethod
    def from_rows(cls, rows, inner=(), n: int | None = None) -> "ShiftedTableau":
        """Build from rows of entries (ints are unprimed values, strings are parsed).

        The rows list only the filled cells.  The result is canonicalized and
        checked for semistandardness.
        """
        coded = tuple(tuple(_coerce(x) for x in row) for row in rows)
        inner = strict_partition(inner)
        outer = strict_partition([len(r) + (inner[k] if k < len(inner) else 0) for k, r in enumerate(coded)])
        shape = ShiftedShape(outer, inner)
        if n is None:
            n = max((value_of(c) for r in coded for c in r), default=1)
        word = tuple(c for r in reversed(coded) for c in r)
        t = cls.from_word(shape, canonicalize(word), n)
        if not t.is_semistandard():
            raise ValueError("filling is not semistandard")
        return t

    @cached_property
    def word(self) -> tuple[int, ...]:
        return tuple(c for r in reversed(self.rows) for c in r)

    @cached_property
    def weight(self) -> tuple[int, ...]:
        return weight(self.word, self.n)

    @property
    def size(self) -> int:
        return self.shape.size

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - i - self.shape.mu(i)]

    @property
    def cells(self) -> dict:
        out = {}
        for i, row in enumerate(self.rows, 1):
            start = i + self.shape.mu(i)
            for k, c in enumerate(row):
                out[(i, start + k)] = Entry.from_code(c)
        return out

    def is_semistandard(self) -> bool:
        return is_semistandard(self.shape, self.cells) and canonicalize(self.word) == self.word

    def with_word(self, word) -> "ShiftedTableau":
        return ShiftedTableau.from_word(self.shape, word, self.n)

    def with_n(self, n: int) -> "ShiftedTableau":
        return ShiftedTableau(self.shape, self.rows, n)

    def to_text(self) -> str:
        lines = []
        for i, row in enumerate(self.rows, 1):
            toks = ["."] * self.shape.mu(i) + [format_letter(c) for c in row]
            lines.append(" ".join(toks))
        return "\n".join(lines)

    def to_json(self) -> dict:
        rows = []
        for i, row in enumerate(self.rows, 1):
            cells = [None] * self.shape.mu(i)
            cells += [{"v": value_of(c), "p": is_primed(c)} for c in row]
            rows.append(cells)
        return {"lambda": list(self.shape.outer), "mu": list(self.shape.inner), "n": self.n, "rows": rows}

    def __str__(self):
        return self.to_text()


def _coerce(x) -> int:
    if isinstance(x, Entry):
        return int(x)
    if isinstance(x, int):
        return letter(x)
    return parse_letter(str(x))


def is_semistandard(shape: ShiftedShape, cells) -> bool:
    """Rows and columns weakly increase; no repeated primed letter in a row
    and no repeated unprimed letter in a column."""
    if set(cells) != set(shape.cells()):
        return False
    for (i, j), c in cells.items():
        right = cells.get((i, j + 1))
        if right is not None and (right < c or (right == c and is_primed(c))):
            return False
        below = cells.get((i + 1, j))
        if below is not None and (below < c or (below == c and not is_primed(c))):
            return False
    return True


def reading_word(t: ShiftedTableau) -> tuple[int, ...]:
    return t.word


def column_word(t: ShiftedTableau) -> tuple[int, ...]:
    """Columns left to right, each read bottom to top, canonicalized."""
    cells = t.cells
    cols = sorted({j for _, j in cells})
    out = []
    for j in cols:
        for i in sorted((i for i, jj in cells if jj == j), reverse=True):
            out.append(int(cells[(i, j)]))
    return canonicalize(out)


def diagonal_tableau(w, n: int | None = None) -> ShiftedTableau:
    """The anti-diagonal skew tableau whose reading word is ``w``."""
    w = canonicalize(w)
    m = len(w)
    outer = tuple(2 * k - 1 for k in range(m, 0, -1))
    inner = tuple(2 * k - 2 for k in range(m, 0, -1))
    if n is None:
        n = max(max_value(w), 1)
    return ShiftedTableau.from_word(ShiftedShape(outer, inner), w, n)


def yamanouchi(nu, n: int | None = None) -> ShiftedTableau:
    """Row i filled with unprimed i."""
    nu = strict_partition(nu)
    if n is None:
        n = max(len(nu), 1)
    rows = tuple(tuple([letter(i)] * part) for i, part in enumerate(nu, 1))
    return ShiftedTableau(ShiftedShape(nu), rows, n)


def enumerate_tableaux(shape: ShiftedShape, n: int, target_weight=None):
    """All canonical semistandard tableaux of ``shape`` over [n]'.

    Ordered lexicographically by reading word.  With ``target_weight`` only
    tableaux of that weight are produced.
    """
    cells = [c for i in range(shape.rows, 0, -1) for c in shape.row_cells(i)]
    pos = {c: k for k, c in enumerate(cells)}
    left = [pos.get((i, j - 1), -1) for i, j in cells]
    below = [pos.get((i + 1, j), -1) for i, j in cells]
    total = len(cells)
    counts = [0] * (n + 1)
    cap = None
    if target_weight is not None:
        cap = [0] + list(target_weight) + [0] * max(0, n - len(target_weight))
        if len(target_weight) > n and any(target_weight[n:]):
            return []
        if sum(cap) != total:
            return []
    word = [0] * total
    out = []

    def rec(k):
        if k == total:
            out.append(ShiftedTableau.from_word(shape, tuple(word), n))
            return
        lo = 1
        l = left[k]
        if l >= 0:
            lo = word[l] + (word[l] & 1)  # equal allowed only if unprimed
        hi = 2 * n
        b = below[k]
        if b >= 0:
            hi = min(hi, word[b] - (1 - (word[b] & 1)))  # equal allowed only if primed
        for c in range(lo, hi + 1):
            v = (c + 1) >> 1
            if counts[v] == 0 and c & 1:
                continue
            if cap is not None and counts[v] >= cap[v]:
                continue
            counts[v] += 1
            word[k] = c
            rec(k + 1)
            counts[v] -= 1

    rec(0)
    return out


def restrict(t: ShiftedTableau, p: int, q: int) -> ShiftedTableau:
    """The letters of ``t`` in [p, q]', on the skew shape they occupy.

    The inner shape is the region of ``t`` (including its own holes) holding
    letters smaller than ``p``.  Values are not relabeled.
    """
    inner, outer, rows = [], [], []
    for i, row in enumerate(t.rows, 1):
        mu = t.shape.mu(i)
        lo = sum(1 for c in row if value_of(c) < p)
        hi = sum(1 for c in row if value_of(c) <= q)
        inner.append(mu + lo)
        outer.append(mu + hi)
        rows.append(row[lo:hi])
    shape = ShiftedShape(strict_partition(outer), strict_partition(inner))
    rows = tuple(rows[: shape.rows])
    return ShiftedTableau(shape, rows, t.n)


def shift_values(t: ShiftedTableau, delta: int, n: int) -> ShiftedTableau:
    """Add ``delta`` to every value, keeping primes."""
    rows = tuple(tuple(c + 2 * delta for c in row) for row in t.rows)
    return ShiftedTableau(t.shape, rows, n)


def replace_range(t: ShiftedTableau, piece: ShiftedTableau, p: int, q: int) -> ShiftedTableau:
    """Put ``piece`` back in place of the letters of ``t`` in [p, q]'."""
    rows = []
    for i, row in enumerate(t.rows, 1):
        lo = sum(1 for c in row if value_of(c) < p)
        hi = sum(1 for c in row if value_of(c) <= q)
        mid = piece.rows[i - 1] if i <= len(piece.rows) else ()
        if len(mid) != hi - lo:
            raise ValueError("piece does not fit the restricted region")
        rows.append(row[:lo] + tuple(mid) + row[hi:])
    return ShiftedTableau(t.shape, tuple(rows), t.n)


def is_detached(t: ShiftedTableau) -> bool:
    return t.shape.rows <= 1


def detach_reduce(t: ShiftedTableau) -> ShiftedTableau:
    """Drop the main diagonal and shift left, unless already detached."""
    if not t.shape.is_straight:
        raise ValueError("detach_reduce needs a straight shape")
    if is_detached(t):
        return t
    rows = [row[1:] for row in t.rows if len(row) > 1]
    shape = ShiftedShape(tuple(len(r) for r in rows))
    word = canonicalize(c for r in reversed(rows) for c in r)
    return ShiftedTableau.from_word(shape, word, t.n)


def parse_tableau(text: str, n: int | None = None) -> ShiftedTableau:
    """Parse the row text format; ``.`` marks a hole of the inner shape."""
    rows, inner = [], []
    for ln, line in enumerate(l for l in text.strip().splitlines() if l.strip()):
        toks = line.split()
        holes = 0
        while holes < len(toks) and toks[holes] == ".":
            holes += 1
        row = []
        for k, tok in enumerate(toks[holes:]):
            try:
                row.append(Entry.from_code(parse_letter(tok)))
            except ValueError:
                raise ValueError(f"bad entry {tok!r} at row {ln + 1}, column {holes + k + 1}") from None
        rows.append(row)
        inner.append(holes)
    if n is None:
        n = max((value_of(c) for r in rows for c in r), default=1)
    return ShiftedTableau.from_rows(rows, inner, n)


def tableau_from_json(doc) -> ShiftedTableau:
    if isinstance(doc, str):
        doc = json.loads(doc)
    rows, inner = [], []
    for row in doc["rows"]:
        holes = 0
        while holes < len(row) and row[holes] is None:
            holes += 1
        rows.append([Entry(c["v"], c["p"]) for c in row[holes:]])
        inner.append(holes)
    t = ShiftedTableau.from_rows(rows, inner, doc.get("n"))
    if t.shape.outer != strict_partition(doc["lambda"]) or t.shape.inner != strict_partition(doc.get("mu", [])):
        raise ValueError("rows do not match lambda/mu")
    return t
