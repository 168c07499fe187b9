"""Strict partitions and shifted (skew) shapes.

Cells are 1-based ``(i, j)``: row ``i`` of a shifted shape starts in column
``i``.  The main diagonal is the set of cells with ``i == j``.
"""

from dataclasses import dataclass

StrictPartition = tuple[int, ...]


def strict_partition(parts) -> StrictPartition:
    """Validate and normalize a strict partition, dropping trailing zeros."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    for a, b in zip(p, p[1:]):
        if a <= b:
            raise ValueError(f"{p} is not a strict partition")
    if p and p[-1] < 0:
        raise ValueError(f"{p} has a negative part")
    return p


def parse_partition(text: str) -> StrictPartition:
    text = text.strip()
    if not text or text in ("0", "()", "-"):
        return ()
    return strict_partition(int(x) for x in text.replace(" ", "").strip("()").split(",") if x)


def staircase(m: int) -> StrictPartition:
    return tuple(range(m, 0, -1))


def complement_shape(lam, ambient_first_part: int) -> StrictPartition:
    """Parts of the staircase of size ``ambient_first_part`` not in ``lam``."""
    lam = strict_partition(lam)
    if lam and lam[0] > ambient_first_part:
        raise ValueError(f"part {lam[0]} exceeds ambient {ambient_first_part}")
    parts = set(lam)
    return tuple(k for k in range(ambient_first_part, 0, -1) if k not in parts)


def strict_partitions(size: int, max_part: int | None = None):
    """Strict partitions of ``size`` with parts at most ``max_part``, in lex-decreasing order."""
    if max_part is None:
        max_part = size
    if size == 0:
        yield ()
        return
    for first in range(min(size, max_part), 0, -1):
        for rest in strict_partitions(size - first, first - 1):
            yield (first,) + rest


def partitions_inside(outer):
    """All strict partitions contained in ``outer`` (cellwise)."""
    outer = strict_partition(outer)

    def rec(r, bound):
        if r == len(outer):
            yield ()
            return
        yield ()
        for part in range(min(outer[r], bound), 0, -1):
            for rest in rec(r + 1, part - 1):
                yield (part,) + rest

    yield from rec(0, outer[0] if outer else 0)


@dataclass(frozen=True)
class ShiftedShape:
    outer: StrictPartition
    inner: StrictPartition = ()

    def __post_init__(self):
        outer = strict_partition(self.outer)
        inner = strict_partition(self.inner)
        if len(inner) > len(outer) or any(m > l for m, l in zip(inner, outer)):
            raise ValueError(f"inner shape {inner} not contained in {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    def mu(self, i: int) -> int:
        return self.inner[i - 1] if i <= len(self.inner) else 0

    def lam(self, i: int) -> int:
        return self.outer[i - 1] if i <= len(self.outer) else 0

    @property
    def rows(self) -> int:
        return len(self.outer)

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    @property
    def is_straight(self) -> bool:
        return not self.inner

    def row_length(self, i: int) -> int:
        return self.lam(i) - self.mu(i)

    def row_cells(self, i: int):
        return [(i, j) for j in range(i + self.mu(i), i + self.lam(i))]

    def cells(self):
        """Cells row by row, top to bottom, left to right."""
        return [c for i in range(1, self.rows + 1) for c in self.row_cells(i)]

    def __contains__(self, cell) -> bool:
        i, j = cell
        return 1 <= i <= self.rows and i + self.mu(i) <= j < i + self.lam(i)

    def inner_corners(self):
        """Cells of the inner shape whose removal leaves a strict partition."""
        out = []
        for i in range(1, len(self.inner) + 1):
            m, below = self.mu(i), self.mu(i + 1)
            if below == 0 or m - 1 > below:
                out.append((i, i + m - 1))
        return out

    def outer_corners(self, ambient: int | None = None):
        """Cells outside the outer shape whose addition keeps it strict.

        With ``ambient`` set, only cells inside that staircase are listed.
        """
        lam = self.outer
        out = []
        for i in range(1, len(lam) + 2):
            cur = self.lam(i)
            if i > 1 and self.lam(i - 1) <= cur + 1:
                continue
            if i == len(lam) + 1 and i > 1 and self.lam(i - 1) < 2:
                continue
            j = i + cur
            if ambient is not None and j > ambient:
                continue
            out.append((i, j))
        return out

    def __str__(self):
        o = ",".join(map(str, self.outer))
        if self.inner:
            return f"({o})/({','.join(map(str, self.inner))})"
        return f"({o})"
