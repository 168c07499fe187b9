"""Crystal operators on words and tableaux.

Every operator with index i acts on the subword of letters in {i, i+1}'.
The subword is recoded over {1', 1, 2', 2}, transformed by a kernel, spliced
back, and the full word is canonicalized.
"""

from dataclasses import dataclass

from . import kernels
from .tableau import ShiftedTableau
from .words import canonicalize, value_of

OPS = ("E", "F", "Ep", "Fp")

KIND_NAMES = {1: "1", 2: "2", 3: "3", 4: "4", 5: "5"}


def _split(w, i):
    idx = [k for k, c in enumerate(w) if value_of(c) == i or value_of(c) == i + 1]
    shift = 2 * (i - 1)
    return idx, tuple(w[k] - shift for k in idx)


def _splice(w, i, idx, sub):
    shift = 2 * (i - 1)
    out = list(w)
    for k, c in zip(idx, sub):
        out[k] = c + shift
    return canonicalize(out)


def _apply(kernel, w, i):
    idx, sub = _split(w, i)
    res = kernel(sub)
    if res is None:
        return None
    return _splice(w, i, idx, res)


def lower_unprimed(w, i: int):
    """F_i(w), or None."""
    return _apply(kernels.lower_unprimed, w, i)


def raise_unprimed(w, i: int):
    """E_i(w), or None."""
    return _apply(kernels.raise_unprimed, w, i)


def lower_primed(w, i: int):
    """F'_i(w), or None."""
    return _apply(kernels.lower_primed, w, i)


def raise_primed(w, i: int):
    """E'_i(w), or None."""
    return _apply(kernels.raise_primed, w, i)


WORD_OPS = {"F": lower_unprimed, "E": raise_unprimed, "Fp": lower_primed, "Ep": raise_primed}
INVERSE = {"F": "E", "E": "F", "Fp": "Ep", "Ep": "Fp"}


@dataclass(frozen=True)
class LatticeWalk:
    points: tuple[tuple[int, int], ...]

    @property
    def endpoint(self) -> tuple[int, int]:
        return self.points[-1]


def lattice_walk(w, i: int) -> LatticeWalk:
    _, sub = _split(w, i)
    return LatticeWalk(tuple(kernels.walk(sub)))


def walk_endpoint(w, i: int) -> tuple[int, int]:
    _, sub = _split(w, i)
    return kernels.walk_end(sub)


@dataclass(frozen=True)
class CriticalSubstring:
    kind: str  # "1F".."5F" or "1E".."5E"
    start: int  # index in the subword
    length: int
    positions: tuple[int, ...]  # indices of the substring in the full word
    representative: tuple[int, ...]  # the subword representative it was found in


def find_final_critical(w, i: int, direction: str, all_ties: bool = False):
    """The final critical substring for F_i (``direction="F"``) or E_i.

    Returns None if there is none.  With ``all_ties`` a list of every tied
    choice is returned instead.
    """
    lower = direction == "F"
    idx, sub = _split(w, i)
    found = kernels.final_critical(sub, lower)
    out = [
        CriticalSubstring(f"{kind}{direction}", k, length, tuple(idx[k:k + length]), rep)
        for rep, k, length, kind in found
    ]
    if all_ties:
        return out
    return out[0] if out else None


def tied_results(w, i: int, direction: str):
    """Canonical results of every tied final critical substring."""
    lower = direction == "F"
    idx, sub = _split(w, i)
    out = set()
    for rep, k, length, kind in kernels.final_critical(sub, lower):
        res = kernels._pykernels.apply_critical(rep, k, length, kind, lower)
        out.add(None if res is None else _splice(w, i, idx, res))
    return out


def is_ballot(w, n: int) -> bool:
    """Every i-walk ends on the x axis."""
    return all(walk_endpoint(w, i)[1] == 0 for i in range(1, n))


def is_antiballot(w, n: int) -> bool:
    """F_i and F'_i are undefined for all i."""
    return all(lower_unprimed(w, i) is None and lower_primed(w, i) is None for i in range(1, n))


def is_highest_weight(w, n: int) -> bool:
    return all(raise_unprimed(w, i) is None and raise_primed(w, i) is None for i in range(1, n))


def apply_to_tableau(t: ShiftedTableau, op: str, i: int):
    """Apply ``op`` in {E, F, Ep, Fp} with index i; None when undefined."""
    if not 1 <= i < t.n:
        raise ValueError(f"index {i} outside 1..{t.n - 1}")
    w = WORD_OPS[op](t.word, i)
    return None if w is None else ShiftedTableau.from_word(t.shape, w, t.n)


def iterate(t, op: str, i: int, times: int):
    """Apply ``op`` ``times`` times; None as soon as it is undefined."""
    for _ in range(times):
        if t is None:
            return None
        t = apply_to_tableau(t, op, i)
    return t


def string_length(w, op: str, i: int) -> int:
    f = WORD_OPS[op]
    k = 0
    w = f(w, i)
    while w is not None:
        k += 1
        w = f(w, i)
    return k


@dataclass(frozen=True)
class LengthFunctions:
    eps_hat: int
    eps_prime: int
    phi_hat: int
    phi_prime: int
    eps_total: int
    phi_total: int


def length_functions(t, i: int) -> LengthFunctions:
    """Partial lengths by iteration, totals from the endpoint of the i-walk."""
    w = t.word if isinstance(t, ShiftedTableau) else tuple(t)
    x, y = walk_endpoint(w, i)
    return LengthFunctions(
        string_length(w, "E", i),
        string_length(w, "Ep", i),
        string_length(w, "F", i),
        string_length(w, "Fp", i),
        y,
        x,
    )
