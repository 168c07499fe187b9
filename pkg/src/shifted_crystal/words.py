"""Primed letters, words, canonical form, weights and standardization.

A letter of the primed alphabet is stored as an int code: ``v'`` is ``2v - 1``
and ``v`` is ``2v``.  Integer order is then the alphabet order
``1' < 1 < 2' < 2 < ...``.  A word is a plain tuple of codes.
"""

from itertools import product

from . import kernels

Word = tuple[int, ...]


def letter(value: int, primed: bool = False) -> int:
    if value < 1:
        raise ValueError(f"letter value must be positive, got {value}")
    return 2 * value - 1 if primed else 2 * value


def value_of(code: int) -> int:
    return (code + 1) >> 1


def is_primed(code: int) -> bool:
    return bool(code & 1)


def toggle_prime(code: int) -> int:
    return code + 1 if code & 1 else code - 1


class Entry(int):
    """A letter of the primed alphabet, ordered as its integer code."""

    __slots__ = ()

    def __new__(cls, value: int, primed: bool = False):
        return super().__new__(cls, letter(value, primed))

    @classmethod
    def from_code(cls, code: int) -> "Entry":
        return cls(value_of(code), is_primed(code))

    @property
    def value(self) -> int:
        return value_of(self)

    @property
    def primed(self) -> bool:
        return is_primed(self)

    def __repr__(self):
        return f"Entry({self.value}, primed={self.primed})"

    def __str__(self):
        return format_letter(self)


def parse_letter(token: str) -> int:
    """Parse ``3``, ``3'`` or ``3p``."""
    tok = token.strip()
    primed = tok.endswith("'") or tok.endswith("p")
    digits = tok[:-1] if primed else tok
    if not digits.isdigit() or int(digits) < 1:
        raise ValueError(f"bad letter {token!r}")
    return letter(int(digits), primed)


def format_letter(code: int) -> str:
    return f"{value_of(code)}'" if code & 1 else str(value_of(code))


def parse_word(text: str) -> Word:
    """Parse a space separated word.  The result is not canonicalized."""
    out = []
    for k, tok in enumerate(text.split()):
        try:
            out.append(parse_letter(tok))
        except ValueError:
            raise ValueError(f"bad letter {tok!r} at position {k + 1}") from None
    return tuple(out)


def format_word(w) -> str:
    return " ".join(format_letter(c) for c in w)


def canonicalize(w) -> Word:
    """Unprime the leftmost occurrence of each value."""
    return kernels.canonical(tuple(w))


def is_canonical(w) -> bool:
    return canonicalize(w) == tuple(w)


def first_occurrences(w) -> list[int]:
    seen = set()
    out = []
    for k, c in enumerate(w):
        v = value_of(c)
        if v not in seen:
            seen.add(v)
            out.append(k)
    return out


def representatives(w) -> set[Word]:
    """All strings equivalent to ``w``: prime any subset of first occurrences."""
    w = canonicalize(w)
    firsts = first_occurrences(w)
    reps = set()
    for flips in product((False, True), repeat=len(firsts)):
        s = list(w)
        for k, f in zip(firsts, flips):
            if f:
                s[k] = toggle_prime(s[k])
        reps.add(tuple(s))
    return reps


def weight(w, n: int) -> tuple[int, ...]:
    counts = [0] * n
    for c in w:
        v = value_of(c)
        if v > n:
            raise ValueError(f"letter {format_letter(c)} exceeds alphabet bound {n}")
        counts[v - 1] += 1
    return tuple(counts)


def max_value(w) -> int:
    return max((value_of(c) for c in w), default=0)


def standard_labels(w) -> tuple[int, ...]:
    return kernels.standard_labels(tuple(w))


def standardize(w) -> Word:
    """Standardization as a word of unprimed letters 1..N."""
    return tuple(2 * lab for lab in standard_labels(w))


def destandardize(s, target_weight) -> Word | None:
    """The unique canonical word of ``target_weight`` standardizing to ``s``.

    ``s`` is a standard word (its letters are a permutation of 1..N); primes
    on ``s`` are ignored.  Returns None if no such word exists.
    """
    labels = tuple(value_of(c) for c in s)
    if sorted(labels) != list(range(1, len(labels) + 1)):
        raise ValueError("not a standard word")
    return kernels.destandardize(labels, tuple(target_weight))


def alpha(i: int, n: int) -> tuple[int, ...]:
    """The simple root e_i - e_{i+1}."""
    a = [0] * n
    a[i - 1] = 1
    a[i] = -1
    return tuple(a)


def all_words(n: int, length: int):
    """Every canonical word over [n]' of the given length, each once."""
    for w in product(range(1, 2 * n + 1), repeat=length):
        if is_canonical(w):
            yield w
