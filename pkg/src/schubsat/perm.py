"""Permutations of finite support.

A permutation of the positive integers that fixes all but finitely many
points is stored by its one-line word with trailing fixed points removed,
so ``2134`` and ``21`` are the same object.  Everything else (Lehmer code,
Rothe diagram, inverse) is derived from the word on demand.

Positions and values are 1-based throughout, matching the usual
combinatorics conventions.

>>> w = from_word((7, 2, 4, 1, 5, 8, 3, 6))
>>> code(w)
(6, 1, 2, 0, 1, 2)
>>> length(w), sorted(descents(w))
(12, [1, 3, 6])
"""
from __future__ import annotations

import itertools
from collections import Counter
from functools import total_ordering
from typing import Iterable, Iterator, Optional, Sequence

from . import limits
from .errors import CapExceeded, NotAPermutation

__all__ = [
    "Permutation", "LehmerCode", "RotheDiagram",
    "from_word", "identity", "simple_transposition",
    "code", "code_inverse", "length", "descents", "max_descent", "rothe",
    "is_cover", "covers_up", "apply_transposition", "all_permutations",
    "parse_permutation", "parse_code", "format_permutation",
]

LehmerCode = tuple  # tuple[int, ...], trailing zeros trimmed
RotheDiagram = frozenset  # frozenset[tuple[int, int]] of (row, column)


def _trim(seq: Sequence[int]) -> tuple[int, ...]:
    m = len(seq)
    while m and seq[m - 1] == m:
        m -= 1
    return tuple(seq[:m])


@total_ordering
class Permutation:
    """An element of S_infinity, stored as a canonical one-line word.

    Equality, hashing and ordering use the canonical word, so embedding a
    permutation into a larger symmetric group never changes it.  Ordering is
    lexicographic on one-line words.
    """

    __slots__ = ("word",)

    def __init__(self, word: Iterable[int] = ()):
        word = tuple(word)
        m = len(word)
        if sorted(word) != list(range(1, m + 1)):
            raise NotAPermutation(f"{word!r} is not a permutation of [1..{m}]")
        object.__setattr__(self, "word", _trim(word))

    @classmethod
    def _trusted(cls, word: tuple[int, ...]) -> "Permutation":
        obj = object.__new__(cls)
        object.__setattr__(obj, "word", _trim(word))
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def size(self) -> int:
        """Smallest n with self in S_n (0 for the identity)."""
        return len(self.word)

    def __call__(self, i: int) -> int:
        if i < 1:
            raise ValueError(f"position {i} must be >= 1")
        return self.word[i - 1] if i <= len(self.word) else i

    def padded(self, n: int) -> tuple[int, ...]:
        """The one-line word viewed inside S_n (n >= size)."""
        if n < self.size:
            raise ValueError(f"{self} does not lie in S_{n}")
        return self.word + tuple(range(self.size + 1, n + 1))

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, v in enumerate(self.word, 1):
            inv[v - 1] = i
        return Permutation._trusted(tuple(inv))

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(i) = self(other(i)); so w * t_ij swaps positions i, j
        n = max(self.size, other.size)
        return Permutation._trusted(tuple(self(other(i)) for i in range(1, n + 1)))

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.word == other.word

    def __lt__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        # a trimmed word that is a proper prefix of another is smaller once
        # both are padded, so plain tuple order agrees with padded order
        return self.word < other.word

    def __hash__(self):
        return hash(self.word)

    def __repr__(self):
        return f"Permutation({format_permutation(self)})"

    def __str__(self):
        return format_permutation(self)


def from_word(entries: Sequence[int]) -> Permutation:
    """Parse a one-line word; trailing fixed points are dropped."""
    return Permutation(entries)


def identity() -> Permutation:
    return Permutation(())


def simple_transposition(i: int) -> Permutation:
    """s_i, which swaps i and i+1."""
    if i < 1:
        raise ValueError("simple transpositions are s_1, s_2, ...")
    return apply_transposition(identity(), i, i + 1)


def rothe(w: Permutation) -> RotheDiagram:
    """Rothe diagram: boxes (i, j) with j < w(i) and i < w^{-1}(j)."""
    inv = w.inverse()
    n = w.size
    return frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, w(i))
        if i < inv(j)
    )


def code(w: Permutation) -> LehmerCode:
    """Lehmer code, read off as the row counts of the Rothe diagram."""
    counts = Counter(r for r, _ in rothe(w))
    c = [counts.get(r, 0) for r in range(1, w.size + 1)]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def code_inverse(c: Sequence[int]) -> Permutation:
    """The unique permutation whose Lehmer code is ``c``."""
    c = list(c)
    if any(x < 0 for x in c):
        raise ValueError(f"code entries must be nonnegative: {c}")
    m = max((i + x for i, x in enumerate(c, 1)), default=0)
    unused = list(range(1, m + 1))
    word = []
    for x in c:
        word.append(unused.pop(x))
    word.extend(unused)
    return Permutation._trusted(tuple(word))


def length(w: Permutation) -> int:
    """Number of inversions."""
    a = w.word
    return sum(1 for i, j in itertools.combinations(range(len(a)), 2) if a[i] > a[j])


def descents(w: Permutation) -> frozenset[int]:
    a = w.word
    return frozenset(i for i in range(1, len(a)) if a[i - 1] > a[i])


def max_descent(w: Permutation) -> int:
    """Largest descent, or 0 for the identity."""
    return max(descents(w), default=0)


def apply_transposition(u: Permutation, i: int, j: int) -> Permutation:
    """u * t_ij: swap the values in positions i and j."""
    if not 1 <= i < j:
        raise ValueError(f"need 1 <= i < j, got ({i}, {j})")
    word = list(u.padded(max(u.size, j)))
    word[i - 1], word[j - 1] = word[j - 1], word[i - 1]
    return Permutation._trusted(tuple(word))


def is_cover(u: Permutation, w: Permutation) -> Optional[tuple[int, int]]:
    """Return (i, j) if w = u t_ij is a Bruhat cover of u, else None."""
    n = max(u.size, w.size)
    a, b = u.padded(n), w.padded(n)
    diff = [p for p in range(n) if a[p] != b[p]]
    if len(diff) != 2:
        return None
    i, j = diff
    if a[i] != b[j] or a[j] != b[i] or a[i] > a[j]:
        return None
    lo, hi = a[i], a[j]
    if any(lo < a[m] < hi for m in range(i + 1, j)):
        return None
    return i + 1, j + 1


def covers_up(u: Permutation, bound: int) -> list[tuple[int, int, Permutation]]:
    """All covers u < u t_ij with 1 <= i < j <= bound, sorted by (i, j)."""
    if bound < u.size:
        raise ValueError(f"bound {bound} is below size {u.size}")
    a = u.padded(bound)
    out = []
    for i in range(bound):
        # scanning right from i, a cover is a new running minimum above a[i]
        best = None
        for j in range(i + 1, bound):
            if a[j] > a[i] and (best is None or a[j] < best):
                best = a[j]
                out.append((i + 1, j + 1, apply_transposition(u, i + 1, j + 1)))
    return out


def all_permutations(n: int, cap: Optional[int] = None) -> Iterator[Permutation]:
    """All of S_n in lexicographic order of one-line words."""
    cap = limits.current().enum_max_n if cap is None else cap
    if n > cap:
        raise CapExceeded(f"enumerating S_{n} exceeds the cap S_{cap}")
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation._trusted(word)


# -- text formats -----------------------------------------------------------

def format_permutation(w: Permutation, compact: bool = True) -> str:
    """Digit string when every value is <= 9, comma form otherwise."""
    if not w.word:
        return "1" if compact else ""
    if compact and w.size <= 9:
        return "".join(map(str, w.word))
    return ",".join(map(str, w.word))


def parse_permutation(text: str) -> Permutation:
    text = text.strip()
    if text.startswith("c:"):
        return code_inverse(parse_code(text))
    if "," in text:
        entries = [int(t) for t in text.split(",") if t.strip()]
    elif text.isdigit():
        entries = [int(ch) for ch in text]
    else:
        raise NotAPermutation(f"cannot parse permutation {text!r}")
    return from_word(entries)


def parse_code(text: str) -> LehmerCode:
    text = text.strip()
    if text.startswith("c:"):
        text = text[2:]
    if not text:
        return ()
    if "," in text:
        entries = [int(t) for t in text.split(",")]
    else:
        entries = [int(ch) for ch in text]
    if any(x < 0 for x in entries):
        raise ValueError(f"code entries must be nonnegative: {text!r}")
    while entries and entries[-1] == 0:
        entries.pop()
    return tuple(entries)
