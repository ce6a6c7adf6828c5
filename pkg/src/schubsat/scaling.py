"""Code scaling and bit scaling of permutations.

``code_scale(w, N)`` multiplies the Lehmer code by ``N``.  ``bit_scale(w, N,
k)`` duplicates ``N`` times every Rothe-diagram column whose dot sits below
row ``k``; ``bit_scale_via_seq`` computes the same thing through the block
label sequence and serves as an independent cross-check.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import (DescentNotCovered, InconsistentBlocks, InvariantFailure,
                     KBelowMaxDescent, NotBitScalable)
from .perm import (Permutation, RotheDiagram, code, code_inverse, descents,
                   length, max_descent, rothe)

__all__ = [
    "BlockSequence", "ShadedColumnData",
    "code_scale", "shaded_columns", "scaled_diagram", "bit_scale",
    "seq_encode", "seq_decode", "bit_scale_via_seq",
]


def code_scale(w: Permutation, N: int) -> Permutation:
    """N * w: the permutation with code N * code(w)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    out = code_inverse([N * c for c in code(w)])
    if length(out) != N * length(w) or descents(out) != descents(w):
        raise InvariantFailure(f"code scaling of {w} by {N} broke length or descents")
    return out


@dataclass(frozen=True)
class ShadedColumnData:
    J: frozenset  # shaded column indices
    S: frozenset  # dots (i, w(i)) strictly below row k


def _resolve_k(w: Permutation, k: Optional[int]) -> int:
    d = max_descent(w)
    if k is None:
        return d
    if k < d:
        raise KBelowMaxDescent(f"k = {k} is below the maximal descent {d} of {w}")
    return k


def shaded_columns(w: Permutation, k: Optional[int] = None) -> ShadedColumnData:
    """Columns j with w^{-1}(j) > k, together with their dots."""
    k = _resolve_k(w, k)
    dots = frozenset((i, w(i)) for i in range(k + 1, w.size + 1))
    return ShadedColumnData(J=frozenset(j for _, j in dots), S=dots)


def scaled_diagram(w: Permutation, N: int, k: Optional[int] = None) -> RotheDiagram:
    """D(w) with each shaded column replaced by N adjacent copies."""
    if N < 1:
        raise ValueError("N must be >= 1")
    J = sorted(shaded_columns(w, k).J)

    def shift(j):
        return j + (N - 1) * sum(1 for x in J if x < j)

    out = set()
    for r, c in rothe(w):
        base = shift(c)
        copies = N if c in J else 1
        out.update((r, base + t) for t in range(copies))
    return frozenset(out)


def bit_scale(w: Permutation, N: int, k: Optional[int] = None) -> Permutation:
    """N (x) w with respect to row k (default: the maximal descent)."""
    boxes = scaled_diagram(w, N, k)
    rows = Counter(r for r, _ in boxes)
    candidate = code_inverse([rows.get(r, 0) for r in range(1, max(rows, default=0) + 1)])
    if rothe(candidate) != boxes:
        raise NotBitScalable(f"no permutation has the scaled diagram of {w} (N={N}, k={k})")
    if descents(candidate) != descents(w):
        raise InvariantFailure(f"bit scaling of {w} changed the descent set")
    return candidate


@dataclass(frozen=True)
class BlockSequence:
    """Block labels of the values 1..n for boundaries k_1 < ... < k_l."""

    labels: tuple
    boundaries: tuple

    def __post_init__(self):
        b = self.boundaries
        if any(x >= y for x, y in zip(b, b[1:])) or (b and b[0] < 1):
            raise InconsistentBlocks(f"boundaries must be strictly increasing: {b}")
        n = len(self.labels)
        if b and b[-1] > n:
            raise InconsistentBlocks(f"boundary {b[-1]} exceeds sequence length {n}")
        if any(not 0 <= x <= len(b) for x in self.labels):
            raise InconsistentBlocks(f"labels must lie in 0..{len(b)}")
        ks = (0,) + tuple(b) + (n,)
        counts = Counter(self.labels)
        for m in range(len(b) + 1):
            if counts.get(m, 0) != ks[m + 1] - ks[m]:
                raise InconsistentBlocks(
                    f"label {m} occurs {counts.get(m, 0)} times, block has size {ks[m + 1] - ks[m]}")

    @property
    def top(self) -> int:
        return len(self.boundaries)

    def __str__(self):
        return "".join(map(str, self.labels))


def _boundaries(boundaries: Optional[Iterable[int]], w: Permutation) -> tuple:
    b = tuple(sorted(set(descents(w) if boundaries is None else boundaries)))
    missing = descents(w) - set(b)
    if missing:
        raise DescentNotCovered(f"descents {sorted(missing)} of {w} are not boundaries")
    return b


def seq_encode(w: Permutation, boundaries: Optional[Iterable[int]] = None) -> BlockSequence:
    """Label value i by the block containing position w^{-1}(i)."""
    b = _boundaries(boundaries, w)
    n = max(w.size, b[-1] if b else 0)
    ks = (0,) + b + (n,)
    block = {}
    for m in range(len(b) + 1):
        for p in range(ks[m] + 1, ks[m + 1] + 1):
            block[p] = m
    inv = w.inverse()
    return BlockSequence(tuple(block[inv(i)] for i in range(1, n + 1)), b)


def seq_decode(s: BlockSequence) -> Permutation:
    n = len(s.labels)
    ks = (0,) + tuple(s.boundaries) + (n,)
    word = [0] * n
    for m in range(s.top + 1):
        values = [i for i, x in enumerate(s.labels, 1) if x == m]
        for p, val in enumerate(values, ks[m] + 1):
            word[p - 1] = val
    return Permutation(word)


def bit_scale_via_seq(w: Permutation, N: int,
                      boundaries: Optional[Iterable[int]] = None) -> Permutation:
    """Bit scaling by repeating every top label N times in seq(w)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    s = seq_encode(w, boundaries)
    labels = []
    for x in s.labels:
        labels.extend([x] * (N if x == s.top else 1))
    return seq_decode(BlockSequence(tuple(labels), s.boundaries))
