"""Certificates that a Schubert structure constant vanishes.

Two cheap tests are available before falling back to exact expansion:

* the dimension test: c^w_{u,v} = 0 unless l(u) + l(v) = l(w);
* the indicator tableau test: fill D(u) and a copy of D(v) shifted n columns
  to the right with content code(w), strictly increasing down columns and
  with every entry at most its row.  If no such filling exists then
  c^w_{u,v} = 0.  A filling existing proves nothing.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import limits
from .errors import SearchBudgetExceeded
from .perm import Permutation, code, length, rothe
from .schubert import coeff

__all__ = [
    "IndicatorTableau", "ZeroCertificate",
    "dimension_ok", "embedded_diagram", "tableaux_exists",
    "tableau_violations", "certify_zero",
]


def dimension_ok(u: Permutation, v: Permutation, w: Permutation) -> bool:
    return length(u) + length(v) == length(w)


def _common_n(u, v, w) -> int:
    return max(u.size, v.size, w.size, 1)


def embedded_diagram(u: Permutation, v: Permutation, n: int) -> frozenset:
    """D(u) together with D(v) shifted right by n columns."""
    return rothe(u) | frozenset((r, c + n) for r, c in rothe(v))


@dataclass(frozen=True)
class IndicatorTableau:
    n: int
    filling: dict = field(hash=False)  # (row, col) -> entry

    def to_json(self) -> list[dict]:
        return [{"row": r, "col": c, "entry": m}
                for (r, c), m in sorted(self.filling.items())]


def tableau_violations(T: IndicatorTableau, u: Permutation, v: Permutation,
                       w: Permutation) -> list[str]:
    """Every way in which T fails to be an indicator tableau for (u, v, w)."""
    problems = []
    n = T.n
    if set(T.filling) != embedded_diagram(u, v, n):
        problems.append("filling does not cover the embedded diagram")
    c = code(w)
    want = {i: (c[i - 1] if i <= len(c) else 0) for i in range(1, n + 1)}
    have = {i: 0 for i in range(1, n + 1)}
    for (r, col), m in T.filling.items():
        if not 1 <= m <= n:
            problems.append(f"entry {m} at {(r, col)} is outside [1, {n}]")
            continue
        have[m] += 1
        if m > r:
            problems.append(f"entry {m} exceeds its row {r}")
    if have != want:
        problems.append(f"content {have} differs from code {want}")
    for (r, col), m in T.filling.items():
        for (r2, col2), m2 in T.filling.items():
            if col2 == col and r < r2 and not m < m2:
                problems.append(f"column {col} not strictly increasing at rows {r}, {r2}")
    return problems


def tableaux_exists(u: Permutation, v: Permutation, w: Permutation,
                    order: str = "column",
                    node_budget: Optional[int] = None) -> Optional[IndicatorTableau]:
    """Search for an indicator tableau; ``None`` means none exists.

    ``order`` is ``"column"`` (boxes by column then row) or ``"row"``.
    Raises SearchBudgetExceeded rather than returning an unproven ``None``.
    """
    if node_budget is None:
        node_budget = limits.current().node_budget
    n = _common_n(u, v, w)
    if order == "column":
        boxes = sorted(embedded_diagram(u, v, n), key=lambda b: (b[1], b[0]))
    elif order == "row":
        boxes = sorted(embedded_diagram(u, v, n))
    else:
        raise ValueError(f"unknown order {order!r}")
    c = code(w)
    left = [0] + [c[i - 1] if i <= len(c) else 0 for i in range(1, n + 1)]
    if sum(left) != len(boxes):
        return None

    # rows_left[t] = unfilled boxes in rows >= t, maintained along the search
    rows_left = [0] * (n + 2)
    for r, _ in boxes:
        for t in range(1, min(r, n) + 1):
            rows_left[t] += 1
    columns: dict[int, dict[int, int]] = {}
    filling: dict = {}
    nodes = 0

    def feasible() -> bool:
        need = 0
        for t in range(n, 0, -1):
            need += left[t]
            if need > rows_left[t]:
                return False
        return True

    if not feasible():
        return None

    def place(idx: int) -> bool:
        nonlocal nodes
        if idx == len(boxes):
            return True
        r, col = boxes[idx]
        placed = columns.setdefault(col, {})
        lo, hi = 1, min(r, n)
        for r2, m2 in placed.items():
            if r2 < r:
                lo = max(lo, m2 + 1)
            else:
                hi = min(hi, m2 - 1)
        for t in range(1, min(r, n) + 1):
            rows_left[t] -= 1
        found = False
        for m in range(lo, hi + 1):
            if not left[m]:
                continue
            nodes += 1
            if nodes > node_budget:
                raise SearchBudgetExceeded(f"tableau search exceeded {node_budget} nodes")
            left[m] -= 1
            if feasible():
                placed[r] = m
                filling[(r, col)] = m
                if place(idx + 1):
                    found = True
                else:
                    del placed[r]
                    del filling[(r, col)]
            left[m] += 1
            if found:
                break
        for t in range(1, min(r, n) + 1):
            rows_left[t] += 1
        return found

    if place(0):
        return IndicatorTableau(n=n, filling=dict(filling))
    return None


@dataclass(frozen=True)
class ZeroCertificate:
    """Outcome of the vanishing cascade.

    kind is one of ``dimension``, ``empty_tableaux``, ``exact_zero``,
    ``nonzero`` or ``unknown`` (a tableau exists and no exact value was
    computed).
    """

    kind: str
    coefficient: Optional[int] = None
    witness: Optional[IndicatorTableau] = None

    @property
    def is_zero(self) -> bool:
        return self.kind in ("dimension", "empty_tableaux", "exact_zero")

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.coefficient is not None:
            out["coefficient"] = str(self.coefficient)
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out


def certify_zero(u: Permutation, v: Permutation, w: Permutation,
                 allow_exact: bool = False) -> ZeroCertificate:
    if not dimension_ok(u, v, w):
        return ZeroCertificate("dimension")
    witness = tableaux_exists(u, v, w)
    if witness is None:
        return ZeroCertificate("empty_tableaux")
    if not allow_exact:
        return ZeroCertificate("unknown", witness=witness)
    value = coeff(u, v, w)
    if value == 0:
        return ZeroCertificate("exact_zero", coefficient=0, witness=witness)
    return ZeroCertificate("nonzero", coefficient=value, witness=witness)
