"""Process-wide resource caps.

All guards read from ``current()``.  Use ``override`` to change them for a
block of code::

    with limits.override(schubert_max_n=11):
        ...
"""
from __future__ import annotations

import contextlib
import dataclasses
from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    # all_permutations(n) refuses n above this
    enum_max_n: int = 8
    # largest S_n whose Schubert polynomials we generate
    schubert_max_n: int = 9
    # product_expansion guards
    product_max_degree: int = 24
    product_max_var: int = 12
    max_terms: int = 2_000_000
    # tableau search node budget
    node_budget: int = 10**7

    def as_dict(self) -> dict[str, int]:
        return dataclasses.asdict(self)


DEFAULTS = Limits()
_current = DEFAULTS


def current() -> Limits:
    return _current


def set_limits(new: Limits) -> None:
    global _current
    _current = new


@contextlib.contextmanager
def override(**changes: int):
    old = current()
    set_limits(dataclasses.replace(old, **changes))
    try:
        yield current()
    finally:
        set_limits(old)
