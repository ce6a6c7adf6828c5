"""Schubert polynomials and their structure constants.

Schubert polynomials are generated top-down: embed ``w`` in the smallest
``S_n`` containing it, climb from ``w`` to the longest element by repeatedly
swapping at the smallest ascent, then apply the matching divided
differences to ``x_1^{n-1} x_2^{n-2} ... x_{n-1}``.  Every polynomial met on
the way is cached by its Lehmer code.

Expansion in the Schubert basis relies on the following fact.  Every
monomial of ``S_w`` arises from ``x^{code(w)}`` by shifting exponent weight
toward smaller-indexed variables (the bottom pipe dream is the only one
with monomial ``x^{code(w)}``), so every other monomial is strictly larger
in the term order of :mod:`schubsat.polyring`.  Hence the smallest monomial
``x^a`` of any nonzero homogeneous ``f`` is the leading monomial of exactly
one basis element in the support, namely ``S_{code^{-1}(a)}``, and its
coefficient in ``f`` is the expansion coefficient.  ``schubert_poly``
asserts the smallest-monomial law on every polynomial it builds, and
``expand_in_schubert_basis`` aborts if it ever loops longer than the number
of available monomials, so a wrong ordering cannot pass silently.
"""
from __future__ import annotations

import threading
from math import comb
from typing import Optional

from . import limits
from .errors import (CapExceeded, DivergenceGuard, InvariantFailure,
                     MethodInapplicable)
from .perm import (Permutation, apply_transposition, code, code_inverse,
                   covers_up, descents, format_permutation, length,
                   max_descent, simple_transposition)
from .polyring import ONE, Polynomial, divided_difference, monomial, poly_mul

__all__ = [
    "SchubertExpansion", "schubert_poly", "expand_in_schubert_basis",
    "product_expansion", "monk", "coeff", "simple_index", "clear_cache",
]


class SchubertExpansion(dict):
    """Mapping ``Permutation -> int`` of nonzero coefficients."""

    def to_json(self) -> list[dict]:
        return [{"w": list(w.word), "coeff": str(c)} for w, c in sorted(self.items())]

    @classmethod
    def from_json(cls, data) -> "SchubertExpansion":
        return cls({Permutation(t["w"]): int(t["coeff"]) for t in data})

    def __str__(self):
        if not self:
            return "0"
        parts = []
        for w, c in sorted(self.items()):
            name = f"S[{format_permutation(w)}]"
            parts.append(name if c == 1 else f"{c}*{name}")
        return " + ".join(parts)


_memo: dict[tuple, Polynomial] = {}
_products: dict[tuple, SchubertExpansion] = {}
_lock = threading.Lock()


def clear_cache() -> None:
    with _lock:
        _memo.clear()
        _products.clear()


def _remember(key: tuple, poly: Polynomial) -> Polynomial:
    with _lock:
        return _memo.setdefault(key, poly)


def _staircase(n: int) -> Polynomial:
    if n <= 1:
        return ONE
    return monomial(tuple(range(n - 1, 0, -1)))


def _check_generated(w: Permutation, c: tuple, poly: Polynomial) -> None:
    if any(x <= 0 for _, x in poly.items()):
        raise InvariantFailure(f"S_{w} has a nonpositive coefficient")
    e, lead = poly.min_term()
    if e != c or lead != 1:
        raise InvariantFailure(
            f"smallest monomial of S_{w} is {e} (coeff {lead}), expected code {c}")


def schubert_poly(w: Permutation) -> Polynomial:
    """The Schubert polynomial of ``w``."""
    n = w.size
    cap = limits.current().schubert_max_n
    if n > cap:
        raise CapExceeded(f"{w} lies in S_{n}; Schubert polynomials capped at S_{cap}")
    c = code(w)
    hit = _memo.get(c)
    if hit is not None:
        return hit

    chain: list[tuple[Permutation, tuple, int]] = []
    cur, key = w, c
    while True:
        poly = _memo.get(key)
        if poly is not None:
            break
        word = cur.padded(n)
        ascent = next((i for i in range(1, n) if word[i - 1] < word[i]), None)
        if ascent is None:
            poly = _remember(key, _staircase(n))
            break
        chain.append((cur, key, ascent))
        cur = apply_transposition(cur, ascent, ascent + 1)
        key = code(cur)

    for perm, key, i in reversed(chain):
        poly = divided_difference(poly, i)
        _check_generated(perm, key, poly)
        poly = _remember(key, poly)
    return poly


def expand_in_schubert_basis(f: Polynomial) -> SchubertExpansion:
    """Write a homogeneous polynomial as an integer combination of S_w."""
    out = SchubertExpansion()
    if not f:
        return out
    d = f.degree()
    v = f.nvars()
    guard = comb(d + v - 1, v - 1) if v else 1
    rem = dict(f.items())
    steps = 0
    while rem:
        steps += 1
        if steps > guard:
            raise DivergenceGuard(f"expansion did not terminate within {guard} steps")
        a = min(rem)
        c = rem[a]
        w = code_inverse(a)
        for e, x in schubert_poly(w).items():
            s = rem.get(e, 0) - c * x
            if s:
                rem[e] = s
            else:
                del rem[e]
        out[w] = c
    return out


def product_expansion(u: Permutation, v: Permutation) -> SchubertExpansion:
    """Structure constants: S_u * S_v = sum_w c^w_{u,v} S_w."""
    if v < u:
        u, v = v, u
    lim = limits.current()
    lu, lv = length(u), length(v)
    if lu + lv > lim.product_max_degree:
        raise CapExceeded(f"degree {lu + lv} exceeds {lim.product_max_degree}")
    nvar = max(max_descent(u), max_descent(v))
    if nvar > lim.product_max_var:
        raise CapExceeded(f"variable x_{nvar} exceeds x_{lim.product_max_var}")
    hit = _products.get((u, v))
    if hit is not None:
        return SchubertExpansion(hit)

    prod = poly_mul(schubert_poly(u), schubert_poly(v), max_terms=lim.max_terms)
    out = expand_in_schubert_basis(prod)
    for w, c in out.items():
        if c <= 0 or length(w) != lu + lv:
            raise InvariantFailure(f"bad term {c}*S_{w} in S_{u}*S_{v}")
    with _lock:
        _products.setdefault((u, v), out)
    return SchubertExpansion(out)


def monk(u: Permutation, k: int, bound: Optional[int] = None) -> SchubertExpansion:
    """S_u * S_{s_k} by Monk's rule: sum of S_{u t_ij} over covers, i <= k < j."""
    if k < 1:
        raise ValueError("k must be >= 1")
    need = max(u.size, k) + 1
    if bound is None:
        bound = need
    elif bound < need:
        raise ValueError(f"bound {bound} is too small, need >= {need}")
    return SchubertExpansion(
        {w: 1 for i, j, w in covers_up(u, bound) if i <= k < j})


def simple_index(v: Permutation) -> Optional[int]:
    """k if v = s_k, else None."""
    if length(v) != 1:
        return None
    (k,) = descents(v)
    return k


def coeff(u: Permutation, v: Permutation, w: Permutation, method: str = "auto") -> int:
    """The Schubert structure constant c^w_{u,v}.

    ``method`` is ``"auto"`` (dimension check, then Monk's rule if a factor
    is simple, else full expansion), ``"monk"`` or ``"expand"``.
    """
    if method not in ("auto", "monk", "expand"):
        raise ValueError(f"unknown method {method!r}")
    if method == "expand":
        return product_expansion(u, v).get(w, 0)
    if method == "auto" and length(u) + length(v) != length(w):
        return 0
    kv, ku = simple_index(v), simple_index(u)
    if kv is not None:
        return monk(u, kv).get(w, 0)
    if ku is not None:
        return monk(v, ku).get(w, 0)
    if method == "monk":
        raise MethodInapplicable("Monk's rule needs a simple transposition factor")
    return product_expansion(u, v).get(w, 0)

