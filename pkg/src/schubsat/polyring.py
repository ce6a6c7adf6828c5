"""Sparse multivariate polynomials over the integers.

A polynomial is a mapping from exponent vectors to nonzero ``int``
coefficients.  Exponent vectors are tuples ``(a_1, a_2, ...)`` giving the
power of ``x_1, x_2, ...`` with trailing zeros trimmed, so they have the
same canonical shape as Lehmer codes.

Term order: plain tuple comparison of trimmed exponent vectors, i.e.
lexicographic comparing the exponent of ``x_1`` first.  Because trimmed
vectors never end in zero, tuple order agrees with comparing zero-padded
vectors.
"""
from __future__ import annotations

from typing import Iterable, Mapping, Optional

from .errors import CapExceeded, InternalNonExactDivision, NotHomogeneous

__all__ = [
    "Polynomial", "monomial", "variable", "ONE", "ZERO",
    "poly_add", "poly_mul", "swap_adjacent_vars", "divided_difference",
]

Exponents = tuple  # tuple[int, ...]


def _trim(e) -> tuple[int, ...]:
    m = len(e)
    while m and e[m - 1] == 0:
        m -= 1
    return tuple(e[:m])


class Polynomial:
    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Exponents, int] | Iterable] = None):
        acc: dict[tuple[int, ...], int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for e, c in items:
                if any(x < 0 for x in e):
                    raise ValueError(f"negative exponent in {e!r}")
                e = _trim(e)
                acc[e] = acc.get(e, 0) + int(c)
        self._terms = {e: c for e, c in acc.items() if c}

    @classmethod
    def _wrap(cls, terms: dict) -> "Polynomial":
        # terms must already be canonical with no zero coefficients
        p = object.__new__(cls)
        p._terms = terms
        return p

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, e: Exponents) -> int:
        return self._terms.get(_trim(e), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms))

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial({(): other})
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def degrees(self) -> set[int]:
        return {sum(e) for e in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        """Degree of a nonzero homogeneous polynomial."""
        degs = self.degrees()
        if len(degs) != 1:
            raise NotHomogeneous(f"degrees present: {sorted(degs)}")
        return degs.pop()

    def nvars(self) -> int:
        """Largest variable index that occurs."""
        return max((len(e) for e in self._terms), default=0)

    def min_term(self) -> tuple[tuple[int, ...], int]:
        e = min(self._terms)
        return e, self._terms[e]

    def __neg__(self):
        return Polynomial._wrap({e: -c for e, c in self._terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial({(): other})
        return poly_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial({(): other})
        return poly_add(self, -other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return Polynomial._wrap({e: c * other for e, c in self._terms.items()})
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return format_polynomial(self)

    def to_json(self) -> list[dict]:
        return [{"exponents": list(e), "coeff": str(c)}
                for e, c in sorted(self._terms.items(), reverse=True)]

    @classmethod
    def from_json(cls, data: list[dict]) -> "Polynomial":
        return cls((tuple(t["exponents"]), int(t["coeff"])) for t in data)


def monomial(exponents: Exponents, coeff: int = 1) -> Polynomial:
    return Polynomial({tuple(exponents): coeff})


def variable(i: int) -> Polynomial:
    """x_i."""
    return monomial((0,) * (i - 1) + (1,))


ZERO = Polynomial()
ONE = Polynomial({(): 1})


def format_polynomial(f: Polynomial) -> str:
    """Terms in descending term order, e.g. ``3*x1^2*x2 + x3``."""
    if not f:
        return "0"
    out = []
    for e, c in sorted(f.items(), reverse=True):
        factors = [f"x{i}" if a == 1 else f"x{i}^{a}" for i, a in enumerate(e, 1) if a]
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not out:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    if len(f) < len(g):
        f, g = g, f
    acc = dict(f._terms)
    for e, c in g._terms.items():
        s = acc.get(e, 0) + c
        if s:
            acc[e] = s
        else:
            acc.pop(e, None)
    return Polynomial._wrap(acc)


def _add_exps(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + y for x, y in zip(a, b)) + a[len(b):]


def poly_mul(f: Polynomial, g: Polynomial, max_terms: Optional[int] = None) -> Polynomial:
    """Exact product.  ``max_terms`` bounds the size of the result."""
    if len(f) < len(g):
        f, g = g, f
    acc: dict[tuple, int] = {}
    for eg, cg in g._terms.items():
        for ef, cf in f._terms.items():
            e = _add_exps(ef, eg)
            acc[e] = acc.get(e, 0) + cf * cg
        if max_terms is not None and len(acc) > max_terms:
            raise CapExceeded(f"product exceeds {max_terms} terms")
    return Polynomial._wrap({e: c for e, c in acc.items() if c})


def _swap(e: tuple, i: int) -> tuple:
    # exchange the exponents of x_i and x_{i+1} (1-based i)
    a = e[i - 1] if len(e) >= i else 0
    b = e[i] if len(e) > i else 0
    if a == b:
        return e
    lst = list(e) + [0] * max(0, i + 1 - len(e))
    lst[i - 1], lst[i] = b, a
    return _trim(lst)


def swap_adjacent_vars(f: Polynomial, i: int) -> Polynomial:
    """s_i f: exchange x_i and x_{i+1}."""
    if i < 1:
        raise ValueError("variable index must be >= 1")
    return Polynomial._wrap({_swap(e, i): c for e, c in f._terms.items()})


def _divided_difference_terms(f: Polynomial, i: int) -> dict:
    acc: dict[tuple, int] = {}
    for e, c in f._terms.items():
        a = e[i - 1] if len(e) >= i else 0
        b = e[i] if len(e) > i else 0
        if a == b:
            continue
        # (x^a y^b - x^b y^a)/(x - y) = sign * x^lo y^lo * h_{hi-lo-1}(x, y)
        lo, hi = (b, a) if a > b else (a, b)
        sign = c if a > b else -c
        base = list(e) + [0] * max(0, i + 1 - len(e))
        top = hi - lo - 1
        for t in range(top + 1):
            base[i - 1] = lo + top - t
            base[i] = lo + t
            key = _trim(base)
            s = acc.get(key, 0) + sign
            if s:
                acc[key] = s
            else:
                del acc[key]
    return acc


def divided_difference(f: Polynomial, i: int, check: bool = True) -> Polynomial:
    """Divided difference (f - s_i f) / (x_i - x_{i+1}).

    The quotient is assembled monomial by monomial.  With ``check`` the
    defining identity ``(x_i - x_{i+1}) * q == f - s_i f`` is verified.
    """
    if i < 1:
        raise ValueError("variable index must be >= 1")
    q = Polynomial._wrap(_divided_difference_terms(f, i))
    if check:
        lhs = poly_mul(q, variable(i) - variable(i + 1))
        rhs = f - swap_adjacent_vars(f, i)
        if lhs != rhs:
            raise InternalNonExactDivision(f"divided difference {i} is not exact")
    return q
