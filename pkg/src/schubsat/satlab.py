"""Saturation counterexamples: construction, verification and search.

Both families have the same shape: ``v = s_i`` and ``w = u t_ij`` is a Bruhat
cover of ``u``, so ``c^w_{u,v} = 1`` by Monk's rule.  ``verify`` scales the
triple and checks the scaled coefficient vanishes, using certificates from
:mod:`schubsat.vanishing` and, where the caps allow, exact expansion.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import HypothesisViolated, InvariantFailure, LimitError
from .perm import (Permutation, all_permutations, apply_transposition,
                   from_word, is_cover, max_descent, simple_transposition)
from .scaling import bit_scale, code_scale
from .schubert import coeff, simple_index
from .vanishing import ZeroCertificate, certify_zero

__all__ = [
    "SaturationTriple", "ScaledResult", "SaturationReport",
    "kirillov_triple", "bit_triple", "corollary_code_family",
    "corollary_bit_family", "check_hypotheses", "scale_triple", "verify",
    "qualifying_triples", "search",
]

CODE, BIT = "code", "bit"
CONFIRMED = "CounterexampleConfirmed"
NOT_COUNTEREXAMPLE = "NotACounterexample"
INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class SaturationTriple:
    u: Permutation
    v: Permutation
    w: Permutation
    family: str = "Custom"
    i: Optional[int] = None
    j: Optional[int] = None
    n: Optional[int] = None
    k: Optional[int] = None


def _kirillov_problems(u: Permutation, i: int, j: int) -> list[str]:
    problems = []
    if not 1 <= i < j:
        return [f"need 1 <= i < j, got ({i}, {j})"]
    if j - i < 2:
        problems.append(f"j - i = {j - i} < 2")
    if is_cover(u, apply_transposition(u, i, j)) is None:
        problems.append(f"u t_{i}{j} does not cover u")
    if not u(i) < u(j) - 1:
        problems.append(f"u(i) = {u(i)} is not < u(j) - 1 = {u(j) - 1}")
    return problems


def _bit_problems(u: Permutation, i: int, j: int) -> list[str]:
    if not 1 <= i < j:
        return [f"need 1 <= i < j, got ({i}, {j})"]
    problems = []
    d = max_descent(u)
    if d == 0:
        problems.append("u has no descent")
    elif not i < d < j:
        problems.append(f"need i < d < j with maximal descent d = {d}")
    if is_cover(u, apply_transposition(u, i, j)) is None:
        problems.append(f"u t_{i}{j} does not cover u")
    return problems


def kirillov_triple(u: Permutation, i: int, j: int) -> SaturationTriple:
    """(u, s_i, u t_ij) for the code-scaling family."""
    problems = _kirillov_problems(u, i, j)
    if problems:
        raise HypothesisViolated("; ".join(problems))
    return SaturationTriple(u, simple_transposition(i), apply_transposition(u, i, j),
                            family="KirillovCover", i=i, j=j)


def bit_triple(u: Permutation, i: int, j: int) -> SaturationTriple:
    """(u, s_i, u t_ij) for the bit-scaling family, with k = max descent."""
    problems = _bit_problems(u, i, j)
    if problems:
        raise HypothesisViolated("; ".join(problems))
    return SaturationTriple(u, simple_transposition(i), apply_transposition(u, i, j),
                            family="BitCover", i=i, j=j, k=max_descent(u))


def _corollary_u(n: int) -> Permutation:
    if n < 4:
        raise ValueError("the corollary families start at n = 4")
    return from_word(list(range(2, n - 1)) + [1, n, n - 1])


def corollary_code_family(n: int) -> SaturationTriple:
    """u = (2, 3, ..., n-2, 1, n, n-1), v = s_{n-3}, w = u t_{n-3, n-1}."""
    t = kirillov_triple(_corollary_u(n), n - 3, n - 1)
    return SaturationTriple(t.u, t.v, t.w, family="KirillovSeries", i=t.i, j=t.j, n=n)


def corollary_bit_family(n: int) -> SaturationTriple:
    """u = (2, 3, ..., n-2, 1, n, n-1), v = s_{n-3}, w = u t_{n-3, n}."""
    t = bit_triple(_corollary_u(n), n - 3, n)
    return SaturationTriple(t.u, t.v, t.w, family="BitSeries", i=t.i, j=t.j, n=n, k=t.k)


def check_hypotheses(t: SaturationTriple) -> list[str]:
    """Re-validate a triple against the hypotheses of its family."""
    if t.family == "Custom":
        return []
    problems = (_kirillov_problems if t.family.startswith("Kirillov") else _bit_problems)(
        t.u, t.i, t.j)
    if t.v != simple_transposition(t.i):
        problems.append("v is not s_i")
    if t.w != apply_transposition(t.u, t.i, t.j):
        problems.append("w is not u t_ij")
    return problems


def scale_triple(t: SaturationTriple, scaling: str, N: int) -> tuple:
    if scaling == CODE:
        return tuple(code_scale(x, N) for x in (t.u, t.v, t.w))
    if scaling == BIT:
        k = t.k if t.k is not None else max(max_descent(x) for x in (t.u, t.v, t.w))
        return tuple(bit_scale(x, N, k) for x in (t.u, t.v, t.w))
    raise ValueError(f"unknown scaling {scaling!r}")


@dataclass
class ScaledResult:
    N: int
    u: Permutation
    v: Permutation
    w: Permutation
    certificate: ZeroCertificate
    exact: Optional[int] = None  # None when beyond caps or not requested

    def to_json(self) -> dict:
        out = {"N": self.N, "u": list(self.u.word), "v": list(self.v.word),
               "w": list(self.w.word), "certificate": self.certificate.to_json()}
        if self.exact is not None:
            out["exact"] = str(self.exact)
        return out


@dataclass
class SaturationReport:
    triple: SaturationTriple
    scaling: str
    base: int
    base_methods: dict = field(default_factory=dict)
    scaled: list = field(default_factory=list)
    verdict: str = INCONCLUSIVE

    @property
    def exact_checked(self) -> bool:
        return all(r.exact is not None for r in self.scaled)

    def to_json(self) -> dict:
        t = self.triple
        return {
            "family": t.family,
            "u": list(t.u.word), "v": list(t.v.word), "w": list(t.w.word),
            "params": {key: getattr(t, key) for key in ("i", "j", "n", "k")
                       if getattr(t, key) is not None},
            "scaling": self.scaling,
            "base": {"value": str(self.base),
                     "methods": {m: str(x) for m, x in self.base_methods.items()}},
            "scaled": [r.to_json() for r in self.scaled],
            "verdict": self.verdict,
        }


def _exact(u, v, w) -> Optional[int]:
    try:
        return coeff(u, v, w, method="expand")
    except LimitError:
        return None


def verify(t: SaturationTriple, scaling: str, N_list: Iterable[int],
           allow_exact: bool = True) -> SaturationReport:
    """Base coefficient plus a vanishing certificate for each scaled triple.

    Any disagreement between two routes to the same number raises
    InvariantFailure.
    """
    methods = {}
    if simple_index(t.v) is not None or simple_index(t.u) is not None:
        methods["monk"] = coeff(t.u, t.v, t.w, method="monk")
    if allow_exact or not methods:
        value = _exact(t.u, t.v, t.w)
        if value is not None:
            methods["expand"] = value
    if not methods:
        raise LimitError(f"cannot compute the base coefficient of {t}")
    if len(set(methods.values())) != 1:
        raise InvariantFailure(f"base coefficient methods disagree: {methods}")
    base = next(iter(methods.values()))

    report = SaturationReport(t, scaling, base, methods)
    for N in N_list:
        su, sv, sw = scale_triple(t, scaling, N)
        cert = certify_zero(su, sv, sw)
        exact = _exact(su, sv, sw) if allow_exact else None
        if exact is not None:
            if cert.is_zero and exact != 0:
                raise InvariantFailure(f"{cert.kind} certificate contradicts c = {exact}")
            if not cert.is_zero:
                cert = ZeroCertificate("exact_zero" if exact == 0 else "nonzero",
                                       coefficient=exact, witness=cert.witness)
        report.scaled.append(ScaledResult(N, su, sv, sw, cert, exact))

    if base <= 0 or any(r.certificate.kind == "nonzero" for r in report.scaled):
        report.verdict = NOT_COUNTEREXAMPLE
    elif all(r.certificate.is_zero for r in report.scaled):
        report.verdict = CONFIRMED
    else:
        report.verdict = INCONCLUSIVE
    return report


def qualifying_triples(n: int, scaling: str) -> list[SaturationTriple]:
    """Every (u, i, j) in S_n meeting the hypotheses for ``scaling``."""
    make = kirillov_triple if scaling == CODE else bit_triple
    check = _kirillov_problems if scaling == CODE else _bit_problems
    out = []
    for u in all_permutations(n):
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                if not check(u, i, j):
                    out.append(make(u, i, j))
    return out


def default_threads() -> int:
    return int(os.environ.get("SCHUBSAT_THREADS", "1"))


def search(n: int, scaling: str, N_list: Iterable[int], allow_exact: bool = True,
           threads: Optional[int] = None) -> list[SaturationReport]:
    """Verify every qualifying triple of S_n; output sorted by (u, i, j)."""
    N_list = list(N_list)
    triples = qualifying_triples(n, scaling)
    threads = threads or default_threads()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(lambda t: verify(t, scaling, N_list, allow_exact), triples))
    else:
        reports = [verify(t, scaling, N_list, allow_exact) for t in triples]
    reports.sort(key=lambda r: (r.triple.u, r.triple.i, r.triple.j))
    return reports
