"""The acceptance suite as plain functions, shared by the CLI and pytest.

Each ``criterion_*`` function returns a list of failure messages; an empty
list means the criterion holds.  ``run_all`` times them against their
runtime bounds.
"""
from __future__ import annotations

import io
import json
import random
import time
from dataclasses import dataclass
from typing import Callable, Optional

from . import satlab
from .errors import LimitError
from .perm import (all_permutations, code, code_inverse, descents, from_word,
                   length, parse_permutation, simple_transposition)
from .scaling import (bit_scale, bit_scale_via_seq, code_scale, seq_encode,
                      shaded_columns)
from .schubert import (coeff, expand_in_schubert_basis, monk, product_expansion,
                       schubert_poly)
from .vanishing import certify_zero, tableau_violations, tableaux_exists


def P(text: str):
    return parse_permutation(text)


def _expect(failures: list, label: str, got, want) -> None:
    if got != want:
        failures.append(f"{label}: got {got!r}, want {want!r}")


def criterion_code_example() -> list[str]:
    """Code scaling of (2143, 2134, 4123) by 2."""
    f: list[str] = []
    u, v, w = P("2143"), P("2134"), P("4123")
    _expect(f, "monk", coeff(u, v, w, method="monk"), 1)
    _expect(f, "expand", coeff(u, v, w, method="expand"), 1)
    su, sv, sw = (code_scale(x, 2) for x in (u, v, w))
    _expect(f, "2*u", su, P("31524"))
    _expect(f, "2*v", sv, P("31245"))
    _expect(f, "2*w", sw, P("7123456"))
    _expect(f, "tableaux", tableaux_exists(su, sv, sw), None)
    _expect(f, "scaled expand", coeff(su, sv, sw, method="expand"), 0)
    return f


def criterion_bit_example() -> list[str]:
    """Bit scaling of (2143, 2134, 3142) by 2."""
    f: list[str] = []
    t = satlab.corollary_bit_family(4)
    _expect(f, "triple", (t.u, t.v, t.w), (P("2143"), P("2134"), P("3142")))
    _expect(f, "base", coeff(t.u, t.v, t.w), 1)
    _expect(f, "base expand", coeff(t.u, t.v, t.w, method="expand"), 1)
    scaled = satlab.scale_triple(t, satlab.BIT, 2)
    _expect(f, "2(x) triple", scaled, (P("21534"), P("21345"), P("41523")))
    _expect(f, "lengths", tuple(length(x) for x in scaled), (3, 1, 5))
    _expect(f, "certificate", certify_zero(*scaled).kind, "dimension")
    _expect(f, "scaled expand", coeff(*scaled, method="expand"), 0)
    return f


def criterion_code_family() -> list[str]:
    f: list[str] = []
    need_exact = {(4, 2), (4, 3), (5, 2)}
    for n in (4, 5, 6):
        t = satlab.corollary_code_family(n)
        r = satlab.verify(t, satlab.CODE, [2, 3], allow_exact=True)
        _expect(f, f"n={n} verdict", r.verdict, satlab.CONFIRMED)
        _expect(f, f"n={n} base", r.base, 1)
        for s in r.scaled:
            if (n, s.N) in need_exact and s.exact != 0:
                f.append(f"n={n} N={s.N}: exact cross-check missing or nonzero ({s.exact})")
            if not s.certificate.is_zero:
                f.append(f"n={n} N={s.N}: certificate {s.certificate.kind}")
    return f


def criterion_bit_family() -> list[str]:
    f: list[str] = []
    for n in (4, 5, 6):
        t = satlab.corollary_bit_family(n)
        _expect(f, f"n={n} base", coeff(t.u, t.v, t.w), 1)
        for N in (2, 3, 4):
            su, sv, sw = satlab.scale_triple(t, satlab.BIT, N)
            _expect(f, f"n={n} N={N} certificate", certify_zero(su, sv, sw).kind, "dimension")
            _expect(f, f"n={n} N={N} length gap", length(sw) - length(su), N)
    return f


def criterion_worked_data() -> list[str]:
    f: list[str] = []
    w = P("72415836")
    _expect(f, "code", code(w), (6, 1, 2, 0, 1, 2))
    _expect(f, "length", length(w), 12)
    cw = code_scale(w, 2)
    _expect(f, "2*w", cw, from_word([13, 3, 6, 1, 5, 9, 2, 4, 7, 8, 10, 11, 12]))
    _expect(f, "Des(2*w)", descents(cw), frozenset({1, 3, 6}))
    _expect(f, "2(x)w", bit_scale(w, 2, 6), from_word([9, 2, 5, 1, 6, 10, 3, 4, 7, 8]))
    _expect(f, "J", shaded_columns(w, 6).J, frozenset({3, 6}))
    _expect(f, "seq(w)", str(seq_encode(w)), "21312302")
    _expect(f, "seq(2(x)w)", str(seq_encode(bit_scale(w, 2, 6), [1, 3, 6])), "2133123302")
    return f


def criterion_properties(seed: int = 20240611) -> list[str]:
    f: list[str] = []
    rng = random.Random(seed)
    s5 = list(all_permutations(5))
    s4 = list(all_permutations(4))

    for w in s5:
        if code_inverse(code(w)) != w:
            f.append(f"code roundtrip fails at {w}")

    cases = [(u, k) for u in s4 for k in (1, 2, 3)]
    cases += [(rng.choice(s5), rng.randint(1, 4)) for _ in range(100)]
    for u, k in cases:
        if dict(monk(u, k)) != dict(product_expansion(u, simple_transposition(k))):
            f.append(f"Monk differs from expansion at u={u}, k={k}")

    for w in s4:
        if dict(expand_in_schubert_basis(schubert_poly(w))) != {w: 1}:
            f.append(f"basis roundtrip fails at {w}")

    for _ in range(100):
        u, v = rng.choice(s4), rng.choice(s4)
        prod = schubert_poly(u) * schubert_poly(v)
        if not prod.is_homogeneous() or prod.degree() != length(u) + length(v):
            f.append(f"product of {u}, {v} is not homogeneous of the right degree")
        if any(c <= 0 for c in product_expansion(u, v).values()):
            f.append(f"product of {u}, {v} has a nonpositive coefficient")

    by_length: dict[int, list] = {}
    for w in s5:
        by_length.setdefault(length(w), []).append(w)
    for u in all_permutations(3):
        for v in all_permutations(3):
            for w in by_length.get(length(u) + length(v), []):
                T = tableaux_exists(u, v, w)
                c = coeff(u, v, w, method="expand")
                if T is None and c != 0:
                    f.append(f"empty tableaux but c = {c} at ({u}, {v}, {w})")
                if T is not None and tableau_violations(T, u, v, w):
                    f.append(f"invalid witness at ({u}, {v}, {w})")

    for w in s5:
        for N in (2, 3):
            cw = code_scale(w, N)
            if length(cw) != N * length(w) or descents(cw) != descents(w):
                f.append(f"code scaling {N}*{w} breaks length or descents")
            bw = bit_scale(w, N)
            if descents(bw) != descents(w):
                f.append(f"bit scaling {N}(x){w} breaks descents")
            if length(w) > 0 and bw != bit_scale_via_seq(w, N):
                f.append(f"bit and seq scaling disagree at {N}, {w}")
    return f


def criterion_search() -> list[str]:
    """Run the search through the CLI and re-check every report."""
    from .cli import run

    f: list[str] = []
    out, err = io.StringIO(), io.StringIO()
    status = run(["saturate", "search", "--n", "4", "--scaling", "code", "--N", "2,3",
                  "--json"], out=out, err=err)
    if status != 0:
        return [f"search exited with {status}: {err.getvalue().strip()}"]
    reports = json.loads(out.getvalue())["reports"]
    target = [r for r in reports if (r["u"], r["v"], r["w"]) ==
              ([2, 1, 4, 3], [2, 1], [4, 1, 2, 3])]
    if len(target) != 1:
        f.append("no report for (2143, 2134, 4123)")
    elif target[0]["verdict"] != satlab.CONFIRMED:
        f.append(f"(2143, 2134, 4123) verdict is {target[0]['verdict']}")
    for r in reports:
        t = satlab.kirillov_triple(from_word(r["u"]), r["params"]["i"], r["params"]["j"])
        if [list(t.v.word), list(t.w.word)] != [r["v"], r["w"]]:
            f.append(f"report {r['u']} does not match its hypotheses")
        problems = satlab.check_hypotheses(t)
        if problems:
            f.append(f"report {r['u']}: {problems}")
        methods = set(r["base"]["methods"].values())
        if methods != {r["base"]["value"]}:
            f.append(f"report {r['u']}: base methods disagree {r['base']}")
        for s in r["scaled"]:
            su, sv, sw = (from_word(s[x]) for x in "uvw")
            try:
                exact = coeff(su, sv, sw, method="expand")
            except LimitError:
                continue  # beyond the exact caps; certificate stands alone
            if "exact" in s and int(s["exact"]) != exact:
                f.append(f"report {r['u']} N={s['N']}: recorded exact {s['exact']} != {exact}")
            kind = s["certificate"]["kind"]
            if kind in ("dimension", "empty_tableaux", "exact_zero") and exact != 0:
                f.append(f"report {r['u']} N={s['N']}: {kind} certificate but c = {exact}")
    return f


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    seconds: float
    limit: Optional[float]
    failures: list

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        bound = f" (limit {self.limit:g}s)" if self.limit is not None else ""
        text = f"[{status}] criterion {self.number}: {self.name} {self.seconds:.2f}s{bound}"
        for msg in self.failures[:10]:
            text += f"\n    {msg}"
        return text


CRITERIA: list[tuple[int, str, Callable[[], list], Optional[float]]] = [
    (1, "code scaling example", criterion_code_example, 1.0),
    (2, "bit scaling example", criterion_bit_example, 1.0),
    (3, "code scaling family", criterion_code_family, 120.0),
    (4, "bit scaling family", criterion_bit_family, 30.0),
    (5, "worked data", criterion_worked_data, None),
    (6, "property suites", criterion_properties, 120.0),
    (7, "search spot-check", criterion_search, None),
]


def run_criterion(number: int) -> CriterionResult:
    num, name, fn, limit = next(c for c in CRITERIA if c[0] == number)
    start = time.perf_counter()
    try:
        failures = list(fn())
    except Exception as exc:  # a crash is a failure, reported not raised
        failures = [f"{type(exc).__name__}: {exc}"]
    seconds = time.perf_counter() - start
    if limit is not None and seconds > limit:
        failures.append(f"took {seconds:.2f}s, limit {limit:g}s")
    return CriterionResult(num, name, not failures, seconds, limit, failures)


def run_all() -> list[CriterionResult]:
    return [run_criterion(c[0]) for c in CRITERIA]
