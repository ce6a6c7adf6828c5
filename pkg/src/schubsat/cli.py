"""Command-line interface.

Exit status: 0 success, 1 usage or parse error, 2 cap or budget exceeded,
3 internal invariant failure.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from typing import Optional, Sequence

from . import limits, satlab
from .errors import InternalError, LimitError, SchubsatError
from .perm import (Permutation, code, code_inverse, descents,
                   format_permutation, length, parse_code, parse_permutation,
                   rothe)
from .scaling import (bit_scale, bit_scale_via_seq, code_scale, seq_encode,
                      shaded_columns)
from .schubert import coeff, product_expansion, schubert_poly
from .vanishing import certify_zero, dimension_ok, tableaux_exists

EXIT_OK, EXIT_USAGE, EXIT_LIMIT, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _perm_arg(text: str) -> Permutation:
    try:
        return parse_permutation(text)
    except (SchubsatError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _fmt(w: Permutation) -> str:
    return format_permutation(w)


def _fmt_code(c) -> str:
    return "(" + ",".join(map(str, c)) + ")"


def render_rothe(w: Permutation, k: Optional[int] = None) -> str:
    """ASCII picture: dots, boxes, and boxes of shaded columns if k is given."""
    n = max(w.size, 1)
    boxes = rothe(w)
    shaded = shaded_columns(w, k).J if k is not None else frozenset()
    lines = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if w(i) == j:
                row.append("●")
            elif (i, j) in boxes:
                row.append("■" if j in shaded else "□")
            else:
                row.append("·")
        lines.append(" ".join(row))
    return "\n".join(lines)


def _report_text(r: satlab.SaturationReport) -> str:
    t = r.triple
    head = (f"{t.family}: u={_fmt(t.u)} v={_fmt(t.v)} w={_fmt(t.w)} "
            f"scaling={r.scaling} base={r.base} "
            f"({', '.join(f'{m}={x}' for m, x in r.base_methods.items())})")
    lines = [head]
    for s in r.scaled:
        exact = "-" if s.exact is None else str(s.exact)
        lines.append(f"  N={s.N}: u={_fmt(s.u)} v={_fmt(s.v)} w={_fmt(s.w)} "
                     f"certificate={s.certificate.kind} exact={exact}")
    lines.append(f"  verdict: {r.verdict}")
    return "\n".join(lines)


# -- command handlers -------------------------------------------------------
# each returns (json_document, text)

def cmd_perm(args):
    op = args.op
    if op == "inverse-code":
        w = code_inverse(parse_code(args.arg))
        return {"permutation": list(w.word)}, _fmt(w)
    w = parse_permutation(args.arg)
    if op == "code":
        c = code(w)
        return {"code": list(c)}, _fmt_code(c)
    if op == "length":
        n = length(w)
        return {"length": n}, str(n)
    if op == "descents":
        d = sorted(descents(w))
        return {"descents": d}, "{" + ",".join(map(str, d)) + "}"
    if op == "rothe":
        boxes = sorted(rothe(w))
        doc = {"permutation": list(w.word), "boxes": [list(b) for b in boxes]}
        if args.k is not None:
            doc["shaded_columns"] = sorted(shaded_columns(w, args.k).J)
        return doc, render_rothe(w, args.k)
    raise UsageError(f"unknown perm operation {op!r}")


def cmd_schubert(args):
    if args.op == "poly":
        f = schubert_poly(args.w)
        return {"w": list(args.w.word), "polynomial": f.to_json()}, str(f)
    if args.op == "product":
        ex = product_expansion(args.u, args.v)
        return {"u": list(args.u.word), "v": list(args.v.word),
                "expansion": ex.to_json()}, str(ex)
    if args.op == "coeff":
        c = coeff(args.u, args.v, args.w, method=args.method)
        return {"coefficient": str(c), "method": args.method}, str(c)
    raise UsageError(f"unknown schubert operation {args.op!r}")


def cmd_scale(args):
    if args.op == "code":
        out = code_scale(args.w, args.N)
        return {"permutation": list(out.word)}, _fmt(out)
    if args.op == "bit":
        out = bit_scale(args.w, args.N, args.k)
        return {"permutation": list(out.word)}, _fmt(out)
    if args.op == "seq":
        s = seq_encode(args.w, args.boundaries)
        doc = {"seq": str(s), "boundaries": list(s.boundaries)}
        text = f"{s} boundaries={{{','.join(map(str, s.boundaries))}}}"
        if args.N is not None:
            scaled = bit_scale_via_seq(args.w, args.N, args.boundaries)
            s2 = seq_encode(scaled, s.boundaries)
            doc.update({"scaled_seq": str(s2), "scaled": list(scaled.word)})
            text += f"\n{s2} -> {_fmt(scaled)}"
        return doc, text
    raise UsageError(f"unknown scale operation {args.op!r}")


def cmd_vanish(args):
    u, v, w = args.u, args.v, args.w
    if args.op == "dim":
        ok = dimension_ok(u, v, w)
        return {"dimension_ok": ok, "lengths": [length(u), length(v), length(w)]}, \
            f"{str(ok).lower()} ({length(u)}+{length(v)} vs {length(w)})"
    if args.op == "tableau":
        T = tableaux_exists(u, v, w)
        if T is None:
            return {"result": "empty"}, "empty"
        cells = " ".join(f"({r},{c})={m}" for (r, c), m in sorted(T.filling.items()))
        return {"result": "exists", "witness": T.to_json()}, f"exists: {cells}"
    if args.op == "certify":
        cert = certify_zero(u, v, w, allow_exact=args.exact)
        text = cert.kind
        if cert.coefficient is not None:
            text += f" {cert.coefficient}"
        return cert.to_json(), text
    raise UsageError(f"unknown vanish operation {args.op!r}")


def _family(kind: str, n: int):
    return satlab.corollary_code_family(n) if kind == "code" else satlab.corollary_bit_family(n)


def cmd_saturate(args):
    if args.op == "family":
        t = _family(args.kind, args.n)
        doc = {"family": t.family, "u": list(t.u.word), "v": list(t.v.word),
               "w": list(t.w.word), "i": t.i, "j": t.j}
        return doc, f"{t.family}: u={_fmt(t.u)} v={_fmt(t.v)} w={_fmt(t.w)} (i={t.i}, j={t.j})"
    if args.op == "verify":
        if args.family is not None:
            t = _family(args.scaling, args.family)
        elif args.u is None:
            raise UsageError("verify needs --u or --family")
        elif args.i is not None and args.j is not None:
            make = satlab.kirillov_triple if args.scaling == "code" else satlab.bit_triple
            t = make(args.u, args.i, args.j)
        elif args.v is not None and args.w is not None:
            t = satlab.SaturationTriple(args.u, args.v, args.w)
        else:
            raise UsageError("verify needs --i/--j, --v/--w or --family")
        r = satlab.verify(t, args.scaling, args.N, allow_exact=args.exact)
        return r.to_json(), _report_text(r)
    if args.op == "search":
        reports = satlab.search(args.n, args.scaling, args.N, allow_exact=args.exact,
                                threads=args.threads)
        doc = {"n": args.n, "scaling": args.scaling, "N": args.N,
               "reports": [r.to_json() for r in reports]}
        text = "\n".join(_report_text(r) for r in reports) or "no qualifying triples"
        return doc, text
    raise UsageError(f"unknown saturate operation {args.op!r}")


def cmd_limits(args):
    d = limits.current().as_dict()
    d["threads"] = satlab.default_threads()
    return d, "\n".join(f"{k} = {v}" for k, v in d.items())


def cmd_selftest(args):
    from .selftest import run_all

    results = run_all()
    lines = [r.line() for r in results]
    doc = {"criteria": [dataclasses.asdict(r) for r in results],
           "passed": all(r.passed for r in results)}
    return doc, "\n".join(lines)


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit one JSON document")

    p = _Parser(prog="schubsat", parents=[common],
                description="Schubert structure constants and saturation counterexamples")
    p.add_argument("--threads", type=int, default=None)
    for name, field in [("--enum-cap", "enum_max_n"), ("--schubert-cap", "schubert_max_n"),
                        ("--max-degree", "product_max_degree"), ("--max-var", "product_max_var"),
                        ("--max-terms", "max_terms"), ("--node-budget", "node_budget")]:
        p.add_argument(name, dest=field, type=int, default=None,
                       help=f"override the {field} cap")
    sub = p.add_subparsers(dest="command", required=True)

    perm = sub.add_parser("perm", parents=[common], help="permutation data")
    perm.add_argument("op", choices=["code", "inverse-code", "length", "descents", "rothe"])
    perm.add_argument("arg", help="permutation (2143, 2,1,4,3, c:1,0,1) or code")
    perm.add_argument("--k", type=int, default=None, help="shade columns below row k (rothe)")
    perm.set_defaults(handler=cmd_perm)

    sch = sub.add_parser("schubert", parents=[common], help="Schubert polynomials")
    ssub = sch.add_subparsers(dest="op", required=True)
    x = ssub.add_parser("poly", parents=[common])
    x.add_argument("w", type=_perm_arg)
    x = ssub.add_parser("product", parents=[common])
    x.add_argument("u", type=_perm_arg)
    x.add_argument("v", type=_perm_arg)
    x = ssub.add_parser("coeff", parents=[common])
    for a in "uvw":
        x.add_argument(a, type=_perm_arg)
    x.add_argument("--method", choices=["auto", "monk", "expand"], default="auto")
    sch.set_defaults(handler=cmd_schubert)

    sc = sub.add_parser("scale", parents=[common], help="code and bit scaling")
    scsub = sc.add_subparsers(dest="op", required=True)
    x = scsub.add_parser("code", parents=[common])
    x.add_argument("w", type=_perm_arg)
    x.add_argument("N", type=int)
    x = scsub.add_parser("bit", parents=[common])
    x.add_argument("w", type=_perm_arg)
    x.add_argument("N", type=int)
    x.add_argument("--k", type=int, default=None)
    x = scsub.add_parser("seq", parents=[common])
    x.add_argument("w", type=_perm_arg)
    x.add_argument("--boundaries", type=_int_list, default=None)
    x.add_argument("--N", type=int, default=None, help="also bit-scale through the sequence")
    sc.set_defaults(handler=cmd_scale)

    va = sub.add_parser("vanish", parents=[common], help="vanishing certificates")
    va.add_argument("op", choices=["dim", "tableau", "certify"])
    for a in "uvw":
        va.add_argument(a, type=_perm_arg)
    va.add_argument("--exact", action="store_true")
    va.set_defaults(handler=cmd_vanish)

    sa = sub.add_parser("saturate", parents=[common], help="saturation counterexamples")
    sasub = sa.add_subparsers(dest="op", required=True)
    x = sasub.add_parser("family", parents=[common])
    x.add_argument("kind", choices=["code", "bit"])
    x.add_argument("--n", type=int, required=True)
    x = sasub.add_parser("verify", parents=[common])
    x.add_argument("--u", type=_perm_arg)
    x.add_argument("--i", type=int)
    x.add_argument("--j", type=int)
    x.add_argument("--v", type=_perm_arg)
    x.add_argument("--w", type=_perm_arg)
    x.add_argument("--family", type=int, metavar="n", help="use the staircase series triple of size n")
    x.add_argument("--scaling", choices=["code", "bit"], required=True)
    x.add_argument("--N", type=_int_list, default=[2])
    x.add_argument("--exact", action="store_true")
    x = sasub.add_parser("search", parents=[common])
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--scaling", choices=["code", "bit"], required=True)
    x.add_argument("--N", type=_int_list, default=[2])
    x.add_argument("--exact", action="store_true")
    sa.set_defaults(handler=cmd_saturate)

    li = sub.add_parser("limits", parents=[common], help="print resource caps")
    li.set_defaults(handler=cmd_limits)
    st = sub.add_parser("selftest", parents=[common], help="run the acceptance checks")
    st.set_defaults(handler=cmd_selftest)
    return p


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    argv = list(sys.argv[1:] if argv is None else argv)
    as_json = "--json" in argv

    def fail(status: int, code: str, message: str) -> int:
        if as_json:
            err.write(json.dumps({"error": code, "message": message}) + "\n")
        else:
            err.write(f"error: {message}\n")
        return status

    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return fail(EXIT_USAGE, "usage", str(exc))
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    caps = {f.name: getattr(args, f.name) for f in dataclasses.fields(limits.Limits)
            if getattr(args, f.name, None) is not None}
    try:
        with limits.override(**caps):
            doc, text = args.handler(args)
    except InternalError as exc:
        return fail(EXIT_INTERNAL, exc.code, str(exc))
    except LimitError as exc:
        return fail(EXIT_LIMIT, exc.code, str(exc))
    except UsageError as exc:
        return fail(EXIT_USAGE, "usage", str(exc))
    except (SchubsatError, ValueError) as exc:
        return fail(EXIT_USAGE, getattr(exc, "code", "invalid_input"), str(exc))

    if as_json:
        out.write(json.dumps(doc) + "\n")
    else:
        out.write(text + "\n")
    if args.command == "selftest" and not doc["passed"]:
        return EXIT_INTERNAL
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
