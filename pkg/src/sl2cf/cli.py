"""Command-line front end: tables, evaluation, products, 6j-symbols, conversion and verification."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import central as cf
from .algebra import CentralExpansion, format_rational, parse_poly, parse_rational, render_expansion, render_poly
from .combinatorics import triple, triples_up_to
from .errors import DomainError, ResourceError
from .products import poly_to_central, product_central
from .recoupling import SixJKey, sixj_general, sixj_primed, sixj_special, special_key
from .tensor import network
from .verify import EXTRA_SUITES, SUITES, run_suite

SCHEMA = "sl2cf/1"
FORMATS = ("text", "json", "csv", "latex")
DEFAULT_TABLE_DELTA = 4
DEFAULT_VERIFY_DELTA = 3
DELTA_CAP = 12

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _parser_error(message: str):
    raise UsageError(message)


def parse_triple(text: str) -> tuple[int, int, int]:
    """``"112"`` or ``"1,1,2"``."""
    parts = text.split(",") if "," in text else list(text)
    try:
        vals = tuple(int(p) for p in parts)
    except ValueError:
        raise UsageError(f"cannot read a triple from {text!r}") from None
    if len(vals) != 3:
        raise UsageError(f"a triple needs three labels, got {text!r}")
    return triple(vals).as_tuple()


def _json(command: str, result, **extra) -> str:
    doc = {"schema": SCHEMA, "command": command, **extra, "result": result}
    return json.dumps(doc, indent=2, ensure_ascii=False)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _latex_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return r"%s\tfrac{%d}{%d}" % (sign, abs(q.numerator), q.denominator)


def _label(t) -> str:
    return "".join(str(v) for v in t) if max(t) < 10 else ",".join(str(v) for v in t)


# table

def orbit_representative(t) -> tuple[int, int, int]:
    lo, mid, hi = sorted(t)
    return (mid, lo, hi)


def table_rows(max_delta: int, orbits: bool) -> list[tuple[tuple[int, int, int], tuple[int, int, int]]]:
    """``(triple, representative)`` pairs ordered by δ, then lexicographically."""
    rows = []
    for t in triples_up_to(max_delta):
        t = t.as_tuple()
        rep = orbit_representative(t)
        if orbits or t == rep:
            rows.append((t, rep))
    rows.sort(key=lambda r: (sum(r[0]) // 2, r[0]))
    return rows


def cmd_table(args) -> str:
    rows = table_rows(args.max_delta, args.orbits)
    polys = [(t, rep, cf.central_function(t)) for t, rep in rows]
    if args.format == "json":
        return _json("table", [{"triple": list(t), "delta": sum(t) // 2, "representative": list(rep),
                                "text": render_poly(p), "terms": p.to_json()} for t, rep, p in polys],
                     max_delta=args.max_delta)
    if args.format == "csv":
        return _csv(["a", "b", "c", "delta", "representative", "polynomial"],
                    [[*t, sum(t) // 2, _label(rep), render_poly(p)] for t, rep, p in polys])
    if args.format == "latex":
        lines = [r"\begin{tabular}{ll}", r"\hline", r"$(a,b,c)$ & $\chi_{a,b,c}$ \\ \hline"]
        lines += [r"$(%d,%d,%d)$ & $%s$ \\" % (*t, render_poly(p, "latex")) for t, _, p in polys]
        lines += [r"\hline", r"\end{tabular}"]
        return "\n".join(lines)
    return "\n".join(f"χ{_label(t)} = {render_poly(p)}" for t, _, p in polys)


# scalar results

def _scalar(command: str, value: Fraction, fmt: str, **extra) -> str:
    if fmt == "json":
        return _json(command, format_rational(value), **extra)
    if fmt == "csv":
        return _csv(["value"], [[format_rational(value)]])
    if fmt == "latex":
        return _latex_rational(value)
    return format_rational(value)


def cmd_eval(args) -> str:
    t = triple((args.a, args.b, args.c)).as_tuple()
    try:
        point = [parse_rational(v) for v in (args.x, args.y, args.z)]
    except DomainError:
        raise UsageError("x, y, z must be rationals like 3 or -2/5") from None
    value = cf.central_function(t).eval(*point)
    return _scalar("eval", value, args.format, triple=list(t), point=[format_rational(v) for v in point])


def cmd_sixj(args) -> str:
    if args.kind == "general":
        key = SixJKey(*args.labels)
        value = sixj_primed(key) if args.primed else sixj_general(key)
        return _scalar("sixj", value, args.format, key=list(key.as_tuple()), primed=args.primed)
    a, b, c, cs, s = args.labels
    key = special_key(a, b, c, cs, s)
    return _scalar("sixj", sixj_special(a, b, c, cs, s), args.format, key=list(key.as_tuple()), primed=False)


# expansions

def _expansion(command: str, ce: CentralExpansion, fmt: str, **extra) -> str:
    if fmt == "json":
        return _json(command, {"text": render_expansion(ce), "terms": ce.to_json()}, **extra)
    if fmt == "csv":
        return _csv(["a", "b", "c", "coefficient"], [[*t, format_rational(q)] for t, q in ce.sorted_terms()])
    if fmt == "latex":
        return render_expansion(ce, "latex")
    return render_expansion(ce)


def cmd_product(args) -> str:
    t1, t2 = parse_triple(args.t1), parse_triple(args.t2)
    return _expansion("product", product_central(t1, t2), args.format, factors=[list(t1), list(t2)])


def cmd_convert(args) -> str:
    try:
        p = parse_poly(args.polynomial)
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    return _expansion("convert", poly_to_central(p), args.format, polynomial=render_poly(p))


# verification

def cmd_verify(args) -> tuple[str, int]:
    entries = run_suite(args.suite, args.max_delta, args.seed)
    failed = sum(e.status == "fail" for e in entries)
    code = EXIT_FAIL if failed else EXIT_OK
    if args.format == "json":
        out = _json("verify", [e.to_json() for e in entries], suite=args.suite, max_delta=args.max_delta,
                    seed=args.seed, passed=not failed)
    elif args.format == "csv":
        out = _csv(["check", "parameters", "status", "details"],
                   [[e.check, json.dumps(e.parameters, sort_keys=True), e.status, e.details] for e in entries])
    elif args.format == "latex":
        lines = [r"\begin{tabular}{lll}", r"\hline", r"check & status & details \\ \hline"]
        lines += [r"\texttt{%s} & %s & %s \\" % (e.check.replace("_", r"\_"), e.status, e.details) for e in entries]
        lines += [r"\hline", r"\end{tabular}"]
        out = "\n".join(lines)
    else:
        out = "\n".join(f"{e.status.upper():4}  {e.check}  {e.details}" for e in entries)
        out += f"\n{len(entries) - failed}/{len(entries)} checks passed"
    return out, code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS,
                        help="output format (default: text)")
    common.add_argument("--max-delta", type=int, default=argparse.SUPPRESS, metavar="N",
                        help=f"largest degree δ covered by table and verify (cap {DELTA_CAP})")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, metavar="N",
                        help="seed for random oracle points (default: 0)")
    common.add_argument("--cap-strands", type=int, default=argparse.SUPPRESS, metavar="N",
                        help=f"largest strand count a dense network may carry (default: {network.MAX_STRANDS})")

    p = argparse.ArgumentParser(prog="sl2cf", parents=[common],
                                description="Exact central functions of the rank-two SL(2,C) character variety.")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", parents=[common], help="central functions up to a degree")
    t.add_argument("--orbits", action="store_true", help="list every member of each symmetry orbit")
    t.set_defaults(func=cmd_table)

    e = sub.add_parser("eval", parents=[common], help="evaluate χ_{a,b,c} at rational (x, y, z)")
    for name in "abc":
        e.add_argument(name, type=int)
    for name in "xyz":
        e.add_argument(name)
    e.set_defaults(func=cmd_eval)

    pr = sub.add_parser("product", parents=[common], help="expand χ_{t1}·χ_{t2} in central functions")
    pr.add_argument("t1", help='triple such as "101" or "1,0,1"')
    pr.add_argument("t2")
    pr.set_defaults(func=cmd_product)

    sj = sub.add_parser("sixj", parents=[common], help="6j-symbols")
    sjsub = sj.add_subparsers(dest="kind", required=True)
    g = sjsub.add_parser("general", parents=[common], help="{a b c; d e f} by tree extraction")
    g.add_argument("labels", type=int, nargs=6, metavar="L")
    g.add_argument("--primed", action="store_true", help="H-to-fused coefficient instead of tree-to-tree")
    g.set_defaults(func=cmd_sixj)
    sp = sjsub.add_parser("special", parents=[common], help="closed form {1 a b; c+cs c a+as}")
    sp.add_argument("labels", type=int, nargs=5, metavar="L", help="a b c cs as, shifts ±1")
    sp.set_defaults(func=cmd_sixj)

    c = sub.add_parser("convert", parents=[common], help="rewrite a polynomial in x, y, z in central functions")
    c.add_argument("polynomial", help='e.g. "x*y - 1/2*z" or "x^2"')
    c.set_defaults(func=cmd_convert)

    v = sub.add_parser("verify", parents=[common], help="run invariant suites and report")
    v.add_argument("suite", choices=(*SUITES, *EXTRA_SUITES, "all"))
    v.set_defaults(func=cmd_verify)

    for sp_ in (p, t, e, pr, sj, g, sp, c, v):
        sp_.error = _parser_error
    return p


def _settle(args) -> None:
    args.format = getattr(args, "format", "text")
    args.seed = getattr(args, "seed", 0)
    default = DEFAULT_VERIFY_DELTA if args.command == "verify" else DEFAULT_TABLE_DELTA
    args.max_delta = getattr(args, "max_delta", default)
    if args.max_delta < 0:
        raise UsageError("--max-delta must be nonnegative")
    if args.max_delta > DELTA_CAP:
        raise ResourceError(f"--max-delta {args.max_delta} exceeds the cap of {DELTA_CAP}")
    cap = getattr(args, "cap_strands", None)
    if cap is not None:
        if cap < 1:
            raise UsageError("--cap-strands must be positive")
        network.set_strand_cap(cap)


def run(argv=None) -> tuple[str, str, int]:
    """Returns ``(stdout, stderr, exit code)``; nothing is printed."""
    previous = network.MAX_STRANDS
    try:
        args = build_parser().parse_args(argv)
        _settle(args)
        result = args.func(args)
        out, code = result if isinstance(result, tuple) else (result, EXIT_OK)
        return out + "\n", "", code
    except UsageError as exc:
        return "", f"sl2cf: usage error: {exc}\n", EXIT_USAGE
    except SystemExit as exc:
        # --help
        return "", "", EXIT_OK if not exc.code else EXIT_USAGE
    except DomainError as exc:
        return "", f"sl2cf: {exc}\n", EXIT_USAGE
    except ResourceError as exc:
        return "", f"sl2cf: resource cap: {exc}\n", EXIT_RESOURCE
    finally:
        network.set_strand_cap(previous)


def main(argv=None) -> int:
    out, err, code = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
