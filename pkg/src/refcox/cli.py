"""Command-line interface: ``refcox <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 internal
invariant breach.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import cartan as _cartan
from . import classc as _classc
from . import poset as _poset
from . import towers as _towers
from . import verify as _verify
from .cartan import CartanAlgebra, CartanError
from .coxeter import (
    CoxeterError,
    coxeter_poly,
    ordinal_sum_poly,
    predicted_insertion,
    refined_pair_minor,
    refined_pair_recovery,
)
from .intpoly import IntPoly, parse_poly
from .polyspec import ConvergenceError, cyclotomic_profile, is_cyclotomic_type, mahler_measure, represent
from .poset import Poset, PosetError

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    pass


# -- input ----------------------------------------------------------------------


def _read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _unwrap(data):
    # accept the records this tool emits, which nest the object under a key
    if isinstance(data, dict) and "elements" not in data and "matrix" not in data:
        for key in ("poset", "algebra"):
            if isinstance(data.get(key), dict):
                return data[key]
    return data


def load_poset(path: str) -> Poset:
    data = _unwrap(_read_json(path))
    try:
        return Poset.from_dict(data)
    except PosetError as exc:
        raise InputError(f"{path}: {exc}") from None


def load_algebra(path: str):
    """Poset file or Cartan file, detected by its fields."""
    data = _unwrap(_read_json(path))
    try:
        if isinstance(data, dict) and "matrix" in data:
            return CartanAlgebra.from_dict(data)
        return Poset.from_dict(data)
    except (PosetError, CartanError) as exc:
        raise InputError(f"{path}: {exc}") from None


def load_poly(arg: str) -> IntPoly:
    text = arg
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = None
    if isinstance(data, dict) and "coeffs" in data:
        text = json.dumps(data["coeffs"])
    try:
        return parse_poly(text)
    except (ValueError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot parse polynomial {arg!r}: {exc}") from None


# -- output --------------------------------------------------------------------------


def _emit(args, record: dict, pretty_lines=None, csv_rows=None):
    if args.format == "json":
        print(json.dumps(record, indent=2))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if csv_rows is None:
            csv_rows = [["key", "value"]] + [[k, _flat(v)] for k, v in record.items()]
        w.writerows(csv_rows)
        sys.stdout.write(buf.getvalue())
    else:
        lines = pretty_lines if pretty_lines is not None else [f"{k}: {_flat(v)}" for k, v in record.items()]
        print("\n".join(lines))


def _flat(v):
    return json.dumps(v) if isinstance(v, (dict, list)) else v


def _pair_dict(pair) -> dict:
    return {"phi0": str(pair.phi0), "phi1": str(pair.phi1)}


# -- commands ------------------------------------------------------------------------------


def cmd_coxeter(args):
    phi = coxeter_poly(load_algebra(args.file))
    _emit(args, {"phi": str(phi), "coeffs": phi.to_list()}, [str(phi)])


def cmd_refined(args):
    S = load_poset(args.file)
    a, b = refined_pair_minor(S), refined_pair_recovery(S)
    rec = {
        "phi": str(coxeter_poly(S)),
        "phi0": str(a.phi0),
        "phi1": str(a.phi1),
        "minor": _pair_dict(a),
        "recovery": _pair_dict(b),
        "agree": a == b,
    }
    _emit(args, rec)
    return EXIT_OK if a == b else EXIT_INTERNAL


def cmd_insert(args):
    alg = load_algebra(args.algebra)
    if isinstance(alg, Poset):
        alg = _cartan.from_poset(alg)
    S = load_poset(args.poset)
    new = _cartan.insert(alg, args.at, S)
    direct = coxeter_poly(new)
    pred = predicted_insertion(coxeter_poly(alg), coxeter_poly(_cartan.remove(alg, args.at)), refined_pair_minor(S))
    rec = {"algebra": new.to_dict(), "phi": str(direct), "predicted": str(pred), "agree": pred == direct}
    _emit(args, rec)
    return EXIT_OK if pred == direct else EXIT_INTERNAL


def cmd_ordinal_sum(args):
    parts = [load_poset(p) for p in args.posets]
    direct = coxeter_poly(_poset.ordinal_sum(parts))
    formula = ordinal_sum_poly([refined_pair_minor(p) for p in parts])
    _emit(args, {"direct": str(direct), "formula": str(formula), "agree": direct == formula})
    return EXIT_OK if direct == formula else EXIT_INTERNAL


def cmd_is_cyclotomic(args):
    p = load_poly(args.poly)
    prof = cyclotomic_profile(p)
    rec = {"poly": str(p), "cyclotomic": p.is_monic() and is_cyclotomic_type(p), **prof.to_dict()}
    rec["remainder"] = str(prof.remainder)
    _emit(args, rec)


def cmd_mahler(args):
    p = load_poly(args.poly)
    res = mahler_measure(p, args.tol)
    _emit(args, {"poly": str(p), **res.to_dict()})


def cmd_represent(args):
    p = load_poly(args.poly)
    q = represent(p, args.degree)
    _emit(args, {"poly": str(p), "q": q.to_text("y"), "coeffs": q.to_list()}, [q.to_text("y")])


def cmd_atilde(args):
    try:
        runs = [int(r) for r in args.runs.split(",")]
    except ValueError:
        raise InputError(f"--runs must be comma-separated integers, got {args.runs!r}") from None
    S = _poset.a_tilde(runs)
    pair = refined_pair_minor(S)
    pq = _poset.is_a_tilde(S)
    rec = {"poset": S.to_dict(), "p": pq[0], "q": pq[1], "phi": str(coxeter_poly(S)), **_pair_dict(pair)}
    _emit(args, rec)


def cmd_classc_build(args):
    data = _read_json(args.cert)
    try:
        cert = _classc.ClassCCertificate.from_dict(data)
        S = _classc.build(cert)
    except PosetError as exc:
        raise InputError(f"{args.cert}: {exc}") from None
    rep = _classc.verify_class_c(S)
    _emit(args, {"poset": S.to_dict(), **rep.to_dict()})
    return EXIT_OK if rep.certified else EXIT_FAIL


def cmd_classc_enumerate(args):
    members = _classc.enumerate_class_c(args.max)
    rows = []
    for S, cert in members:
        rep = _classc.verify_class_c(S)
        rows.append({"size": len(S), "certificate": cert.to_dict(), "phi": str(rep.phi), "certified": rep.certified})
    if args.format == "csv":
        table = [["size", "phi", "certified", "certificate"]] + [
            [r["size"], r["phi"], r["certified"], json.dumps(r["certificate"])] for r in rows
        ]
        _emit(args, {}, csv_rows=table)
    else:
        _emit(args, {"count": len(rows), "members": rows},
              [f"{r['size']:>3}  {r['phi']}  certified={r['certified']}" for r in rows] + [f"total: {len(rows)}"])
    return EXIT_OK if all(r["certified"] for r in rows) else EXIT_FAIL


def _emit_tower(args, report):
    if args.format == "json":
        print(report.to_json())
    elif args.format == "csv":
        sys.stdout.write(report.to_csv())
    else:
        for i, lv in enumerate(report.levels):
            print(f"level {i} ({lv.label}): deg {lv.phi.degree}  M = {lv.mahler.measure:.6f}"
                  f"{' (exact)' if lv.mahler.exact_one else ''}  phi = {lv.phi}")
        for k, v in report.flags().items():
            print(f"{k}: {v}")


def cmd_tower(args):
    alg = load_algebra(args.algebra)
    if isinstance(alg, Poset):
        alg = _cartan.from_poset(alg)
    report = _towers.build_tower(alg, args.at, args.length)
    _emit_tower(args, report)
    return EXIT_OK if report.degree_ok and report.recurrence_ok else EXIT_INTERNAL


def cmd_counterexample(args):
    _emit_tower(args, _towers.counterexample(args.name))


def cmd_verify(args):
    results = _verify.run_suite(args.suite, args.seed, args.count, args.threads)
    failed = [r for r in results if not r.ok]
    summary = {"suite": args.suite, "seed": args.seed, "checks": len(results), "failures": len(failed)}
    if args.format == "json":
        print(json.dumps({**summary, "failed": [r.to_dict() for r in failed]}, indent=2))
    elif args.format == "csv":
        _emit(args, {}, csv_rows=[["name", "ok", "detail"]] + [[r.name, r.ok, r.detail] for r in results])
    else:
        for r in failed:
            print(f"FAIL {r.name} {r.detail}")
        print(f"{args.suite}: {len(results) - len(failed)}/{len(results)} checks passed (seed {args.seed})")
    return EXIT_FAIL if failed else EXIT_OK


def reproduce_records():
    """Every reproduced value as (section, item, value, expected, ok)."""
    from .intpoly import parse_poly as P

    rows = []
    fork = _poset.from_relations(["m", "a", "b"], [("m", "a"), ("m", "b")])
    table = [
        ("empty", _poset.empty(), "1", "0", "1"),
        ("point", _poset.chain(1), "x+1", "1", "0"),
        ("2-chain", _poset.chain(2), "x^2+x+1", "x+1", "-x"),
        ("2-antichain", _poset.antichain(2), "x^2+2*x+1", "2*x+2", "-x^2-2*x-1"),
        ("3-chain", _poset.chain(3), "x^3+x^2+x+1", "x^2+x+1", "-x^2-x"),
        ("fork", fork, "x^3+x^2+x+1", "x^2+2*x+1", "-2*x^2-2*x"),
    ]
    for name, S, phi, p0, p1 in table:
        a = refined_pair_minor(S)
        got = (coxeter_poly(S), a.phi0, a.phi1)
        want = (P(phi), P(p0), P(p1))
        rows.append(("refined-table", name, " | ".join(map(str, got)), " | ".join(map(str, want)), got == want))
    two = _poset.chain(2)
    for name, S, want in (("chain", _poset.chain(3), "x^4+x^3+x^2+x+1"), ("fork", fork, "x^4+x^3+x+1")):
        got = coxeter_poly(_poset.poset_insert(two, "1", S))
        rows.append(("insertion-into-2-chain", name, str(got), want, got == P(want)))
    target = P("(x-1)^4*(x+1)^4")
    for k, cert in enumerate(_classc.eight_element_certificates(), start=1):
        rep = _classc.verify_class_c(_classc.build(cert))
        ok = rep.phi0_zero and rep.phi == target and rep.phi1 == target
        rows.append(("class-C-8-element", f"poset{k}", f"phi0={rep.phi0} phi={rep.phi}", f"phi0=0 phi={target}", ok))
    expected = {"ext-canonical-234": (1.281, 1.176, 1.0), "tree-11": (1.722, 1.640, 1.582), "e8-star": (1.0, 1.176, 1.230)}
    for name in _towers.COUNTEREXAMPLES:
        rep = _towers.counterexample(name)
        got = rep.mahler_values()[1:4]
        ok = all(abs(g - e) <= 1e-3 for g, e in zip(got, expected[name]))
        rows.append(("mahler-triples", name, ", ".join(f"{g:.3f}" for g in got),
                     ", ".join(f"{e:.3f}" for e in expected[name]), ok))
    return rows


def cmd_reproduce(args):
    rows = reproduce_records()
    if args.format == "json":
        print(json.dumps([dict(zip(("section", "item", "value", "expected", "ok"), r)) for r in rows], indent=2))
    elif args.format == "csv":
        _emit(args, {}, csv_rows=[["section", "item", "value", "expected", "ok"]] + [list(r) for r in rows])
    else:
        section = None
        for sec, item, value, want, ok in rows:
            if sec != section:
                print(f"== {sec}")
                section = sec
            print(f"  {item:<18} {value}   [{'ok' if ok else 'MISMATCH, expected ' + want}]")
    return EXIT_OK if all(r[4] for r in rows) else EXIT_FAIL


# -- parser ---------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["pretty", "json", "csv"], default="pretty")

    parser = argparse.ArgumentParser(prog="refcox", description="Coxeter and refined Coxeter polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coxeter", parents=[fmt], help="Coxeter polynomial of a poset or Cartan file")
    p.add_argument("file")
    p.set_defaults(func=cmd_coxeter)

    p = sub.add_parser("refined", parents=[fmt], help="refined Coxeter polynomials of a poset")
    p.add_argument("file")
    p.set_defaults(func=cmd_refined)

    p = sub.add_parser("insert", parents=[fmt], help="insert a poset into an algebra at a vertex")
    p.add_argument("algebra")
    p.add_argument("--at", required=True)
    p.add_argument("poset")
    p.set_defaults(func=cmd_insert)

    p = sub.add_parser("ordinal-sum", parents=[fmt], help="Coxeter polynomial of an ordinal sum, two ways")
    p.add_argument("posets", nargs="+")
    p.set_defaults(func=cmd_ordinal_sum)

    p = sub.add_parser("is-cyclotomic", parents=[fmt], help="cyclotomic factorization profile")
    p.add_argument("poly")
    p.set_defaults(func=cmd_is_cyclotomic)

    p = sub.add_parser("mahler", parents=[fmt], help="Mahler measure of a monic polynomial")
    p.add_argument("poly")
    p.add_argument("--tol", type=float, default=1e-12)
    p.set_defaults(func=cmd_mahler)

    p = sub.add_parser("represent", parents=[fmt], help="representing polynomial q of a self-reciprocal p")
    p.add_argument("poly")
    p.add_argument("--degree", type=int, default=None)
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("atilde", parents=[fmt], help="type A~ poset from run lengths")
    p.add_argument("--runs", required=True, help="comma-separated n+1,n-1,...,n+k,n-k")
    p.set_defaults(func=cmd_atilde)

    p = sub.add_parser("classc", help="class C certificates")
    csub = p.add_subparsers(dest="classc_command", required=True)
    q = csub.add_parser("build", parents=[fmt])
    q.add_argument("cert")
    q.set_defaults(func=cmd_classc_build)
    q = csub.add_parser("enumerate", parents=[fmt])
    q.add_argument("--max", type=int, required=True)
    q.set_defaults(func=cmd_classc_enumerate)

    p = sub.add_parser("tower", parents=[fmt], help="interlaced tower by chain insertion")
    p.add_argument("algebra")
    p.add_argument("--at", required=True)
    p.add_argument("--length", type=int, default=3)
    p.set_defaults(func=cmd_tower)

    p = sub.add_parser("counterexample", parents=[fmt], help="Mahler-measure counterexample towers")
    p.add_argument("name", choices=_towers.COUNTEREXAMPLES)
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("verify", parents=[fmt], help="run a seeded verification suite")
    p.add_argument("--suite", choices=sorted(_verify.SUITES), required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--threads", type=int, default=None, help="worker threads (default: $REFCOX_THREADS or 1)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reproduce-paper", parents=[fmt], help="recompute every published value")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (CoxeterError, ConvergenceError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (PosetError, CartanError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ArithmeticError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return code or EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
