"""Command-line interface.

Subcommands: kappa, ideal-dim, split-kappa, trace, quintics (verify | export),
classify, table1, table2, oracle (interp | codim).  Exit codes: 0 success,
1 verification failure, 2 usage error.  Output is plain text by default or
line-delimited JSON records (schema 1) with --output structured.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .multiindex import format_smonomial, parse_multiindex, parse_smonomial
from .prolong import CACHE_ENV, graded_piece_dim, interpolation_oracle_kappa, kappa


def _emit(args, record, text):
    if args.output == "structured":
        record.setdefault("schema", 1)
        print(json.dumps(record))
    else:
        print(text)


def _common(parser, weight=False):
    parser.add_argument("--k", type=int, required=True, help="secant index k >= 1")
    parser.add_argument("--d", type=int, required=True, help="Veronese degree d")
    parser.add_argument("--n", type=int, required=True, help="projective dimension n")
    if weight:
        parser.add_argument(
            "--beta", type=str, required=True, help="weight, comma-separated (e.g. 8,4,4)"
        )
    parser.add_argument("--cache-dir", type=str, default=None,
                        help=f"kernel report cache directory (default ${CACHE_ENV})")
    parser.add_argument("--output", choices=("text", "structured"), default="text")


def build_parser():
    top = argparse.ArgumentParser(
        prog="secant-ideals",
        description="Exact degree-(k+1) pieces of secant ideals of Veronese embeddings",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kappa", help="kernel dimension of one weight space")
    _common(p, weight=True)
    p.add_argument("--with-basis", action="store_true", help="also print a kernel basis")

    p = sub.add_parser("ideal-dim", help="dimension of the whole degree-(k+1) piece")
    _common(p)
    p.add_argument("--prune-bound", type=int, default=None,
                   help="assign kappa=0 to orbits larger than this bound (sound when "
                        "the true total is at most the bound)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--extended", action="store_true",
                   help="accept long-running sweeps without prompting")
    p.add_argument("--no-dichotomy", action="store_true",
                   help="disable skipping orbits via the minimal/del Pezzo value-set bounds")

    p = sub.add_parser("split-kappa", help="kernel dimensions of the sign components")
    _common(p, weight=True)
    p.add_argument("--split", type=str, default=None,
                   help="explicit component like '(01)-,(23)+'; default: all components "
                        "over the natural disjoint transpositions")

    p = sub.add_parser("trace", help="staged coefficient-elimination derivation")
    _common(p, weight=True)
    p.add_argument("--priority-file", type=str, default=None,
                   help="file with one monomial per line (e.g. s_310^2*s_202*s_022) "
                        "to prefer as variables")
    p.add_argument("--structured-trace", action="store_true",
                   help="print the machine-readable trace record")

    p = sub.add_parser("quintics", help="the 36 quintic generators for k=4, d=3, n=3")
    q = p.add_subparsers(dest="quintics_command", required=True)
    pv = q.add_parser("verify", help="run the full verification suite")
    pv.add_argument("--output", choices=("text", "structured"), default="text")
    pe = q.add_parser("export", help="emit xi, F, G, H and the 36 generators")
    pe.add_argument("--output", choices=("text", "structured"), default="text")

    p = sub.add_parser("classify", help="minimal / del Pezzo / neither verdict")
    _common(p)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("table1", help="verdicts for the whole survey table")
    p.add_argument("--extended", action="store_true", help="compute the heavy rows too")
    p.add_argument("--cache-dir", type=str, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--output", choices=("text", "structured"), default="text")

    p = sub.add_parser("table2", help="generator descriptions for cubic Veronese secants")
    p.add_argument("--output", choices=("text", "structured"), default="text")

    p = sub.add_parser("oracle", help="independent cross-checks")
    o = p.add_subparsers(dest="oracle_command", required=True)
    po = o.add_parser("interp", help="kernel dimension upper bound by interpolation")
    _common(po, weight=True)
    po.add_argument("--samples", type=int, default=None)
    po.add_argument("--seed", type=int, default=0)
    pc = o.add_parser("codim", help="codimension from tangent-space ranks")
    _common(pc)
    pc.add_argument("--seed", type=int, default=0)

    return top


def cmd_kappa(args):
    beta = parse_multiindex(args.beta)
    report = kappa(beta, args.k, args.d, args.n, with_basis=args.with_basis,
                   cache_dir=args.cache_dir)
    rec = {
        "command": "kappa", "k": args.k, "d": args.d, "n": args.n,
        "beta": list(beta), "dim_L": report.dim_L, "kappa": report.kappa,
        "method": report.method,
    }
    if args.with_basis and report.basis is not None:
        rec["basis"] = [f.to_records() for f in report.basis]
    lines = [f"{report.kappa}"]
    if args.with_basis and report.basis:
        for f in report.basis:
            lines.append(f.text())
    _emit(args, rec, "\n".join(lines))
    return 0


def cmd_ideal_dim(args):
    piece = graded_piece_dim(
        args.k, args.d, args.n,
        prune_bound=args.prune_bound,
        cache_dir=args.cache_dir,
        workers=args.workers,
        use_dichotomy=not args.no_dichotomy,
    )
    nonzero = [r for r in piece.reports if r.kappa]
    rec = {
        "command": "ideal-dim", "k": args.k, "d": args.d, "n": args.n,
        "total": piece.total,
        "orbits": [
            {"beta": list(r.beta), "kappa": r.kappa, "orbit_size": r.orbit_size,
             "dim_L": r.dim_L, "method": r.method}
            for r in nonzero
        ],
    }
    lines = []
    for r in nonzero:
        lines.append(
            f"weight {','.join(map(str, r.beta))}: kappa = {r.kappa}, orbit size {r.orbit_size}, "
            f"contribution {r.contribution()}"
        )
    lines.append(str(piece.total))
    _emit(args, rec, "\n".join(lines))
    return 0


def cmd_split_kappa(args):
    from .symmetry import SplitSpec, component_kappa, natural_transpositions, parse_split_spec, split_kappa

    beta = parse_multiindex(args.beta)
    if args.split:
        spec = parse_split_spec(args.split)
        value = component_kappa(beta, args.k, args.d, args.n, spec)
        rec = {"command": "split-kappa", "beta": list(beta), "component": spec.text(),
               "kappa": value}
        _emit(args, rec, str(value))
        return 0
    values = split_kappa(beta, args.k, args.d, args.n)
    trans = natural_transpositions(beta)
    rec = {"command": "split-kappa", "beta": list(beta),
           "transpositions": [list(t) for t in trans], "components": values,
           "total": sum(values.values())}
    lines = [f"transpositions: {' '.join(f'({i}{j})' for i, j in trans)}"]
    for pat, v in values.items():
        lines.append(f"[{pat}] {v}")
    lines.append(f"total {sum(values.values())}")
    _emit(args, rec, "\n".join(lines))
    return 0


def cmd_trace(args):
    from .trace import elimination_trace, render_trace, trace_to_records

    beta = parse_multiindex(args.beta)
    priority = None
    if args.priority_file:
        with open(args.priority_file) as fh:
            priority = [parse_smonomial(line.strip(), args.n)
                        for line in fh if line.strip()]
    tr = elimination_trace(beta, args.k, args.d, args.n, variable_priority=priority)
    if args.structured_trace or args.output == "structured":
        rec = trace_to_records(tr)
        rec["command"] = "trace"
        print(json.dumps(rec))
    else:
        print(render_trace(tr))
    return 0


def cmd_quintics(args):
    from . import quintics

    if args.quintics_command == "verify":
        results = quintics.verify_all()
        ok = all(passed for _, passed in results)
        if args.output == "structured":
            print(json.dumps({"schema": 1, "command": "quintics-verify",
                              "checks": [{"name": n, "pass": p} for n, p in results],
                              "all_pass": ok}))
        else:
            for name, passed in results:
                print(("PASS " if passed else "FAIL ") + name)
            print("all checks passed" if ok else "SOME CHECKS FAILED")
        return 0 if ok else 1
    polys = {
        "xi": quintics.make_xi(),
        "F": quintics.make_F(),
        "G": quintics.make_G(),
        "H": quintics.make_H(),
    }
    basis = quintics.thirty_six_basis()
    if args.output == "structured":
        print(json.dumps({
            "schema": 1, "command": "quintics-export",
            **{k: p.to_records() for k, p in polys.items()},
            "basis": [p.to_records() for p in basis],
        }))
    else:
        for name, p in polys.items():
            print(f"{name} = {p.text()}")
        print(f"basis of {len(basis)} generators:")
        for i, p in enumerate(basis):
            w = ",".join(map(str, p.weight()))
            print(f"[{i}] weight {w}: {p.text()}")
    return 0


def cmd_classify(args):
    from .classify import classify

    report = classify(args.k, args.d, args.n, cache_dir=args.cache_dir, workers=args.workers)
    rec = {"command": "classify", **_report_record(report)}
    text = (
        f"sigma_{args.k}(v_{args.d}(P^{args.n})): {report.verdict}"
        f" (dim piece = {report.dim_piece}, B = {report.B}, B' = {report.B_prime}, e = {report.e})"
    )
    if report.degree is not None:
        text += f", degree {report.degree}"
    if report.genus is not None:
        text += f", sectional genus {report.genus}"
    _emit(args, rec, text)
    return 0


def _report_record(r):
    return {
        "k": r.k, "d": r.d, "n": r.n, "N": r.N, "e": r.e,
        "dim_piece": r.dim_piece, "B": r.B, "B_prime": r.B_prime,
        "verdict": r.verdict, "degree": r.degree, "genus": r.genus,
        "defective": r.defective, "note": r.note,
    }


def cmd_table1(args):
    from .classify import render_table1, table1

    reports = table1(extended=args.extended, cache_dir=args.cache_dir, workers=args.workers)
    if args.output == "structured":
        for r in reports:
            print(json.dumps({"schema": 1, "command": "table1", **_report_record(r)}))
    else:
        print(render_table1(reports))
    return 0


def cmd_table2(args):
    from .classify import table2

    text = table2()
    if args.output == "structured":
        print(json.dumps({"schema": 1, "command": "table2", "lines": text.splitlines()}))
    else:
        print(text)
    return 0


def cmd_oracle(args):
    if args.oracle_command == "interp":
        beta = parse_multiindex(args.beta)
        value = interpolation_oracle_kappa(beta, args.k, args.d, args.n,
                                           samples=args.samples, seed=args.seed)
        _emit(args, {"command": "oracle-interp", "beta": list(beta), "kappa": value},
              str(value))
        return 0
    from .classify import terracini_codim_oracle

    value = terracini_codim_oracle(args.k, args.d, args.n, seed=args.seed)
    _emit(args, {"command": "oracle-codim", "k": args.k, "d": args.d, "n": args.n,
                 "e": value}, str(value))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if getattr(args, "cache_dir", None) is None and hasattr(args, "cache_dir"):
        args.cache_dir = os.environ.get(CACHE_ENV)
    handlers = {
        "kappa": cmd_kappa,
        "ideal-dim": cmd_ideal_dim,
        "split-kappa": cmd_split_kappa,
        "trace": cmd_trace,
        "quintics": cmd_quintics,
        "classify": cmd_classify,
        "table1": cmd_table1,
        "table2": cmd_table2,
        "oracle": cmd_oracle,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, KeyError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
