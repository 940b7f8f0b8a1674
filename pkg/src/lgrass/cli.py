"""Command-line front end.

Subcommands: restrict, table, models, render, chart, verify.  Fixed-point
indices are written as signed lists ("3,-2,-1" means {3, bar(2), bar(1)});
raw labels in 1..2n are accepted too.  Exit codes: 0 ok, 1 verification
failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import render
from .chart import chart_index_set, coordinate_weight_h, coordinate_weight_k
from .indexing import IsotropicIndex, check_strict, enumerate_isotropic
from .models import MODEL_NAMES, enumerate_model
from .oracles import run_verification
from .restriction import restrict

TABLE_RANK_LIMIT = 8
VERIFY_RANK_LIMIT = 4


def parse_index(text: str, n: int) -> IsotropicIndex:
    """Signed-list syntax (negative k is bar(k)); raw 1..2n labels also accepted."""
    try:
        tokens = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise ValueError(f"cannot parse index {text!r}: {exc}") from None
    if any(tok < 0 for tok in tokens):
        return IsotropicIndex.from_signed(n, tokens)
    if all(1 <= tok <= n for tok in tokens):
        return IsotropicIndex.from_signed(n, tokens)
    return IsotropicIndex(n, tokens)


def parse_partition(text: str) -> tuple[int, ...]:
    text = text.strip().strip("[]")
    if not text:
        return ()
    return check_strict(int(tok) for tok in text.split(","))


def _cmd_restrict(args) -> int:
    alpha = parse_index(args.alpha, args.n)
    beta = parse_index(args.beta, args.n)
    result = restrict(alpha, beta, args.theory)
    if args.format == "json":
        print(json.dumps({
            "n": args.n,
            "alpha": str(alpha),
            "beta": str(beta),
            "theory": args.theory,
            "term_count": result.term_count,
            "value": result.value.to_json(),
        }))
    else:
        print(f"alpha = {alpha}  beta = {beta}  theory = {args.theory}")
        print(f"tableaux summed: {result.term_count}")
        print(f"value: {result.value.pretty()}")
    return 0


def _cmd_table(args) -> int:
    if args.n > TABLE_RANK_LIMIT:
        raise SystemExit(f"table rank guard: n <= {TABLE_RANK_LIMIT}")
    points = enumerate_isotropic(args.n)
    rows = {a: {b: restrict(a, b, args.theory).value for b in points}
            for a in points}
    if args.out == "json":
        payload = {
            "n": args.n,
            "theory": args.theory,
            "points": [str(p) for p in points],
            "rows": {str(a): {str(b): rows[a][b].to_json() for b in points}
                     for a in points},
        }
        print(json.dumps(payload))
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["alpha\\beta"] + [str(b) for b in points])
        for a in points:
            writer.writerow([str(a)] + [rows[a][b].pretty() for b in points])
        print(buf.getvalue(), end="")
    return 0


def _model_json(name, item):
    if name == "tableaux":
        return item.to_json()
    if name == "subsets":
        return [{"row": r, "col": c} for r, c in item.members]
    return [[{"row": r, "col": c} for r, c in path] for path in item.paths]


def _cmd_models(args) -> int:
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    names = MODEL_NAMES if args.which == "all" else (args.which,)
    if args.json:
        payload = {"lam": list(lam), "mu": list(mu)}
        for name in names:
            items = enumerate_model(lam, mu, name)
            payload[name] = [_model_json(name, item) for item in items]
        print(json.dumps(payload))
        return 0
    for name in names:
        items = enumerate_model(lam, mu, name)
        print(f"{name}: {len(items)} elements")
        if args.list:
            for i, item in enumerate(items):
                print(f"[{i}] {item!r}")
    return 0


def _cmd_render(args) -> int:
    out = []
    if args.rho is not None:
        eta = tuple(int(tok) for tok in args.rho.split(",") if tok.strip())
        out.append(render.svg_rho_figure(eta) if args.format == "svg"
                   else render.ascii_rho_figure(eta))
    else:
        lam = parse_partition(args.lam)
        mu = parse_partition(args.mu)
        names = MODEL_NAMES if args.which == "all" else (args.which,)
        ascii_of = {"tableaux": render.ascii_shifted_tableau,
                    "subsets": render.ascii_subset,
                    "families": render.ascii_family}
        svg_of = {"tableaux": render.svg_tableau,
                  "subsets": render.svg_subset,
                  "families": render.svg_family}
        for name in names:
            items = enumerate_model(lam, mu, name)
            if args.index is not None:
                items = [items[args.index]]
            for i, item in enumerate(items):
                if args.format == "svg":
                    out.append(svg_of[name](item))
                else:
                    out.append(f"-- {name} {args.index if args.index is not None else i} --")
                    out.append(ascii_of[name](item))
    text = "\n".join(out) + "\n"
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(text)
    else:
        print(text, end="")
    return 0


def _cmd_chart(args) -> int:
    beta = parse_index(args.beta, args.n)
    index_set = chart_index_set(beta)
    if args.weights_json:
        n = beta.n
        payload = {
            "n": n,
            "beta": str(beta),
            "pairs": [{"a": a, "b": b,
                       "weight_k": coordinate_weight_k(a, b, n).to_json(),
                       "weight_h": coordinate_weight_h(a, b, n).to_json()}
                      for a, b in index_set],
        }
        print(json.dumps(payload))
        return 0
    print(f"beta = {beta}   |R_beta| = {len(index_set)}")
    print("pairs:", " ".join(f"({a},{b})" for a, b in index_set))
    print(render.ascii_chart_matrix(beta))
    return 0


def _cmd_verify(args) -> int:
    if args.n > VERIFY_RANK_LIMIT:
        raise SystemExit(f"verify rank guard: n <= {VERIFY_RANK_LIMIT}")
    suites = (("oracle", "gkm", "chern", "positivity", "subword")
              if args.suite == "all" else (args.suite,))
    reports = run_verification(args.n, suites, corrupt=args.corrupt)
    ok = all(r.ok for r in reports)
    payload = json.dumps({"n": args.n, "ok": ok,
                          "reports": [r.to_json() for r in reports]})
    if args.json:
        print(payload)
    else:
        for r in reports:
            status = "pass" if r.ok else f"FAIL ({len(r.failures)} failures)"
            print(f"suite {r.suite:<11} n={r.n}  checks={r.checks:<5} {status}")
            for msg in r.failures[:10]:
                print(f"    {msg}")
        print("all suites passed" if ok else "verification FAILED")
        print(payload)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lgrass",
        description="Exact Schubert-class restrictions on the Lagrangian Grassmannian")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("restrict", help="restriction of one class at one fixed point")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--theory", choices=("K", "H"), default="K")
    p.add_argument("--format", choices=("pretty", "json"), default="pretty")
    p.set_defaults(func=_cmd_restrict)

    p = sub.add_parser("table", help="full fixed-point restriction table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--theory", choices=("K", "H"), default="K")
    p.add_argument("--out", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("models", help="enumerate the combinatorial models")
    p.add_argument("--lam", required=True, help="strict partition, e.g. 3,1")
    p.add_argument("--mu", required=True, help="strict partition, e.g. 5,3,2,1")
    p.add_argument("--which", choices=MODEL_NAMES + ("all",), default="all")
    p.add_argument("--list", action="store_true", help="print every element")
    p.add_argument("--json", action="store_true", help="emit the JSON forms")
    p.set_defaults(func=_cmd_models)

    p = sub.add_parser("render", help="ASCII or SVG pictures of the models")
    p.add_argument("--lam", help="strict partition")
    p.add_argument("--mu", help="strict partition")
    p.add_argument("--which", choices=MODEL_NAMES + ("all",), default="all")
    p.add_argument("--index", type=int, help="render just one element")
    p.add_argument("--rho", help="symmetric partition: draw it and its truncation")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--output", help="write to a file instead of stdout")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("chart", help="chart coordinates, weights, matrix pattern")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--weights-json", action="store_true")
    p.set_defaults(func=_cmd_chart)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--suite",
                   choices=("oracle", "gkm", "chern", "positivity", "subword", "all"),
                   default="all")
    p.add_argument("--corrupt", action="store_true",
                   help="negative control: perturb one table value")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)
    return parser


_VALUE_FLAGS = {"--alpha", "--beta", "--lam", "--mu", "--rho"}


def _join_value_flags(argv: list[str]) -> list[str]:
    """Merge '--beta -2,-1' into '--beta=-2,-1' so argparse keeps the value."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_join_value_flags(list(argv)))
    if getattr(args, "n", 1) < 1:
        parser.error("n must be >= 1")
    if (args.command == "render" and args.rho is None
            and (args.lam is None or args.mu is None)):
        parser.error("render needs --lam and --mu, or --rho")
    try:
        return args.func(args)
    except (ValueError, IndexError) as exc:
        parser.exit(2, f"error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
