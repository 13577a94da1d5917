"""Command-line front end.

Exit codes: 0 success, 2 parse error, 3 domain error, 4 budget exceeded.
Every metric argument may be ``-`` to read standard input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import admissible, classify, faces, norms, triangulate
from .errors import BudgetExceeded, LipKRError, ParseError
from .metric import dump_metric, format_rational, load_metric, random_generic_metric

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_BUDGET = 0, 2, 3, 4


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _metric(path):
    if path == "-":
        return load_metric(sys.stdin)
    try:
        return load_metric(path)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _measure(ms, path):
    try:
        return norms.load_measure(ms, sys.stdin if path == "-" else path)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _bool(b: bool) -> str:
    return "true" if b else "false"


def cmd_check(args, out):
    ms = _metric(args.metric)
    report = admissible.is_generic(ms) if ms.strict else None
    generic = bool(report)
    if args.format == "json":
        data = {"points": ms.n_points, "strict": ms.strict, "generic": generic}
        if report is not None and report.witness:
            data["tie"] = {"xs": report.witness.xs, "ys": report.witness.ys}
        out.write(json.dumps(data) + "\n")
    else:
        out.write(f"strict: {_bool(ms.strict)}, generic: {_bool(generic)}\n")
        if report is not None and report.witness:
            out.write(f"tie: {report.witness.xs} x {report.witness.ys}\n")


def cmd_fvector(args, out):
    ms = _metric(args.metric)
    fv = faces.f_vector(ms)
    formula = [faces.multinomial(ms.n, m) for m in range(ms.n + 1)]
    if args.format == "json":
        out.write(json.dumps({"n": ms.n, "f_vector": list(fv), "multinomial": formula}) + "\n")
    else:
        out.write(" ".join(map(str, fv)) + "\n")
        out.write("binom(n+m,m,m,n-m): " + " ".join(map(str, formula)) + "\n")


def cmd_facets(args, out):
    ms = _metric(args.metric)
    facets = faces.enumerate_facets(ms, jobs=args.jobs)
    if args.format == "json":
        out.write(json.dumps([f.to_json() for f in facets], indent=1) + "\n")
    elif args.format == "dot":
        for i, f in enumerate(facets):
            out.write(admissible.to_dot(f.tree, ms.n_points, name=f"facet{i}") + "\n")
    else:
        for f in facets:
            wit = " ".join(format_rational(v) for v in f.witness.values)
            out.write(f"{','.join(map(str, f.outdeg))}\t{triangulate.format_simplex(f.tree)}\tf=({wit})\n")


def cmd_faces(args, out):
    ms = _metric(args.metric)
    if args.outdeg is None:
        raise ParseError("faces requires --outdeg")
    graphs = faces.faces_with_outdegrees(ms, args.outdeg)
    if args.format == "json":
        out.write(json.dumps([[list(e) for e in admissible.canonical(g)] for g in graphs]) + "\n")
    elif args.format == "dot":
        for i, g in enumerate(graphs):
            out.write(admissible.to_dot(g, ms.n_points, name=f"face{i}") + "\n")
    else:
        for g in graphs:
            out.write(triangulate.format_simplex(g) + "\n")


def _norm(args, out, fn):
    ms = _metric(args.metric)
    mu = _measure(ms, args.measure)
    value = fn(ms, mu)
    if args.format == "json":
        out.write(json.dumps({"norm": format_rational(value)}) + "\n")
    else:
        out.write(format_rational(value) + "\n")


def cmd_norm(args, out):
    _norm(args, out, norms.kr_norm)


def cmd_dual_norm(args, out):
    _norm(args, out, norms.kr_norm_dual)


def cmd_triangulate(args, out):
    ms = _metric(args.metric)
    t = triangulate.triangulate_root_polytope(ms, jobs=args.jobs)
    if args.format == "json":
        out.write(triangulate.to_json(t) + "\n")
    elif args.format == "dot":
        for i, s in enumerate(t.simplices):
            out.write(admissible.to_dot(s.tree, ms.n_points, name=f"simplex{i}") + "\n")
    else:
        out.write(triangulate.to_text(t) + "\n")


def cmd_product(args, out):
    ms = _metric(args.metric)
    if not args.plus:
        raise ParseError("product requires --plus")
    cells = triangulate.product_triangulation(ms, args.plus)
    if args.format == "json":
        out.write(json.dumps([triangulate.format_simplex(c) for c in cells]) + "\n")
    elif args.format == "dot":
        for i, c in enumerate(cells):
            out.write(admissible.to_dot(c, ms.n_points, name=f"cell{i}") + "\n")
    else:
        for c in cells:
            out.write(triangulate.format_simplex(c) + "\n")


def cmd_classify(args, out):
    family = [_metric(p) for p in args.metrics]
    result = classify.count_classes(family, jobs=args.jobs, up_to_relabeling=args.relabel)
    if args.format == "json":
        out.write(json.dumps({"count": result.count, "classes": result.report()}, indent=1) + "\n")
    else:
        out.write(f"classes: {result.count}\n")
        for row in result.report():
            out.write(f"{row['representative']}\t{row['size']}\t{row['structure_hash']}\n")


def cmd_random(args, out):
    ms = random_generic_metric(args.n, args.seed)
    out.write(dump_metric(ms) + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lipkr", description="Faces, norms and triangulations of Lipschitz / Kantorovich-Rubinstein polytopes.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--jobs", type=int, default=1)
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=fn)
        return p

    add("check", cmd_check, "strictness and genericity").add_argument("metric")
    add("fvector", cmd_fvector, "f-vector with the closed formula").add_argument("metric")
    add("facets", cmd_facets, "all facet trees and LIP vertices").add_argument("metric")
    p = add("faces", cmd_faces, "faces with a given outdegree sequence")
    p.add_argument("metric")
    p.add_argument("--outdeg", type=_int_list)
    for name, fn in (("norm", cmd_norm), ("dual-norm", cmd_dual_norm)):
        p = add(name, fn, "Kantorovich-Rubinstein norm" + (" via LIP vertices" if name == "dual-norm" else ""))
        p.add_argument("metric")
        p.add_argument("measure")
    add("triangulate", cmd_triangulate, "unimodular triangulation of the root polytope").add_argument("metric")
    p = add("product", cmd_product, "induced triangulation of a product of simplices")
    p.add_argument("metric")
    p.add_argument("--plus", type=_int_list)
    p = add("classify", cmd_classify, "Lipschitz combinatorial equivalence classes")
    p.add_argument("metrics", nargs="+")
    p.add_argument("--relabel", action="store_true", help="also identify metrics differing by a relabeling of points")
    p = add("random", cmd_random, "seeded random generic metric")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args, out)
    except ParseError as exc:
        print(f"error: ParseError: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"error: BudgetExceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except LipKRError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
