"""Command-line interface: verify, bounds, split, search, render, serve."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .arrangement import DegeneracyError
from .bounds import bounds_table
from .classify import theorem_audit, verify
from .familydoc import (
    DocumentError,
    FamilyDocument,
    SymmetryBlock,
    document_for_family,
    load_path,
    parse_coord,
    serialize_document,
)
from .report import report_document, serialize_report
from .search import SearchState, anneal, config_from_json
from .transform import TransformError, split_to_simple

EXIT_OK = 0
EXIT_NOT_VENN = 1
EXIT_PARSE = 2
EXIT_DEGENERATE = 3
EXIT_FAILED = 4


def _fail(code: int, message: str) -> int:
    print(f"polyvenn: {message}", file=sys.stderr)
    return code


def _load_family(path: str):
    doc = load_path(path)
    return doc, doc.to_family()


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_verify(args) -> int:
    try:
        _, family = _load_family(args.family)
    except (OSError, DocumentError) as err:
        return _fail(EXIT_PARSE, str(err))
    try:
        report = verify(family)
        audit = None
        if args.audit and report.is_venn:
            audit = theorem_audit(family, report)
    except DegeneracyError as err:
        return _fail(EXIT_DEGENERATE, str(err))
    doc = report_document(report, family, audit)
    _write(serialize_report(doc), args.out)
    if args.audit and not report.is_venn:
        print("polyvenn: audit skipped, the family is not a Venn diagram",
              file=sys.stderr)
    return EXIT_OK if report.is_venn else EXIT_NOT_VENN


def cmd_bounds(args) -> int:
    try:
        rows = bounds_table(args.n_min, args.n_max)
    except ValueError as err:
        return _fail(EXIT_PARSE, str(err))
    if args.json:
        payload = {"rows": [{"n": r.n, "lower_k": r.theorem_min_k,
                             "upper_k": r.upper_k,
                             "lemma2_min_k": r.lemma2_min_k}
                            for r in rows]}
        _write(json.dumps(payload, indent=2) + "\n", args.out)
        return EXIT_OK
    widths = [max(len(str(r.n)), len(str(r.theorem_min_k)), len(str(r.upper_k)))
              for r in rows]
    head = "n    " + "  ".join(str(r.n).rjust(w) for r, w in zip(rows, widths))
    low = "k >= " + "  ".join(str(r.theorem_min_k).rjust(w)
                              for r, w in zip(rows, widths))
    up = "k <= " + "  ".join(str(r.upper_k).rjust(w)
                             for r, w in zip(rows, widths))
    _write("\n".join([head, low, up]) + "\n", args.out)
    return EXIT_OK


def cmd_split(args) -> int:
    try:
        _, family = _load_family(args.family)
        epsilon = parse_coord(args.epsilon)
    except (OSError, DocumentError) as err:
        return _fail(EXIT_PARSE, str(err))
    try:
        out_family, report = split_to_simple(family, epsilon, args.seed)
    except DegeneracyError as err:
        return _fail(EXIT_DEGENERATE, str(err))
    except (TransformError, ValueError) as err:
        return _fail(EXIT_FAILED, str(err))
    _write(serialize_document(document_for_family(out_family)), args.out)
    report_json = {
        "degrees_before": {str(d): c for d, c in sorted(report.degrees_before.items())},
        "degrees_after": {str(d): c for d, c in sorted(report.degrees_after.items())},
        "F_before": report.F_before,
        "F_after": report.F_after,
        "new_faces": report.new_faces,
        "still_independent_family": report.still_independent_family,
        "translations": [{"curve": label, "dx": str(dx), "dy": str(dy)}
                         for label, (dx, dy) in report.translations],
    }
    text = json.dumps(report_json, indent=2) + "\n"
    if args.report:
        _write(text, args.report)
    else:
        sys.stderr.write(text)
    return EXIT_OK


def cmd_search(args) -> int:
    try:
        with open(args.config, "r", encoding="utf-8") as fh:
            config = config_from_json(json.load(fh))
    except (OSError, json.JSONDecodeError, DocumentError, ValueError) as err:
        return _fail(EXIT_PARSE, f"bad search config: {err}")

    def progress(state: SearchState, best: SearchState) -> None:
        print(f"iter={state.iteration} deficiency={state.deficiency} "
              f"best={best.deficiency}@{best.iteration}", file=sys.stderr)

    best = anneal(config, progress=progress if not args.quiet else None)
    doc = FamilyDocument((best.generator,),
                         SymmetryBlock(0, config.n, config.digits))
    _write(serialize_document(doc), args.out)
    print(f"polyvenn: best deficiency {best.deficiency} at iteration "
          f"{best.iteration}", file=sys.stderr)
    return EXIT_OK if best.deficiency == 0 else EXIT_NOT_VENN


def cmd_render(args) -> int:
    from .render import render_svg

    try:
        _, family = _load_family(args.family)
    except (OSError, DocumentError) as err:
        return _fail(EXIT_PARSE, str(err))
    try:
        svg = render_svg(family, shade=args.shade, size=args.size)
    except DegeneracyError as err:
        return _fail(EXIT_DEGENERATE, str(err))
    _write(svg, args.out)
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    app = create_app(static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyvenn",
        description="Exact verification, auditing, and search for Venn "
                    "diagrams of convex polygons.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="classify a polygon family")
    p.add_argument("family", help=".family document path")
    p.add_argument("--audit", action="store_true",
                   help="add the corner-calculus audit (Venn diagrams only)")
    p.add_argument("--out", default=None, help="report path (default stdout)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="minimum side-count table")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--json", action="store_true", help="machine-readable rows")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("split", help="split high-degree vertices")
    p.add_argument("family")
    p.add_argument("--epsilon", required=True, help="max translation, decimal")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="output family (default stdout)")
    p.add_argument("--report", default=None,
                   help="split report path (default stderr)")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("search", help="anneal towards a symmetric Venn diagram")
    p.add_argument("--config", required=True, help="search config JSON path")
    p.add_argument("--out", default=None, help="best generator (default stdout)")
    p.add_argument("--quiet", action="store_true", help="suppress progress")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("render", help="render a family as SVG")
    p.add_argument("family")
    p.add_argument("--shade", action="store_true",
                   help="fill faces by sign-vector weight")
    p.add_argument("--size", type=int, default=640)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("serve", help="run the HTTP verification service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8765)
    p.add_argument("--static", default=None,
                   help="directory of built editor assets to serve at /")
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
