"""Command-line surface.

Subcommands: validate, generate, trees, compat, transform, certify, render.
Exit codes: 0 success, 1 invalid input, 2 method inapplicable, 3 internal
invariant violation.  Errors are emitted as one JSON object on stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import fileio, render
from .compat import analyze, build_compat_graph
from .drawing import classify_monotone, validate_simple
from .errors import (
    InternalInvariantViolated,
    NotCylindricalError,
    NotDoubleStarError,
    NotMonotoneError,
    NotSpecialTreeError,
    NotStronglyCMonotoneError,
    NotTwinStarError,
    TreespanError,
)
from .generators import GenSpec, generate
from .trees import check_tree, enumerate_plane_trees
from .transforms import (
    certify_sequence,
    cmonotone_to_spine,
    monotone_to_spine,
    transform_cylindrical,
    transform_special,
)

_INAPPLICABLE = (NotCylindricalError, NotMonotoneError,
                 NotStronglyCMonotoneError, NotSpecialTreeError,
                 NotDoubleStarError, NotTwinStarError)


class MethodInapplicable(TreespanError):
    pass


def _report_json(d) -> dict:
    rep = validate_simple(d)
    cyl = None
    if rep.is_cylindrical is not None:
        roles = rep.is_cylindrical
        cyl = {"r_in2": str(roles.r_in2), "r_out2": str(roles.r_out2),
               "inner_vertices": list(roles.inner_vertices),
               "outer_vertices": list(roles.outer_vertices)}
    return {
        "is_simple": rep.is_simple,
        "is_monotone": rep.is_monotone,
        "is_two_page_book": rep.is_two_page_book,
        "is_cylindrical": cyl,
        "is_c_monotone": rep.is_c_monotone,
        "is_strongly_c_monotone": rep.is_strongly_c_monotone,
        "crossing_pairs": len(d.crossing_pairs()),
    }


def _spine_route(d, to_spine, t1, t2):
    a = to_spine(t1)
    b = to_spine(t2)
    trees = list(a.trees) + list(reversed(b.trees))
    out = [trees[0]]
    for t in trees[1:]:
        if t != out[-1]:
            out.append(t)
    return certify_sequence(d, out, method=a.method)


def _run_transform(d, method: str, t1, t2):
    report = validate_simple(d)
    if method in ("auto", "cylindrical") and report.is_cylindrical is not None:
        return transform_cylindrical(d, report.is_cylindrical, t1, t2)
    if method in ("auto", "monotone") and report.is_monotone:
        spine = classify_monotone(d)
        return _spine_route(d, lambda t: monotone_to_spine(d, spine, t), t1, t2)
    if method in ("auto", "cmonotone") and report.is_strongly_c_monotone:
        return _spine_route(d, lambda t: cmonotone_to_spine(d, t), t1, t2)
    if method in ("auto", "special"):
        kinds = {check_tree(d, t).kind for t in (t1, t2)}
        if all(k is not None and k[0] in ("star", "double_star", "twin_star")
               for k in kinds):
            return transform_special(d, t1, t2)
        if method == "special":
            raise NotSpecialTreeError("endpoints are not special trees")
    raise MethodInapplicable(f"no applicable method (asked for {method!r})")


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="treespan",
                                description="Plane spanning trees in simple "
                                            "drawings: validation, brute-force "
                                            "compatibility graphs, certified "
                                            "transformations.")
    sub = p.add_subparsers(dest="cmd", required=True)

    v = sub.add_parser("validate", help="validate a drawing file")
    v.add_argument("file")

    g = sub.add_parser("generate", help="generate a drawing")
    g.add_argument("--class", dest="cls", required=True,
                   choices=["convex", "random_points", "monotone_perturbed",
                            "two_page", "cylindrical", "strongly_cmonotone"])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("-a", type=int, default=None)
    g.add_argument("-b", type=int, default=None)
    g.add_argument("-o", "--output", required=True)

    t = sub.add_parser("trees", help="enumerate plane spanning trees")
    t.add_argument("file")
    t.add_argument("--kind", default="all",
                   choices=["all", "star", "double_star", "twin_star", "special"])
    t.add_argument("--list", action="store_true")
    t.add_argument("--limit", type=int, default=None)

    c = sub.add_parser("compat", help="build and analyze the compatibility graph")
    c.add_argument("file")
    c.add_argument("--special", action="store_true")
    c.add_argument("--dot", default=None)
    c.add_argument("--limit", type=int, default=None)

    tr = sub.add_parser("transform", help="certified transformation between trees")
    tr.add_argument("file")
    tr.add_argument("--from", dest="src", required=True)
    tr.add_argument("--to", dest="dst", required=True)
    tr.add_argument("--method", default="auto",
                    choices=["auto", "cylindrical", "monotone", "cmonotone",
                             "special"])
    tr.add_argument("-o", "--output", default=None)

    ce = sub.add_parser("certify", help="re-verify a sequence file")
    ce.add_argument("seqfile")
    ce.add_argument("--drawing", default=None,
                    help="drawing file (overrides the one named in the sequence)")

    r = sub.add_parser("render", help="render a drawing to SVG")
    r.add_argument("file")
    r.add_argument("--tree", action="append", default=[])
    r.add_argument("-o", "--output", required=True)
    return p


def _dispatch(args) -> int:
    if args.cmd == "validate":
        d = fileio.load_drawing(args.file)
        print(json.dumps(_report_json(d), sort_keys=True))
        return 0

    if args.cmd == "generate":
        spec = GenSpec(cls=args.cls, n=args.n, seed=args.seed,
                       a=args.a, b=args.b)
        d = generate(spec)
        fileio.save_drawing(d, args.output)
        print(json.dumps({"written": args.output,
                          "crossings": len(d.crossing_pairs())}))
        return 0

    if args.cmd == "trees":
        d = fileio.load_drawing(args.file)
        trees = enumerate_plane_trees(d, kind=args.kind, limit=args.limit)
        out = {"count": len(trees)}
        if args.list:
            out["trees"] = [[f"{u}-{v}" for u, v in t] for t in trees]
        print(json.dumps(out, sort_keys=True))
        return 0

    if args.cmd == "compat":
        d = fileio.load_drawing(args.file)
        g = build_compat_graph(d, restricted=args.special, limit=args.limit)
        a = analyze(g)
        diameter = a.diameter if a.diameter != math.inf else "infinite"
        print(json.dumps({"nodes": len(g.nodes), "edges": g.edge_count(),
                          "connected": a.connected, "diameter": diameter},
                         sort_keys=True))
        if args.dot:
            with open(args.dot, "w") as fh:
                fh.write(fileio.compat_to_dot(g))
        return 0

    if args.cmd == "transform":
        d = fileio.load_drawing(args.file)
        t1 = fileio.parse_tree_arg(args.src)
        t2 = fileio.parse_tree_arg(args.dst)
        seq = _run_transform(d, args.method, t1, t2)
        doc = fileio.sequence_to_dict(seq.trees, seq.method, seq.certified,
                                      drawing=args.file)
        text = fileio.dumps(doc)
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(text)
            print(json.dumps({"written": args.output, "trees": len(seq.trees),
                              "method": seq.method}))
        else:
            print(text, end="")
        return 0

    if args.cmd == "certify":
        with open(args.seqfile) as fh:
            trees, method, _, drawing_ref = fileio.sequence_from_dict(json.load(fh))
        path = args.drawing or drawing_ref
        if not isinstance(path, str):
            raise fileio.FileFormatError("no drawing file given or referenced")
        d = fileio.load_drawing(path)
        seq = certify_sequence(d, trees, method=method)
        print(json.dumps({"certified": True, "trees": len(seq.trees)}))
        return 0

    if args.cmd == "render":
        d = fileio.load_drawing(args.file)
        highlight = [fileio.parse_tree_arg(t) for t in args.tree]
        svg = render.render_svg(d, highlight)
        with open(args.output, "w") as fh:
            fh.write(svg)
        print(json.dumps({"written": args.output}))
        return 0

    raise AssertionError("unreachable")


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except InternalInvariantViolated as ex:
        _emit_error("internal-invariant-violated", ex)
        return 3
    except (MethodInapplicable,) + _INAPPLICABLE as ex:
        _emit_error("method-inapplicable", ex)
        return 2
    except (TreespanError, OSError, json.JSONDecodeError, ValueError) as ex:
        _emit_error("invalid-input", ex)
        return 1


def _emit_error(kind: str, ex: Exception) -> None:
    print(json.dumps({"error": kind, "type": type(ex).__name__,
                      "message": str(ex)}), file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
