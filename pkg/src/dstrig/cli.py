"""Command line front end: classify, area, random, verify, plot.

Triangle documents are JSON objects:

    {"schema": 1, "signature": "-++", "vertices": [[x0,x1,x2], ...]}

classify and area accept one document or one per line; random emits one
document per line so its output pipes straight back in.  Exit codes:
0 success, 2 invalid input or usage, 3 degenerate triangle, 4 area of a
non-contractible triangle, 5 null or impossible edge where a traceable
one is needed, 6 sampling budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .areas import complex_area, girard_area, interior_angles
from .errors import (
    BoundaryCaseError,
    CoincidentPointsError,
    DegenerateFanError,
    DegenerateTriangleError,
    ExhaustedAttemptsError,
    GeometryError,
    ImpossibleEdgeError,
    NonContractibleError,
    NonConvergentError,
    NotUnitError,
    NullEdgeError,
    UnsupportedKindError,
    UnsupportedTriangleTypeError,
)
from .geodesics import DeSitterPoint, SegmentKind, classify_segment, geodesic_point
from .minkowski import mink_inner
from .oracle import GeneratorConfig, integrate_area, random_triangle, verify_type
from .triangles import (
    ProperName,
    TriangleKind,
    build_triangle,
    classify_triangle,
    polar_triangle,
    triangle_name,
)

SCHEMA = 1
SIGNATURE = "-++"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DEGENERATE = 3
EXIT_NON_CONTRACTIBLE = 4
EXIT_UNTRACEABLE = 5
EXIT_EXHAUSTED = 6

_TARGETS = {
    "spatiolateral": ProperName.SPATIOLATERAL,
    "tempolateral": ProperName.TEMPOLATERAL,
    "chorosceles": ProperName.CHOROSCELES,
    "chronosceles": ProperName.CHRONOSCELES,
}


class DocumentError(Exception):
    """Invalid triangle document."""


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _parse_documents(text: str) -> list[dict]:
    text = text.strip()
    if not text:
        raise DocumentError("empty input")
    if text.startswith("["):
        raise DocumentError("expected an object per document, not a JSON array")
    docs = []
    if "\n" in text and not text.startswith("{\n"):
        chunks = [line for line in text.splitlines() if line.strip()]
    else:
        chunks = [text]
    try:
        for chunk in chunks:
            docs.append(json.loads(chunk))
    except json.JSONDecodeError:
        # Fall back to one pretty-printed document spanning many lines.
        try:
            docs = [json.loads(text)]
        except json.JSONDecodeError as exc:
            raise DocumentError(f"not valid JSON: {exc}") from exc
    return docs


def _document_points(doc: dict) -> tuple[DeSitterPoint, DeSitterPoint, DeSitterPoint]:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    if doc.get("schema") != SCHEMA:
        raise DocumentError(f"unsupported schema: {doc.get('schema')!r}")
    sig = doc.get("signature", SIGNATURE)
    if sig != SIGNATURE:
        raise DocumentError(f"unsupported signature: {sig!r}")
    rows = doc.get("vertices")
    if not isinstance(rows, list) or len(rows) != 3:
        raise DocumentError("vertices must be a list of three rows")
    points = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != 3 \
                or not all(isinstance(x, (int, float)) for x in row):
            raise DocumentError(f"vertex row {i + 1} must hold three numbers")
        v = np.array(row, dtype=float)
        if not np.all(np.isfinite(v)):
            raise DocumentError(f"vertex row {i + 1} has non-finite components")
        q = mink_inner(v, v)
        try:
            points.append(DeSitterPoint(v))
        except NotUnitError:
            raise DocumentError(
                f"vertex row {i + 1} is off the quadric: <v,v> = {q!r}") from None
    return tuple(points)


def _triangle_document(points, metadata: dict | None = None) -> dict:
    doc = {
        "schema": SCHEMA,
        "signature": SIGNATURE,
        "vertices": [[float(x) for x in p.v] for p in points],
    }
    if metadata:
        doc["metadata"] = metadata
    return doc


def _edge_report(points) -> list[dict]:
    report = []
    for j in range(3):
        k, l = (j + 1) % 3, (j + 2) % 3
        seg = classify_segment(points[k], points[l])
        entry = {
            "opposite_vertex": j,
            "endpoints": [k, l],
            "inner_product": mink_inner(points[k].v, points[l].v),
            "kind": seg.kind.value,
        }
        if seg.kind in (SegmentKind.ELLIPSE_PART, SegmentKind.HYPERBOLA_PART):
            entry["length"] = seg.separation
        report.append(entry)
    return report


def _classify_report(points) -> dict:
    kind = classify_triangle(*points)
    report = {
        "schema": SCHEMA,
        "kind": kind.kind.value,
        "edge_counts": list(kind.edge_counts),
        "proper_name": kind.proper_name.value,
        "contractible": kind.contractible,
        "edges": _edge_report(points),
    }
    if kind.kind is TriangleKind.PROPER_DE_SITTER \
            and kind.proper_name in _TARGETS.values():
        tri = build_triangle(*points)
        polar = polar_triangle(tri)
        report["polar_triangle"] = {
            "vertices": [[float(x) for x in v] for v in polar.vertices],
            "kinds": [k.value for k in polar.kinds],
        }
    return report


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def cmd_classify(args) -> int:
    docs = _parse_documents(_read_text(args.input))
    for doc in docs:
        _emit(_classify_report(_document_points(doc)))
    return EXIT_OK


def cmd_area(args) -> int:
    docs = _parse_documents(_read_text(args.input))
    for doc in docs:
        points = _document_points(doc)
        tri = build_triangle(*points)
        res = girard_area(tri)
        angles = interior_angles(tri)
        nabla = complex_area(tri)
        report = {
            "schema": SCHEMA,
            "proper_name": triangle_name(tri).value,
            "real_area": res.real_area,
            "complex_area": {"re": nabla.real, "im": nabla.imag},
            "formula_used": res.formula_used.value,
            "distinguished_vertex": res.distinguished_vertex,
            "angles": [
                {"vertex": j, "theta": angles.theta[j],
                 "phi": {"re": angles.phi[j].value.real, "im": angles.phi[j].value.imag},
                 "branch": angles.phi[j].branch.value}
                for j in range(3)
            ],
        }
        if args.oracle:
            orc = integrate_area(tri, n=args.grid)
            report["oracle"] = {
                "area": orc.area,
                "est_error": orc.est_error,
                "grid": list(orc.grid),
                "refinements": orc.refinements,
                "discrepancy": abs(orc.area - res.real_area),
            }
        _emit(report)
    return EXIT_OK


def cmd_random(args) -> int:
    target = _TARGETS[args.type]
    rows = []
    for i in range(args.count):
        cfg = GeneratorConfig(seed=args.seed + i, target=target,
                              u_max=args.u_max, max_attempts=args.max_attempts)
        tri = random_triangle(cfg)
        meta = {"name": f"{args.type}-{i}", "seed": args.seed + i, "type": args.type}
        rows.append((tri, meta))
    if args.format == "csv":
        header = ["name", "seed", "type"] + [f"p{i}_x{c}" for i in (1, 2, 3) for c in (0, 1, 2)]
        sys.stdout.write(",".join(header) + "\n")
        for tri, meta in rows:
            cells = [meta["name"], str(meta["seed"]), meta["type"]]
            cells += [repr(float(x)) for p in tri.points for x in p.v]
            sys.stdout.write(",".join(cells) + "\n")
    else:
        for tri, meta in rows:
            _emit(_triangle_document(tri.points, meta))
    return EXIT_OK


def cmd_verify(args) -> int:
    targets = list(_TARGETS.values()) if args.type == "all" else [_TARGETS[args.type]]
    reports = {}
    ok = True
    for target in targets:
        rep = verify_type(target, trials=args.trials, seed=args.seed,
                          grid=args.grid, corrupt_normals=args.corrupt_normals)
        reports[target.value] = rep
        ok = ok and rep["passed"]
    _emit({"schema": SCHEMA, "types": reports, "passed": ok})
    return EXIT_OK if ok else 1


_EDGE_STYLE = {
    SegmentKind.ELLIPSE_PART: ("spacelike", "#2166ac"),
    SegmentKind.HYPERBOLA_PART: ("timelike", "#b2182b"),
}


def cmd_plot(args) -> int:
    docs = _parse_documents(_read_text(args.input))
    if len(docs) != 1:
        raise DocumentError("plot expects exactly one document")
    points = _document_points(docs[0])
    classify_triangle(*points)  # surfaces degenerate input first
    segs = [classify_segment(points[(j + 1) % 3], points[(j + 2) % 3]) for j in range(3)]
    for seg in segs:
        if seg.kind not in _EDGE_STYLE:
            raise UnsupportedKindError(f"cannot trace a {seg.kind.value} edge")

    # Orthographic projection dropping the time coordinate.
    polylines = []
    for seg in segs:
        ts = np.linspace(0.0, 1.0, args.samples)
        pts = [geodesic_point(seg, float(t)).v for t in ts]
        polylines.append((seg.kind, [(p[1], p[2]) for p in pts]))
    xs = [x for _, line in polylines for x, _ in line]
    ys = [y for _, line in polylines for _, y in line]
    xs += [-1.0, 1.0]
    ys += [-1.0, 1.0]
    pad = 0.15 * max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
    x0, x1 = min(xs) - pad, max(xs) + pad
    y0, y1 = min(ys) - pad, max(ys) + pad

    scale = 480.0 / max(x1 - x0, y1 - y0)
    width = (x1 - x0) * scale
    height = (y1 - y0) * scale

    def sx(x): return (x - x0) * scale
    def sy(y): return (y1 - y) * scale

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1f}" '
        f'height="{height:.1f}" viewBox="0 0 {width:.1f} {height:.1f}">',
        f'<circle cx="{sx(0):.3f}" cy="{sy(0):.3f}" r="{scale:.3f}" '
        f'fill="none" stroke="#999999" stroke-dasharray="4 3" stroke-width="1"/>',
    ]
    for kind, line in polylines:
        cls, color = _EDGE_STYLE[kind]
        coords = " ".join(f"{sx(x):.3f},{sy(y):.3f}" for x, y in line)
        parts.append(f'<polyline class="{cls}" points="{coords}" fill="none" '
                     f'stroke="{color}" stroke-width="2"/>')
    for i, p in enumerate(points):
        parts.append(f'<circle cx="{sx(p.v[1]):.3f}" cy="{sy(p.v[2]):.3f}" r="4" '
                     f'fill="#333333"/>')
        parts.append(f'<text x="{sx(p.v[1]) + 6:.3f}" y="{sy(p.v[2]) - 6:.3f}" '
                     f'font-family="sans-serif" font-size="13">p{i + 1}</text>')
    parts.append("</svg>")
    svg = "\n".join(parts) + "\n"
    if args.out == "-":
        sys.stdout.write(svg)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dstrig",
        description="Classify, measure and plot geodesic triangles on the de Sitter quadric.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="name a triangle from its edge kinds")
    p.add_argument("--input", required=True, help="JSON document path, or - for stdin")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("area", help="closed-form area with optional numeric check")
    p.add_argument("--input", required=True, help="JSON document path, or - for stdin")
    p.add_argument("--oracle", action="store_true", help="also integrate numerically")
    p.add_argument("--grid", type=_positive_int, default=64, help="oracle base grid")
    p.set_defaults(func=cmd_area)

    p = sub.add_parser("random", help="emit seeded random triangle documents")
    p.add_argument("--type", required=True, choices=sorted(_TARGETS))
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=_positive_int, default=1)
    p.add_argument("--u-max", type=float, default=2.0)
    p.add_argument("--max-attempts", type=_positive_int, default=20000)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("verify", help="run the identity checks on random triangles")
    p.add_argument("--type", default="all", choices=sorted(_TARGETS) + ["all"])
    p.add_argument("--trials", type=_positive_int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--grid", type=_positive_int, default=64)
    p.add_argument("--corrupt-normals", action="store_true",
                   help="test hook: perturb normals so identity checks fail")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("plot", help="SVG sketch, edges keyed by causal type")
    p.add_argument("--input", required=True, help="JSON document path, or - for stdin")
    p.add_argument("--out", required=True, help="output SVG path, or - for stdout")
    p.add_argument("--samples", type=_positive_int, default=128)
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DocumentError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DegenerateTriangleError, CoincidentPointsError, BoundaryCaseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except NonContractibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NON_CONTRACTIBLE
    except (NullEdgeError, ImpossibleEdgeError, UnsupportedKindError,
            UnsupportedTriangleTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNTRACEABLE
    except ExhaustedAttemptsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except (NonConvergentError, DegenerateFanError, GeometryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
