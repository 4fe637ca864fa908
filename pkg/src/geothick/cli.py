"""Command-line interface: ``geothick <command> ...``.

Exit codes: 0 success or verified, 1 verification failed or a refutation
search found a witness, 2 invalid input or parameters.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import bounds, constructions, formats, search
from .classify import CrossingCharacter, TYPE_SYMBOLS, classify
from .drawings import (crossing_report, verify_book_witness, book_crossings,
                       verify_geometric_thickness_witness, verify_thickness_layering)
from .errors import GeothickError
from .graphs import IncidenceGraph, generate_incidence_graph
from .svg import render_svg

EXIT_OK, EXIT_FAILED, EXIT_INVALID = 0, 1, 2


@dataclass
class CommandOutcome:
    code: int
    summary: str
    payload: Optional[dict] = None
    artifact: Optional[str] = None  # file text for commands that produce one


# --- commands ---------------------------------------------------------------

def cmd_gen(args) -> CommandOutcome:
    g = generate_incidence_graph(args.k, args.n)
    return CommandOutcome(EXIT_OK, f"G_{args.k}({args.n}): {g.num_vertices} vertices, {len(g.edges)} edges",
                          artifact=formats.dumps(formats.graph_to_json(g)))


def _star_forest_layers(g: IncidenceGraph, layers: Sequence[int]) -> bool:
    seen = set()
    for (u, v), layer in zip(g.edges, layers):
        t = v if g.is_singleton(u) else u
        if (t, layer) in seen:
            return False
        seen.add((t, layer))
    return True


def cmd_construct(args) -> CommandOutcome:
    name = args.name
    if name == "layering3":
        n = args.n if args.n is not None else 10
        g = generate_incidence_graph(3, n)
        layers = constructions.thickness3_layering(n)
        ok = verify_thickness_layering(g, layers, 3) and _star_forest_layers(g, layers)
        doc = formats.layering_to_json(g, layers)
        doc["verification"] = {"verified": ok, "layers": len(set(layers)), "star_forests": ok}
        return CommandOutcome(EXIT_OK if ok else EXIT_FAILED,
                              f"layering3 n={n}: {'verified' if ok else 'NOT verified'}",
                              artifact=formats.dumps(doc))
    if name == "g38":
        d = constructions.g38_geometric_drawing()
        report = crossing_report(d)
        ok = verify_geometric_thickness_witness(d, 3)
        layers = d.layers_used
    elif name == "upper":
        if args.n is None:
            raise GeothickError("construct upper needs --n")
        result = constructions.upper_bound_drawing(args.n)
        d, report, ok, layers = result.artifact, result.report, result.verified, result.layers
    elif name == "fixture":
        character = CrossingCharacter(args.character.capitalize())
        d = constructions.two_tripleton_inner_fixture(character)
        report = crossing_report(d)
        ok = report.crossing_free
        layers = d.layers_used
    else:
        raise GeothickError(f"unknown construction {name!r}")
    doc = formats.drawing_to_json(d)
    doc["verification"] = {"verified": ok, "layers": layers, "report": report.to_json()}
    crossings = len(report.crossings)
    return CommandOutcome(EXIT_OK if ok else EXIT_FAILED,
                          f"{name}: {layers} layers, {crossings} same-layer crossings, "
                          f"{'verified' if ok else 'NOT verified'}",
                          artifact=formats.dumps(doc))


def cmd_verify(args) -> CommandOutcome:
    doc = formats.read_json(args.path)
    if args.kind == "geom":
        d = formats.drawing_from_json(doc)
        report = crossing_report(d)
        ok = verify_geometric_thickness_witness(d, args.t)
        payload = {"kind": "geom", "t": args.t, "verified": ok, "layers": d.layers_used,
                   "report": report.to_json()}
        detail = f"{len(report.crossings)} crossings" if report.valid else "invalid drawing"
    elif args.kind == "book":
        bl = formats.book_from_json(doc)
        pairs = book_crossings(bl)
        ok = verify_book_witness(bl, args.t)
        payload = {"kind": "book", "t": args.t, "verified": ok, "pages": bl.page_count,
                   "crossings": [list(p) for p in pairs]}
        detail = f"{len(pairs)} crossings"
    else:
        g, layers = formats.layering_from_json(doc)
        ok = verify_thickness_layering(g, layers, args.t)
        payload = {"kind": "abstract", "t": args.t, "verified": ok, "layers": len(set(layers))}
        detail = f"{len(set(layers))} layers"
    return CommandOutcome(EXIT_OK if ok else EXIT_FAILED,
                          f"{args.kind} t={args.t}: {'verified' if ok else 'NOT verified'} ({detail})",
                          payload)


def cmd_classify(args) -> CommandOutcome:
    d = formats.load_drawing(args.path)
    g = d.graph
    start = None
    if args.start is not None:
        if not isinstance(g, IncidenceGraph):
            raise GeothickError("classification needs an incidence graph")
        start = g.singleton_index(args.start)
    report = classify(d, start)
    payload = report.to_json(g)
    return CommandOutcome(EXIT_OK, f"coherent={payload['coherent']} inner_outer={payload['inner_outer']} "
                                   f"type={payload['drawing_type']}", payload)


def _strategy(args) -> search.Strategy:
    if args.strategy == "grid":
        return search.Grid(args.grid, args.budget)
    if args.strategy == "random":
        return search.RandomPlacement(args.seed, args.trials)
    return search.ConvexPlacement()


def cmd_search(args) -> CommandOutcome:
    kind = args.kind
    if kind == "refute":
        if args.n is None or args.type is None:
            raise GeothickError("search refute needs --n and --type")
        strategy = (search.RandomPlacement(args.seed, args.trials) if args.strategy == "random"
                    else search.Grid(args.grid))
        report = search.refute_outer_type(args.n, args.type, strategy, args.budget)
        payload = report.to_json()
        if report.witness is not None:
            payload["witness"] = formats.drawing_to_json(report.witness)
            return CommandOutcome(EXIT_FAILED, f"witness found: a crossing-free outer drawing of type "
                                               f"{args.type} (candidates {report.candidates})", payload)
        forced = sum(report.forced_crossings.values())
        return CommandOutcome(EXIT_OK, f"no witness among {report.candidates} candidates; "
                                       f"forced-crossing tally {forced}", payload)

    if args.graph is None:
        raise GeothickError(f"search {kind} needs --graph")
    g = formats.load_graph(args.graph)
    if kind == "fixed":
        if args.coords is None:
            raise GeothickError("search fixed needs --coords")
        coords = formats.coords_from_json(formats.read_json(args.coords))
        if len(coords) != g.num_vertices:
            raise GeothickError("one coordinate pair per vertex required")
        witness = search.fixed_placement_witness(g, coords, args.cap)
        if witness is None:
            return CommandOutcome(EXIT_FAILED, f"above cap {args.cap}", {"layers": None, "cap": args.cap})
        return CommandOutcome(EXIT_OK, str(witness.layers_used),
                              {"layers": witness.layers_used, "drawing": formats.drawing_to_json(witness)})
    if kind == "placement":
        result = search.geometric_thickness_upper_search(g, _strategy(args), args.cap)
        return CommandOutcome(EXIT_OK, str(result.layers),
                              {"layers": result.layers, "placements": result.placements_tried,
                               "strategy": search.describe(_strategy(args)),
                               "drawing": formats.drawing_to_json(result.drawing)})
    pages, layout = search.book_thickness_exact(g, args.cap, force=args.force)
    return CommandOutcome(EXIT_OK, str(pages), {"pages": pages, "layout": formats.book_to_json(layout)})


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise GeothickError(f"bounds {args.kind} needs {' '.join(missing)}")


def cmd_bounds(args) -> CommandOutcome:
    kind = args.kind
    if kind == "ramsey":
        _need(args, "e", "l", "c")
        values = {"ramsey": bounds.ramsey_upper(args.e, args.l, args.c)}
    elif kind == "es":
        _need(args, "k")
        values = {"es": bounds.erdos_szekeres_upper(args.k)}
    elif kind == "classes":
        _need(args, "t")
        values = {"classes": bounds.theorem_color_classes(args.t)}
    else:
        _need(args, "t", "n1")
        values = bounds.pipeline_stages(args.t, args.n1)
    text = {k: bounds.format_count(v) for k, v in values.items()}
    summary = text[kind] if len(text) == 1 else " ".join(f"{k}={v}" for k, v in text.items())
    return CommandOutcome(EXIT_OK, summary, {"kind": kind, "values": text})


def cmd_svg(args) -> CommandOutcome:
    d = formats.load_drawing(args.path)
    return CommandOutcome(EXIT_OK, f"rendered {d.graph.num_vertices} vertices, {len(d.graph.edges)} edges",
                          artifact=render_svg(d, size=args.scale, labels=args.labels,
                                              schematic=args.schematic))


# --- parser -----------------------------------------------------------------

def _globals(defaults: bool) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    kw = {} if defaults else {"default": argparse.SUPPRESS}
    p.add_argument("--out", help="write the artifact or JSON payload here", **({"default": None} | kw))
    p.add_argument("--seed", type=int, help="seed for randomized strategies", **({"default": 0} | kw))
    p.add_argument("--quiet", action="store_true", help="suppress the summary line",
                   **({"default": False} | kw))
    p.add_argument("--json", action="store_true", help="print the JSON payload on stdout",
                   **({"default": False} | kw))
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="geothick", parents=[_globals(True)],
                                     description="Incidence graphs, layered drawings and thickness tools.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = [_globals(False)]

    p = sub.add_parser("gen", parents=common, help="write G_k(n) in the graph format")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("construct", parents=common, help="build and verify a shipped construction")
    p.add_argument("name", choices=["layering3", "g38", "upper", "fixture"])
    p.add_argument("--n", type=int)
    p.add_argument("--character", choices=["convex", "concave"], default="convex")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=common, help="check a drawing, book layout or layering")
    p.add_argument("path")
    p.add_argument("--kind", choices=["geom", "book", "abstract"], default="geom")
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", parents=common, help="classify a drawing of G_3(n)")
    p.add_argument("path")
    p.add_argument("--start", type=int, help="ground-set element whose singleton gets number 0")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("search", parents=common, help="layer searches and refutation harnesses")
    p.add_argument("kind", choices=["fixed", "placement", "book", "refute"])
    p.add_argument("--graph")
    p.add_argument("--coords")
    p.add_argument("--cap", type=int, default=8)
    p.add_argument("--strategy", choices=["grid", "random", "convex"], default="grid")
    p.add_argument("--grid", type=int, default=5, help="grid resolution")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--budget", type=int, default=1_000_000)
    p.add_argument("--force", action="store_true", help="lift the book-search size guard")
    p.add_argument("--n", type=int)
    p.add_argument("--type", choices=TYPE_SYMBOLS)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("bounds", parents=common, help="Ramsey-type bound evaluators")
    p.add_argument("kind", choices=["ramsey", "es", "classes", "pipeline"])
    for flag in ("e", "l", "c", "k", "t", "n1"):
        p.add_argument(f"--{flag}", type=int)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("svg", parents=common, help="render a drawing as SVG")
    p.add_argument("path")
    p.add_argument("--scale", type=float, default=600.0, help="canvas size in pixels")
    p.add_argument("--labels", action="store_true")
    p.add_argument("--schematic", action="store_true",
                   help="compress radii logarithmically (for widely spread drawings)")
    p.set_defaults(func=cmd_svg)
    return parser


def _emit(args, outcome: CommandOutcome) -> None:
    if outcome.artifact is not None:
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(outcome.artifact)
        else:
            sys.stdout.write(outcome.artifact)
        if not args.quiet:
            print(outcome.summary, file=sys.stderr if not args.out else sys.stdout)
        return
    if args.out and outcome.payload is not None:
        formats.write_json(args.out, outcome.payload)
    if args.json and outcome.payload is not None:
        sys.stdout.write(formats.dumps(outcome.payload))
    elif not args.quiet:
        print(outcome.summary)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        outcome = args.func(args)
        _emit(args, outcome)
    except (GeothickError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return outcome.code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
