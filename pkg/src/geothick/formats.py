"""JSON file formats for graphs, drawings, book layouts and layerings.

Incidence graphs use ``{"k", "n", "vertices": [[members]...], "edges"}`` and
are written in canonical order; any vertex order is accepted on read and
renumbered canonically.  Plain graphs (K4, cycles, ...) use
``{"vertices": count, "edges"}``.  Coordinates are rational strings "p/q".
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Sequence, Union

from .drawings import BookLayout, LayeredDrawing
from .errors import FileFormatError, GeothickError
from .geometry import Point, format_rational, parse_rational
from .graphs import IncidenceGraph, SimpleGraph, incidence_subgraph

PathLike = Union[str, Path]


def dumps(doc: Any) -> str:
    """Deterministic JSON text."""
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def read_json(path: PathLike) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise FileFormatError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path}: invalid JSON ({exc.msg})") from exc


def write_json(path: PathLike, doc: Any) -> None:
    try:
        Path(path).write_text(dumps(doc), encoding="utf-8")
    except OSError as exc:
        raise FileFormatError(f"cannot write {path}: {exc.strerror}") from exc


# --- graphs -----------------------------------------------------------------

def graph_to_json(g: SimpleGraph) -> dict:
    if isinstance(g, IncidenceGraph):
        return {"k": g.k, "n": g.n,
                "vertices": [list(v.members) for v in g.vertices],
                "edges": [list(e) for e in g.edges]}
    return {"vertices": g.num_vertices, "edges": [list(e) for e in g.edges]}


def _edge_list(doc: dict) -> list[tuple[int, int]]:
    try:
        return [(int(u), int(v)) for u, v in doc["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise FileFormatError("graph needs an 'edges' list of index pairs") from exc


def graph_from_json(doc: Any) -> tuple[SimpleGraph, list[int]]:
    """Parse a graph; also return ``perm`` mapping file vertex index -> graph index."""
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise FileFormatError("graph document needs 'vertices'")
    edges = _edge_list(doc)
    try:
        if "k" not in doc:
            count = int(doc["vertices"])
            return SimpleGraph(count, tuple(edges)), list(range(count))
        k, n = int(doc["k"]), int(doc["n"])
        members = [tuple(sorted(int(m) for m in v)) for v in doc["vertices"]]
        g = incidence_subgraph(n, k, [m for m in members if len(m) == k])
        index = {v.members: i for i, v in enumerate(g.vertices)}
        if sorted(members) != sorted(index) or len(set(members)) != len(members):
            raise FileFormatError("vertex list must hold every singleton and distinct k-sets")
        perm = [index[m] for m in members]
        mapped = {tuple(sorted((perm[u], perm[v]))) for u, v in edges}
        if len(mapped) != len(edges) or mapped != {tuple(sorted(e)) for e in g.edges}:
            raise FileFormatError("edges must be exactly the containment pairs")
        return g, perm
    except GeothickError as exc:
        if isinstance(exc, FileFormatError):
            raise
        raise FileFormatError(str(exc)) from exc
    except (TypeError, ValueError, IndexError) as exc:
        raise FileFormatError(f"malformed graph: {exc}") from exc


def _edge_permutation(g: SimpleGraph, perm: Sequence[int], file_edges) -> list[int]:
    """file edge position -> graph edge id."""
    where = {frozenset(e): i for i, e in enumerate(g.edges)}
    try:
        return [where[frozenset((perm[u], perm[v]))] for u, v in file_edges]
    except (KeyError, IndexError) as exc:
        raise FileFormatError("edge does not belong to the graph") from exc


def load_graph(path: PathLike) -> SimpleGraph:
    doc = read_json(path)
    if isinstance(doc, dict) and "graph" in doc:
        doc = doc["graph"]
    return graph_from_json(doc)[0]


def save_graph(path: PathLike, g: SimpleGraph) -> None:
    write_json(path, graph_to_json(g))


# --- coordinates and drawings ----------------------------------------------

def coords_to_json(coords: Sequence[Point]) -> list[list[str]]:
    return [[format_rational(p.x), format_rational(p.y)] for p in coords]


def coords_from_json(raw: Any) -> list[Point]:
    if isinstance(raw, dict):
        raw = raw.get("coords")
    try:
        return [Point(parse_rational(str(x)), parse_rational(str(y))) for x, y in raw]
    except (TypeError, ValueError) as exc:
        raise FileFormatError(f"bad coordinate list: {exc}") from exc


def drawing_to_json(d: LayeredDrawing) -> dict:
    return {"graph": graph_to_json(d.graph), "coords": coords_to_json(d.coords),
            "layers": list(d.layers)}


def drawing_from_json(doc: Any) -> LayeredDrawing:
    if not isinstance(doc, dict) or not {"graph", "coords", "layers"} <= doc.keys():
        raise FileFormatError("drawing needs 'graph', 'coords' and 'layers'")
    g, perm = graph_from_json(doc["graph"])
    raw_coords = coords_from_json(doc["coords"])
    raw_layers = doc["layers"]
    file_edges = _edge_list(doc["graph"])
    if len(raw_coords) != g.num_vertices or not isinstance(raw_layers, list) \
            or len(raw_layers) != len(file_edges):
        raise FileFormatError("coords/layers do not match the graph")
    coords: list = [None] * g.num_vertices
    for i, p in enumerate(raw_coords):
        coords[perm[i]] = p
    layers: list = [None] * len(g.edges)
    for i, e in enumerate(_edge_permutation(g, perm, file_edges)):
        layers[e] = raw_layers[i]
    try:
        return LayeredDrawing(g, tuple(coords), tuple(layers))
    except GeothickError as exc:
        raise FileFormatError(str(exc)) from exc


def load_drawing(path: PathLike) -> LayeredDrawing:
    return drawing_from_json(read_json(path))


def save_drawing(path: PathLike, d: LayeredDrawing) -> None:
    write_json(path, drawing_to_json(d))


# --- book layouts and abstract layerings ------------------------------------

def book_to_json(bl: BookLayout) -> dict:
    return {"graph": graph_to_json(bl.graph), "order": list(bl.order), "pages": list(bl.pages)}


def book_from_json(doc: Any) -> BookLayout:
    if not isinstance(doc, dict) or not {"graph", "order", "pages"} <= doc.keys():
        raise FileFormatError("book layout needs 'graph', 'order' and 'pages'")
    g, perm = graph_from_json(doc["graph"])
    try:
        order = [perm[int(v)] for v in doc["order"]]
        pages: list = [None] * len(g.edges)
        for i, e in enumerate(_edge_permutation(g, perm, _edge_list(doc["graph"]))):
            pages[e] = int(doc["pages"][i])
        return BookLayout(g, tuple(order), tuple(pages))
    except (GeothickError, TypeError, ValueError, IndexError) as exc:
        raise FileFormatError(f"malformed book layout: {exc}") from exc


def layering_to_json(g: SimpleGraph, layers: Sequence[int]) -> dict:
    return {"graph": graph_to_json(g), "layers": list(layers)}


def layering_from_json(doc: Any) -> tuple[SimpleGraph, list[int]]:
    if not isinstance(doc, dict) or not {"graph", "layers"} <= doc.keys():
        raise FileFormatError("layering needs 'graph' and 'layers'")
    g, perm = graph_from_json(doc["graph"])
    raw = doc["layers"]
    file_edges = _edge_list(doc["graph"])
    if not isinstance(raw, list) or len(raw) != len(file_edges):
        raise FileFormatError("one layer per edge required")
    layers: list = [None] * len(g.edges)
    for i, e in enumerate(_edge_permutation(g, perm, file_edges)):
        if not isinstance(raw[i], int):
            raise FileFormatError("layers must be integers")
        layers[e] = raw[i]
    return g, layers
