"""Layered straight-line drawings, book layouts and their verifiers."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import networkx as nx

from .errors import InvalidDrawingError, InvalidLayeringError, InvalidParametersError
from .geometry import (Point, Segment, SegmentRelation, cross, on_segment_interior,
                       properly_cross, segment_relation)
from .graphs import SimpleGraph


@dataclass(frozen=True)
class LayeredDrawing:
    graph: SimpleGraph
    coords: tuple[Point, ...]
    layers: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Point(*p) for p in self.coords))
        object.__setattr__(self, "layers", tuple(self.layers))
        if len(self.coords) != self.graph.num_vertices:
            raise InvalidParametersError("every vertex needs coordinates")
        if len(self.layers) != len(self.graph.edges):
            raise InvalidLayeringError("every edge needs a layer")
        if any(not isinstance(l, int) or l < 0 for l in self.layers):
            raise InvalidLayeringError("layer indices must be non-negative integers")

    @property
    def layer_count(self) -> int:
        return max(self.layers, default=-1) + 1

    @property
    def layers_used(self) -> int:
        return len(set(self.layers))

    def segment(self, edge_id: int) -> Segment:
        u, v = self.graph.edges[edge_id]
        return Segment(self.coords[u], self.coords[v])

    def with_layers(self, layers: Sequence[int]) -> "LayeredDrawing":
        return LayeredDrawing(self.graph, self.coords, tuple(layers))


@dataclass(frozen=True)
class BookLayout:
    graph: SimpleGraph
    order: tuple[int, ...]
    pages: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        object.__setattr__(self, "pages", tuple(self.pages))
        if sorted(self.order) != list(range(self.graph.num_vertices)):
            raise InvalidParametersError("order must be a permutation of the vertices")
        if len(self.pages) != len(self.graph.edges) or any(p < 0 for p in self.pages):
            raise InvalidLayeringError("every edge needs a non-negative page")

    @property
    def page_count(self) -> int:
        return len(set(self.pages))


@dataclass
class CrossingReport:
    duplicates: list[tuple[int, int]] = field(default_factory=list)
    vertex_on_edge: list[tuple[int, int]] = field(default_factory=list)
    overlaps: list[tuple[int, int]] = field(default_factory=list)
    crossings: list[tuple[int, int, int]] = field(default_factory=list)
    layer_sizes: dict[int, int] = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return not (self.duplicates or self.vertex_on_edge or self.overlaps)

    @property
    def crossing_free(self) -> bool:
        return self.valid and not self.crossings

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "crossing_free": self.crossing_free,
            "duplicates": [list(p) for p in self.duplicates],
            "vertex_on_edge": [list(p) for p in self.vertex_on_edge],
            "overlaps": [list(p) for p in self.overlaps],
            "crossings": [list(c) for c in self.crossings],
            "layer_sizes": {str(k): v for k, v in sorted(self.layer_sizes.items())},
        }


def _bbox(a: Point, b: Point):
    return (min(a.x, b.x), min(a.y, b.y), max(a.x, b.x), max(a.y, b.y))


def _boxes_meet(p, q) -> bool:
    return p[0] <= q[2] and q[0] <= p[2] and p[1] <= q[3] and q[1] <= p[3]


def _layer_sizes(layers: Sequence[int]) -> dict[int, int]:
    sizes: dict[int, int] = {}
    for l in layers:
        sizes[l] = sizes.get(l, 0) + 1
    return sizes


def validate_drawing(d: LayeredDrawing) -> CrossingReport:
    """Report duplicate points, vertices inside edges and overlapping edges."""
    report = CrossingReport(layer_sizes=_layer_sizes(d.layers))
    first_at: dict[Point, int] = {}
    for v, p in enumerate(d.coords):
        if p in first_at:
            report.duplicates.append((first_at[p], v))
        else:
            first_at[p] = v

    edges = d.graph.edges
    boxes = [_bbox(d.coords[u], d.coords[v]) for u, v in edges]
    for e, (u, v) in enumerate(edges):
        a, b = d.coords[u], d.coords[v]
        bx = boxes[e]
        for w, p in enumerate(d.coords):
            if w == u or w == v:
                continue
            if bx[0] <= p.x <= bx[2] and bx[1] <= p.y <= bx[3] and on_segment_interior(p, a, b):
                report.vertex_on_edge.append((w, e))
    segs = [d.segment(e) for e in range(len(edges))]
    for e in range(len(edges)):
        a, b = segs[e]
        for f in range(e + 1, len(edges)):
            if not _boxes_meet(boxes[e], boxes[f]):
                continue
            c, dd = segs[f]
            if cross(a, b, c) == 0 and cross(a, b, dd) == 0:
                if segment_relation(segs[e], segs[f]) is SegmentRelation.OVERLAPPING:
                    report.overlaps.append((e, f))
    return report


def same_layer_crossings(d: LayeredDrawing) -> list[tuple[int, int, int]]:
    """All ProperCrossing pairs (e, f, layer) with e < f, without validity checks."""
    by_layer: dict[int, list[int]] = {}
    for e, l in enumerate(d.layers):
        by_layer.setdefault(l, []).append(e)
    out = []
    for l in sorted(by_layer):
        ids = by_layer[l]
        segs = [d.segment(e) for e in ids]
        boxes = [_bbox(*s) for s in segs]
        for i in range(len(ids)):
            a, b = segs[i]
            for j in range(i + 1, len(ids)):
                if _boxes_meet(boxes[i], boxes[j]) and properly_cross(a, b, *segs[j]):
                    out.append((ids[i], ids[j], l))
    out.sort()
    return out


def layer_crossings(d: LayeredDrawing) -> CrossingReport:
    report = validate_drawing(d)
    if not report.valid:
        raise InvalidDrawingError("drawing is invalid; see validate_drawing")
    report.crossings = same_layer_crossings(d)
    return report


def crossing_report(d: LayeredDrawing) -> CrossingReport:
    """Like ``layer_crossings`` but never raises: invalid drawings get no crossing scan."""
    report = validate_drawing(d)
    if report.valid:
        report.crossings = same_layer_crossings(d)
    return report


def verify_geometric_thickness_witness(d: LayeredDrawing, t: int) -> bool:
    if d.layers_used > t:
        return False
    return crossing_report(d).crossing_free


def book_crossings(bl: BookLayout) -> list[tuple[int, int]]:
    """Same-page edge pairs whose chords interleave in the circular order."""
    pos = {v: i for i, v in enumerate(bl.order)}
    edges = bl.graph.edges
    out = []
    for e in range(len(edges)):
        for f in range(e + 1, len(edges)):
            if bl.pages[e] == bl.pages[f] and chords_interleave(pos, edges[e], edges[f]):
                out.append((e, f))
    return out


def chords_interleave(pos, e, f) -> bool:
    u, v = e
    x, y = f
    if len({u, v, x, y}) < 4:
        return False
    lo, hi = sorted((pos[u], pos[v]))
    return (lo < pos[x] < hi) != (lo < pos[y] < hi)


def verify_book_witness(bl: BookLayout, t: int) -> bool:
    return bl.page_count <= t and not book_crossings(bl)


def is_planar(g: SimpleGraph) -> bool:
    m = len(g.edges)
    if g.num_vertices >= 3 and m > 3 * g.num_vertices - 6:
        return False
    h = nx.Graph()
    h.add_nodes_from(range(g.num_vertices))
    h.add_edges_from(g.edges)
    planar, _ = nx.check_planarity(h)
    return planar


def verify_thickness_layering(g: SimpleGraph, layer_of: Sequence[int], t: int) -> bool:
    if len(layer_of) != len(g.edges) or any(l is None for l in layer_of):
        raise InvalidLayeringError("every edge must be assigned a layer")
    groups: dict[int, list[int]] = {}
    for e, l in enumerate(layer_of):
        groups.setdefault(l, []).append(e)
    if len(groups) > t:
        return False
    return all(is_planar(g.edge_subgraph(ids)) for ids in groups.values())
