"""Explicit layerings and drawings, each shipped with its verification.

Hub drawings
------------
Four *inner* singletons a, b, c, d and every tripleton sit in a small central
cluster; the remaining *outer* singletons sit far away in antipodal pairs.
The hub layer holds every edge touching an inner singleton.  Its graph is the
cube on {a, b, c, d} (drawn as two nested diamonds), plus, for each pair of
inner singletons, two-edge paths through the cube face having that pair as
opposite corners, plus pendant tripletons hanging off single inner
singletons.  Each antipodal outer pair gets one layer of its own: its edges
run almost parallel to the pair's axis, so they stay apart once the cluster
points have distinct offsets from that axis and the pair is far enough out.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .classify import (CrossingCharacter, InnerOuter, clockwise_numbering, crossing_character,
                       edge_roles, inner_outer, is_coherent)
from .drawings import CrossingReport, LayeredDrawing, crossing_report
from .errors import InvalidParametersError
from .geometry import Point
from .graphs import generate_incidence_graph, incidence_subgraph


@dataclass
class ConstructionResult:
    artifact: object
    verified: bool
    report: CrossingReport
    layers: int

    def to_json(self) -> dict:
        return {"verified": self.verified, "layers": self.layers, "report": self.report.to_json()}


def thickness3_layering(n: int) -> tuple[int, ...]:
    """Layer of each edge of G_3(n): Low/Middle/High under identity numbering -> 0/1/2."""
    if n < 3:
        raise InvalidParametersError("need n >= 3")
    g = generate_incidence_graph(3, n)
    layers = []
    for u, v in g.edges:
        s, t = (u, v) if g.is_singleton(u) else (v, u)
        members = g.vertices[t].members
        layers.append(members.index(g.vertices[s].members[0]))
    return tuple(layers)


# --- hub drawings -----------------------------------------------------------

F = Fraction

# nested-diamond cube; keys are the labels a, b, c, d and T_x (tripleton missing x)
_CUBE = {
    "a": (F(-4), F(0)), "c": (F(4), F(0)),
    "Tb": (F(0), F(-4)), "Td": (F(0), F(4)),
    "Tc": (F(-1), F(0)), "d": (F(0), F(-1)),
    "Ta": (F(1), F(0)), "b": (F(0), F(1)),
}

# for each inner pair, where to string its two-edge paths: base point and step
_PATHS = {
    ("a", "c"): ((F(0), F(4)), (F(0), F(1))),          # outer face, above Td
    ("b", "d"): ((F(0), F(0)), (F(1), F(0))),          # inner diamond
    ("a", "d"): ((F(-2), F(-1, 2)), (F(1), F(4))),     # face a, Tb, d, Tc
    ("c", "d"): ((F(2), F(-1, 2)), (F(-1), F(4))),     # face Tb, c, Ta, d
    ("b", "c"): ((F(2), F(1, 2)), (F(1), F(4))),       # face c, Td, b, Ta
    ("a", "b"): ((F(-2), F(1, 2)), (F(-1), F(4))),     # face Td, a, Tc, b
}

# free direction at each inner singleton for its pendant tripletons
_PENDANT_DIR = {"a": (F(-1), F(0)), "c": (F(1), F(0)), "b": (F(1), F(2)), "d": (F(-1), F(-2))}


def _spread(count: int, width: Fraction) -> list[Fraction]:
    if count == 1:
        return [F(0)]
    return [width * (2 * F(i, count - 1) - 1) for i in range(count)]


def _hub_cluster(n: int, inner: Sequence[int]) -> dict[tuple[int, ...], tuple[Fraction, Fraction]]:
    """Cluster positions for the inner singletons and all tripletons, before the generic map."""
    labels = dict(zip("abcd", inner))
    inner_set = set(inner)
    pos: dict[tuple[int, ...], tuple[Fraction, Fraction]] = {}
    for lab in "abcd":
        pos[(labels[lab],)] = _CUBE[lab]
    for lab in "abcd":
        t = tuple(sorted(labels[x] for x in "abcd" if x != lab))
        pos[t] = _CUBE["T" + lab]

    outer = [i for i in range(n) if i not in inner_set]
    for (p, q), (base, step) in _PATHS.items():
        trips = [tuple(sorted((labels[p], labels[q], o))) for o in outer]
        if (p, q) == ("a", "c"):
            offsets = [F(i + 1) for i in range(len(trips))]
        elif (p, q) == ("b", "d"):
            offsets = _spread(len(trips), F(3, 5))
        else:
            offsets = _spread(len(trips), F(1, 12))
        for t, s in zip(trips, offsets):
            pos[t] = (base[0] + s * step[0], base[1] + s * step[1])

    eps = F(1, 4)
    for lab in "abcd":
        x = labels[lab]
        trips = [tuple(sorted((x,) + pair)) for pair in combinations(outer, 2)]
        dx, dy = _PENDANT_DIR[lab]
        ox, oy = _CUBE[lab]
        for t, s in zip(trips, _spread(len(trips), F(1, 3))):
            # fan around the free direction, perpendicular offset s
            pos[t] = (ox + eps * (dx - s * dy), oy + eps * (dy + s * dx))

    # tripletons with no inner member: a column left of everything else
    rest = [t for t in combinations(outer, 3)]
    for t, s in zip(rest, _spread(len(rest), F(3))):
        pos[t] = (F(-7), s)
    return pos


def _generic_map(p: tuple[Fraction, Fraction]) -> Point:
    # shear + rotation (20/29, 21/29): generic enough that no two cluster points
    # share an offset from any pair axis used below
    x, y = p
    x, y = x + F(1, 7) * y, y + F(1, 11) * x
    return Point(F(20, 29) * x - F(21, 29) * y, F(21, 29) * x + F(20, 29) * y)


def _circle_point(angle: float, radius: int) -> Point:
    t = F(math.tan(angle / 2)).limit_denominator(10_000)
    den = 1 + t * t
    return Point(radius * (1 - t * t) / den, radius * 2 * t / den)


def _hub_drawing(n: int, inner: Sequence[int], outer_pairs: Sequence[tuple[int, int]],
                 outer_points: dict[int, Point]) -> LayeredDrawing:
    g = generate_incidence_graph(3, n)
    cluster = _hub_cluster(n, inner)
    coords = []
    for v in g.vertices:
        m = v.members
        coords.append(outer_points[m[0]] if len(m) == 1 and m[0] in outer_points
                      else _generic_map(cluster[m]))
    inner_set = set(inner)
    layer_of_single = {}
    for k, (p, q) in enumerate(outer_pairs):
        layer_of_single[p] = layer_of_single[q] = k + 1
    layers = []
    for u, v in g.edges:
        s = g.vertices[u].members[0]
        layers.append(0 if s in inner_set else layer_of_single[s])
    return LayeredDrawing(g, tuple(coords), tuple(layers))


G38_SCALE = 10_000


def g38_geometric_drawing() -> LayeredDrawing:
    """Three-layer drawing of G_3(8): singletons 0, 2, 4, 6 on a large square."""
    L = G38_SCALE
    corners = {0: Point(-L, L), 2: Point(L, L), 4: Point(L, -L), 6: Point(-L, -L)}
    return _hub_drawing(8, (1, 3, 5, 7), ((0, 4), (2, 6)), corners)


def g3_planar_drawing_n4() -> LayeredDrawing:
    """Crossing-free one-layer drawing of the cube G_3(4)."""
    return _hub_drawing(4, (0, 1, 2, 3), (), {})


def _upper_even(n: int, scale: int) -> LayeredDrawing:
    if n == 4:
        return g3_planar_drawing_n4()
    m = n - 4
    outer = list(range(m))
    pts: dict[int, Point] = {}
    pairs = []
    for k in range(m // 2):
        # offset by a non-symmetric angle so no axis lines up with the cluster grid
        p = _circle_point(0.3 + math.pi * k / (m // 2), scale)
        pts[outer[k]] = p
        pts[outer[k + m // 2]] = Point(-p.x, -p.y)
        pairs.append((outer[k], outer[k + m // 2]))
    return _hub_drawing(n, tuple(range(m, n)), pairs, pts)


def _drop_last_singleton(d: LayeredDrawing) -> LayeredDrawing:
    g = d.graph
    n = g.n - 1
    sub = generate_incidence_graph(3, n)
    index = {v: i for i, v in enumerate(g.vertices)}
    coords = [d.coords[index[v]] for v in sub.vertices]
    edge_index = {e: i for i, e in enumerate(g.edges)}
    layers = [d.layers[edge_index[(index[sub.vertices[u]], index[sub.vertices[v]])]]
              for u, v in sub.edges]
    return LayeredDrawing(sub, tuple(coords), tuple(layers))


def upper_bound_drawing(n: int, scale: int = G38_SCALE) -> ConstructionResult:
    """Hub drawing of G_3(n) with ceil((n-2)/2) layers, verified.

    Odd n is drawn as G_3(n+1) with the last singleton removed.
    """
    if n < 4:
        raise InvalidParametersError("need n >= 4")
    d = _upper_even(n + n % 2, scale)
    if n % 2:
        d = _drop_last_singleton(d)
    target = math.ceil((n - 2) / 2)
    report = crossing_report(d)
    verified = report.crossing_free and d.layers_used == target
    return ConstructionResult(d, verified, report, d.layers_used)


# --- two-tripleton fixtures -------------------------------------------------

# hexagon, clockwise from the top
_HEXAGON = (Point(0, 4), Point(4, 2), Point(4, -2), Point(0, -4), Point(-4, -2), Point(-4, 2))
_ABC, _DEF = (0, 1, 3), (2, 4, 5)
_FIXTURE_POINTS = {
    CrossingCharacter.CONVEX: (Point(-1, -1), Point(1, 1)),
    CrossingCharacter.CONCAVE: (Point(1, 1), Point(-1, 1)),
}


def two_tripleton_inner_fixture(character: CrossingCharacter) -> LayeredDrawing:
    """Coherent inner drawing of tripletons {0,1,3} and {2,4,5} over a hexagon."""
    g = incidence_subgraph(6, 3, [_ABC, _DEF])
    p_abc, p_def = _FIXTURE_POINTS[character]
    coords = list(_HEXAGON) + [p_abc, p_def]
    base = LayeredDrawing(g, tuple(coords), (0,) * len(g.edges))
    numbering = clockwise_numbering(base, 0)
    roles = edge_roles(g, numbering)
    d = base.with_layers([roles[e].value for e in range(len(g.edges))])
    if not (is_coherent(d, numbering) and inner_outer(d) is InnerOuter.INNER):
        raise AssertionError("fixture is not a coherent inner drawing")
    got = crossing_character(d, numbering, 6, 7)
    if got is not character:
        raise AssertionError(f"fixture realises {got}, expected {character}")
    return d
