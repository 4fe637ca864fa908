"""Classification of drawings of G_3(n): numbering, edge roles, coherence, types.

The singleton hull stands in for the strictly convex curve through the
singletons.  A tripleton strictly inside the hull is interior to every such
curve; a tripleton strictly outside it is exterior to a curve hugging the
hull closely enough.  Boundary contact is reported as ``Degenerate``.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .drawings import LayeredDrawing, verify_geometric_thickness_witness
from .errors import (DegenerateInputError, DegenerateTypeError, GeothickError,
                     LemmaViolationError, NoReflexAngleError, NotConvexPositionError,
                     PreconditionError, WrongArityError)
from .geometry import (HullLocation, convex_hull, in_strictly_convex_position,
                       point_vs_hull, properly_cross, reflex_gap_order)
from .graphs import IncidenceGraph

TYPE_SYMBOLS = ("012", "021", "102", "120", "201", "210")
NON_UNIFORM = "NonUniform"


class Role(Enum):
    LOW = 0
    MIDDLE = 1
    HIGH = 2


class InnerOuter(Enum):
    INNER = "Inner"
    OUTER = "Outer"
    MIXED = "Mixed"
    DEGENERATE = "Degenerate"


class CrossingCharacter(Enum):
    CONVEX = "Convex"
    CONCAVE = "Concave"


@dataclass(frozen=True)
class SingletonNumbering:
    ordering: tuple[int, ...]  # singleton vertex indices, clockwise
    start: int

    def number(self, vertex: int) -> int:
        return self.ordering.index(vertex)

    def numbers(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.ordering)}


def _incidence(d: LayeredDrawing) -> IncidenceGraph:
    g = d.graph
    if not isinstance(g, IncidenceGraph):
        raise WrongArityError("classification needs an incidence graph")
    if g.k != 3:
        raise WrongArityError(f"classification needs k = 3, got k = {g.k}")
    return g


def singleton_hull(d: LayeredDrawing) -> list:
    g = _incidence(d)
    pts = [d.coords[v] for v in g.singletons]
    if not in_strictly_convex_position(pts):
        raise NotConvexPositionError("singletons are not in strictly convex position")
    return convex_hull(pts)


def clockwise_numbering(d: LayeredDrawing, start: int) -> SingletonNumbering:
    """Number the singletons clockwise around their hull beginning at ``start``.

    ``start`` is a vertex index of a singleton.
    """
    g = _incidence(d)
    singles = g.singletons
    if start not in singles:
        raise PreconditionError(f"vertex {start} is not a singleton")
    hull = singleton_hull(d)
    at = {d.coords[v]: v for v in singles}
    cw = [at[p] for p in reversed(hull)]
    i = cw.index(start)
    return SingletonNumbering(tuple(cw[i:] + cw[:i]), start)


def edge_roles(g: IncidenceGraph, numbering: SingletonNumbering) -> dict[int, Role]:
    """Role of every edge: per tripleton, the lowest-numbered singleton is Low."""
    if g.k != 3:
        raise WrongArityError(f"edge roles need k = 3, got k = {g.k}")
    num = numbering.numbers()
    by_tripleton: dict[int, list[tuple[int, int]]] = {}
    for e, (u, v) in enumerate(g.edges):
        s, t = (u, v) if g.is_singleton(u) else (v, u)
        by_tripleton.setdefault(t, []).append((num[s], e))
    roles = {}
    for incident in by_tripleton.values():
        for role, (_, e) in zip(Role, sorted(incident)):
            roles[e] = role
    return roles


def tripleton_edges(g: IncidenceGraph, numbering: SingletonNumbering) -> dict[int, dict[Role, int]]:
    """Map tripleton vertex -> {role: edge id}."""
    roles = edge_roles(g, numbering)
    out: dict[int, dict[Role, int]] = {}
    for e, role in roles.items():
        u, v = g.edges[e]
        t = v if g.is_singleton(u) else u
        out.setdefault(t, {})[role] = e
    return out


def is_convex_drawing(d: LayeredDrawing) -> bool:
    g = _incidence(d)
    if not in_strictly_convex_position([d.coords[v] for v in g.singletons]):
        return False
    return verify_geometric_thickness_witness(d, 3)


def roles_match_layers(d: LayeredDrawing, numbering: SingletonNumbering) -> bool:
    """Layer partition equals the Low/Middle/High partition up to relabelling."""
    roles = edge_roles(_incidence(d), numbering)
    layer_of_role: dict[Role, set[int]] = {}
    for e, role in roles.items():
        layer_of_role.setdefault(role, set()).add(d.layers[e])
    if any(len(s) != 1 for s in layer_of_role.values()):
        return False
    used = [next(iter(s)) for s in layer_of_role.values()]
    return len(set(used)) == len(used)


def is_coherent(d: LayeredDrawing, numbering: SingletonNumbering) -> bool:
    return roles_match_layers(d, numbering) and is_convex_drawing(d)


def coherent_starts(d: LayeredDrawing) -> list[int]:
    """Singleton vertices whose choice as start makes the drawing coherent."""
    g = _incidence(d)
    if not is_convex_drawing(d):
        return []
    return [s for s in g.singletons if roles_match_layers(d, clockwise_numbering(d, s))]


def hull_locations(d: LayeredDrawing) -> dict[int, HullLocation]:
    g = _incidence(d)
    hull = singleton_hull(d)
    return {t: point_vs_hull(d.coords[t], hull) for t in g.ksets}


def inner_outer(d: LayeredDrawing) -> InnerOuter:
    """Inner/Outer/Mixed/Degenerate status of the tripletons against the singleton hull.

    A drawing without tripletons is reported as Degenerate.
    """
    locs = set(hull_locations(d).values())
    if not locs or HullLocation.BOUNDARY in locs:
        return InnerOuter.DEGENERATE
    if locs == {HullLocation.INSIDE}:
        return InnerOuter.INNER
    if locs == {HullLocation.OUTSIDE}:
        return InnerOuter.OUTER
    return InnerOuter.MIXED


def tripleton_type(d: LayeredDrawing, numbering: SingletonNumbering, t: int) -> str:
    g = _incidence(d)
    if g.is_singleton(t):
        raise PreconditionError(f"vertex {t} is not a tripleton")
    if point_vs_hull(d.coords[t], singleton_hull(d)) is not HullLocation.OUTSIDE:
        raise DegenerateTypeError(f"tripleton {g.vertices[t]} is not strictly outside the hull")
    edges = tripleton_edges(g, numbering)[t]
    ends = []
    for role in Role:
        u, v = g.edges[edges[role]]
        ends.append(u if v == t else v)
    try:
        order = reflex_gap_order(d.coords[t], [d.coords[s] for s in ends])
    except (NoReflexAngleError, DegenerateInputError) as exc:
        raise DegenerateTypeError(str(exc)) from exc
    # ends[i] carries role i; the symbol lists roles in clockwise order
    return "".join(str(i) for i in order)


def drawing_type(d: LayeredDrawing, numbering: SingletonNumbering) -> str:
    types = {tripleton_type(d, numbering, t) for t in _incidence(d).ksets}
    return types.pop() if len(types) == 1 else NON_UNIFORM


def crossing_character(d: LayeredDrawing, numbering: SingletonNumbering,
                       abc: int, def_: int, check: bool = True) -> CrossingCharacter:
    """Which of Low(abc) x High(def) or High(abc) x Low(def) occurs.

    Requires a < d < c < f in the numbering, where a, c are the lowest and
    highest singletons of ``abc`` and d, f those of ``def_``.
    """
    g = _incidence(d)
    edges = tripleton_edges(g, numbering)
    num = numbering.numbers()

    def ends(t):
        nums = sorted(num[s] for s in g.vertices[t].members)
        return nums[0], nums[-1]

    if abc not in edges or def_ not in edges:
        raise PreconditionError("both arguments must be tripletons")
    a, c = ends(abc)
    dd, f = ends(def_)
    if not a < dd < c < f:
        raise PreconditionError(f"need a < d < c < f, got a={a}, d={dd}, c={c}, f={f}")
    if check:
        if not is_coherent(d, numbering):
            raise PreconditionError("drawing is not a valid coherent drawing")
        if inner_outer(d) is not InnerOuter.INNER:
            raise PreconditionError("drawing is not inner")

    def crosses(e, f_):
        return properly_cross(*d.segment(e), *d.segment(f_))

    convex = crosses(edges[abc][Role.LOW], edges[def_][Role.HIGH])
    concave = crosses(edges[abc][Role.HIGH], edges[def_][Role.LOW])
    if convex == concave:
        raise LemmaViolationError("expected exactly one low/high crossing, found "
                                  + ("both" if convex else "neither"))
    return CrossingCharacter.CONVEX if convex else CrossingCharacter.CONCAVE


@dataclass
class ClassificationReport:
    numbering: SingletonNumbering
    convex: bool
    coherent: bool
    inner_outer: InnerOuter
    types: dict[int, Optional[str]]
    drawing_type: Optional[str]
    roles: dict[int, Role]

    def to_json(self, g: IncidenceGraph) -> dict:
        return {
            "numbering": [g.vertices[v].members[0] for v in self.numbering.ordering],
            "convex": self.convex,
            "coherent": self.coherent,
            "inner_outer": self.inner_outer.value,
            "types": {repr(g.vertices[t]): ty for t, ty in sorted(self.types.items())},
            "drawing_type": self.drawing_type,
            "roles": [self.roles[e].name for e in sorted(self.roles)],
        }


def classify(d: LayeredDrawing, start: Optional[int] = None) -> ClassificationReport:
    """Full report; per-tripleton types are None where the type is undefined."""
    g = _incidence(d)
    if start is None:
        start = g.singletons[0]
    numbering = clockwise_numbering(d, start)
    convex = is_convex_drawing(d)
    coherent = convex and roles_match_layers(d, numbering)
    status = inner_outer(d)
    types: dict[int, Optional[str]] = {}
    for t in g.ksets:
        try:
            types[t] = tripleton_type(d, numbering, t)
        except GeothickError:
            types[t] = None
    seen = set(types.values())
    if not types or None in seen:
        dtype = None
    else:
        dtype = seen.pop() if len(seen) == 1 else NON_UNIFORM
    return ClassificationReport(numbering, convex, coherent, status, types, dtype,
                                edge_roles(g, numbering))
