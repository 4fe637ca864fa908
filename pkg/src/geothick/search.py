"""Layer-count searches and refutation harnesses.

Nothing here claims an exact geometric thickness: placement searches return
verified upper bounds, and fixed placements get their exact minimum via
coloring of the crossing conflict graph.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterator, Optional, Sequence, Union

from .classify import (InnerOuter, Role, TYPE_SYMBOLS, clockwise_numbering, drawing_type,
                       edge_roles, inner_outer, is_coherent)
from .coloring import ConflictGraph, chromatic_number_exact, exact_coloring
from .drawings import (BookLayout, LayeredDrawing, chords_interleave, is_planar,
                       same_layer_crossings, validate_drawing,
                       verify_geometric_thickness_witness)
from .errors import (InvalidDrawingError, InvalidParametersError, SearchExhaustedError,
                     TooLargeError)
from .geometry import (HullLocation, Point, angle_sum_below_pi, convex_hull, cross, in_strictly_convex_position,
                       on_segment_interior, point_vs_hull, properly_cross, reflex_gap_order,
                       segment_relation, SegmentRelation)
from .graphs import SimpleGraph, generate_incidence_graph


# --- strategies -------------------------------------------------------------

@dataclass(frozen=True)
class Grid:
    resolution: int
    budget: int = 200_000


@dataclass(frozen=True)
class RandomPlacement:
    seed: int
    trials: int


@dataclass(frozen=True)
class ConvexPlacement:
    pass


Strategy = Union[Grid, RandomPlacement, ConvexPlacement]


def describe(strategy: Strategy) -> str:
    if isinstance(strategy, Grid):
        return f"grid({strategy.resolution})"
    if isinstance(strategy, RandomPlacement):
        return f"random({strategy.seed}, {strategy.trials})"
    return "convex"


# --- fixed placements -------------------------------------------------------

def crossing_conflict_graph(g: SimpleGraph, coords: Sequence[Point]) -> ConflictGraph:
    d = LayeredDrawing(g, tuple(coords), (0,) * len(g.edges))
    if not validate_drawing(d).valid:
        raise InvalidDrawingError("placement is not a valid drawing")
    return ConflictGraph.from_pairs(len(g.edges), ((e, f) for e, f, _ in same_layer_crossings(d)))


def min_layers_fixed_placement(g: SimpleGraph, coords: Sequence[Point], cap: int) -> Optional[int]:
    return chromatic_number_exact(crossing_conflict_graph(g, coords), cap)


def fixed_placement_witness(g: SimpleGraph, coords: Sequence[Point], cap: int) -> Optional[LayeredDrawing]:
    """Drawing with the minimum number of layers for this placement, or None above cap."""
    coloring = exact_coloring(crossing_conflict_graph(g, coords), cap)
    if coloring is None:
        return None
    return LayeredDrawing(g, tuple(coords), tuple(coloring) if coloring else ())


@dataclass
class SearchResult:
    drawing: LayeredDrawing
    layers: int
    placements_tried: int


def convex_placement(num_vertices: int) -> list[Point]:
    """Vertices on the parabola y = x^2, hence in strictly convex position."""
    return [Point(i, i * i) for i in range(num_vertices)]


def _grid_placements(num_vertices: int, resolution: int) -> Iterator[list[Point]]:
    cells = [Point(x, y) for x in range(resolution) for y in range(resolution)]
    for combo in permutations(cells, num_vertices):
        yield list(combo)


def _crossing_count(g: SimpleGraph, coords: Sequence[Point]) -> Optional[int]:
    d = LayeredDrawing(g, tuple(coords), (0,) * len(g.edges))
    if not validate_drawing(d).valid:
        return None
    return len(same_layer_crossings(d))


def _random_placements(g: SimpleGraph, seed: int, trials: int) -> Iterator[list[Point]]:
    """Seeded local search from a perturbed convex start.

    Each trial moves one vertex to a random rational point and keeps the move
    when the total crossing count does not grow.
    """
    rng = random.Random(seed)
    n = g.num_vertices
    radius = 8 * max(n, 4)
    coords = []
    for i in range(n):
        angle = 2 * math.pi * i / max(n, 1)
        coords.append(Point(round(radius * math.cos(angle)) + Fraction(rng.randint(-99, 99), 100),
                            round(radius * math.sin(angle)) + Fraction(rng.randint(-99, 99), 100)))
    current = _crossing_count(g, coords)
    for _ in range(trials):
        candidate = list(coords)
        v = rng.randrange(n)
        candidate[v] = Point(Fraction(rng.randint(-100 * radius, 100 * radius), 100),
                             Fraction(rng.randint(-100 * radius, 100 * radius), 100))
        count = _crossing_count(g, candidate)
        if count is None:
            continue
        if current is None or count <= current:
            coords, current = candidate, count
            yield coords


def geometric_thickness_upper_search(g: SimpleGraph, strategy: Strategy, cap: int) -> SearchResult:
    """Best verified layered drawing over the placements the strategy generates."""
    if isinstance(strategy, Grid):
        placements: Iterator[list[Point]] = _grid_placements(g.num_vertices, strategy.resolution)
        budget = strategy.budget
    elif isinstance(strategy, RandomPlacement):
        placements = _random_placements(g, strategy.seed, strategy.trials)
        budget = strategy.trials
    else:
        placements = iter([convex_placement(g.num_vertices)])
        budget = 1
    floor = 1 if is_planar(g) else 2
    best: Optional[LayeredDrawing] = None
    best_layers = cap + 1
    tried = 0
    for coords in placements:
        if tried >= budget:
            break
        tried += 1
        d = LayeredDrawing(g, tuple(coords), (0,) * len(g.edges))
        if not validate_drawing(d).valid:
            continue
        witness = fixed_placement_witness(g, coords, best_layers - 1)
        if witness is None:
            continue
        layers = witness.layers_used
        if layers < best_layers:
            if not verify_geometric_thickness_witness(witness, layers):
                raise AssertionError("coloring did not yield a crossing-free drawing")
            best, best_layers = witness, layers
            if best_layers <= floor:
                break
    if best is None:
        raise SearchExhaustedError(f"no valid placement within cap {cap} from {describe(strategy)}")
    return SearchResult(best, best_layers, tried)


# --- book thickness ---------------------------------------------------------

def _circular_orders(n: int) -> Iterator[tuple[int, ...]]:
    """Orders starting at vertex 0, one per reflection class."""
    if n <= 2:
        yield tuple(range(n))
        return
    for rest in permutations(range(1, n)):
        if rest[0] < rest[-1]:
            yield (0,) + rest


def book_thickness_exact(g: SimpleGraph, cap: int, force: bool = False,
                         max_vertices: int = 10) -> tuple[int, BookLayout]:
    if g.num_vertices > max_vertices and not force:
        raise TooLargeError(f"{g.num_vertices} vertices exceeds the guard of {max_vertices}")
    edges = g.edges
    if not edges:
        return 0, BookLayout(g, tuple(range(g.num_vertices)), ())
    best: Optional[tuple[int, BookLayout]] = None
    limit = cap
    for order in _circular_orders(g.num_vertices):
        pos = {v: i for i, v in enumerate(order)}
        pairs = [(e, f) for e, f in combinations(range(len(edges)), 2)
                 if chords_interleave(pos, edges[e], edges[f])]
        coloring = exact_coloring(ConflictGraph.from_pairs(len(edges), pairs), limit)
        if coloring is None:
            continue
        pages = max(coloring) + 1
        best = (pages, BookLayout(g, order, tuple(coloring)))
        if pages == 1:
            break
        limit = pages - 1
    if best is None:
        raise SearchExhaustedError(f"book thickness exceeds cap {cap}")
    return best


# --- refutation harness for uniform outer types -----------------------------

def _integral(points: Sequence[Point]) -> list[Point]:
    den = 1
    for p in points:
        den = math.lcm(den, Fraction(p.x).denominator, Fraction(p.y).denominator)
    return [Point(int(p.x * den), int(p.y * den)) for p in points]


def regular_shape(n: int) -> list[Point]:
    """n integer points near a regular polygon, clockwise from the top."""
    return [Point(round(1000 * math.sin(2 * math.pi * i / n)), round(1000 * math.cos(2 * math.pi * i / n)))
            for i in range(n)]


def random_shape(n: int, rng: random.Random, min_gap: float = 0.2) -> list[Point]:
    """n integer points on a random ellipse, strictly convex, listed clockwise.

    Stretching and rotating the ellipse gives sharp and flat hull angles
    alike, which matters for types whose drawings need sharp corners.
    """
    while True:
        aspect = rng.uniform(1.0, 6.0)
        tilt = rng.uniform(0, math.pi)
        angles = sorted((rng.uniform(0, 2 * math.pi) for _ in range(n)), reverse=True)
        gaps = [(angles[i] - angles[(i + 1) % n]) % (2 * math.pi) for i in range(n)]
        if min(gaps) < min_gap:
            continue
        pts = []
        for a in angles:
            x, y = 1000 * math.cos(a), 1000 * math.sin(a) / aspect
            pts.append(Point(round(x * math.cos(tilt) - y * math.sin(tilt)),
                             round(x * math.sin(tilt) + y * math.cos(tilt))))
        if in_strictly_convex_position(pts):
            return pts


def wedge_points(x: Point, y: Point, z: Point, resolution: int) -> list[Point]:
    """Sample the two regions where x is the angularly middle singleton.

    Points are x + tau * (w - x) with w on segment yz: tau < 0 gives the
    corner wedge behind x, tau > 1 the region beyond edge yz.  Each region
    gets ``resolution`` values of w and of tau.  Coordinates stay exact.
    """
    taus = [-Fraction(2) ** (j - 2) for j in range(resolution)]
    taus += [1 + Fraction(2) ** (j - 2) for j in range(resolution)]
    out = []
    for i in range(1, resolution + 1):
        mu = Fraction(i, resolution + 1)
        w = Point((1 - mu) * y.x + mu * z.x, (1 - mu) * y.y + mu * z.y)
        for tau in taus:
            out.append(Point(_simplify(x.x + tau * (w.x - x.x)), _simplify(x.y + tau * (w.y - x.y))))
    return out


def _simplify(v):
    # integer-valued fractions become ints, which keeps later predicates fast
    return v.numerator if isinstance(v, Fraction) and v.denominator == 1 else v


@dataclass
class _Option:
    point: Point
    segments: tuple[tuple[Point, Point], ...]  # indexed by role


def _pair_status(o1: _Option, o2: _Option) -> tuple[bool, list[Role]]:
    """(valid together, roles whose same-layer edges properly cross)."""
    p, q = o1.point, o2.point
    if p == q:
        return False, []
    for a, b in o2.segments:
        if on_segment_interior(p, a, b):
            return False, []
    for a, b in o1.segments:
        if on_segment_interior(q, a, b):
            return False, []
    crossed = []
    for r1, (a, b) in enumerate(o1.segments):
        for r2, (c, d) in enumerate(o2.segments):
            if cross(a, b, c) == 0 and cross(a, b, d) == 0:
                if segment_relation((a, b), (c, d)) is SegmentRelation.OVERLAPPING:
                    return False, []
            elif r1 == r2 and properly_cross(a, b, c, d):
                crossed.append(Role(r1))
    return True, crossed


@dataclass
class RefutationReport:
    n: int
    type_symbol: str
    strategy: str
    candidates: int = 0
    shapes: int = 0
    witnesses: list = field(default_factory=list)
    forced_crossings: dict = field(default_factory=dict)  # label -> candidates showing it
    exhaustive: bool = True

    @property
    def witness(self) -> Optional[LayeredDrawing]:
        return self.witnesses[0] if self.witnesses else None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "type": self.type_symbol,
            "strategy": self.strategy,
            "candidates": self.candidates,
            "shapes": self.shapes,
            "witnesses": len(self.witnesses),
            "exhaustive": self.exhaustive,
            "forced_crossings": dict(sorted(self.forced_crossings.items())),
        }


def _label(role: Role, t1: Sequence[int], t2: Sequence[int]) -> str:
    name = role.name.capitalize()
    return f"{name}({''.join(map(str, t1))})x{name}({''.join(map(str, t2))})"


def _shape_options(shape: Sequence[Point], trips: Sequence[tuple[int, int, int]],
                   symbol: str, resolution: int) -> list[list[_Option]]:
    hull = convex_hull(shape)
    options = []
    for t in trips:
        ends = [shape[s] for s in t]  # ends[role] since t is sorted and numbering is identity
        middle_role = int(symbol[1])
        others = [r for r in range(3) if r != middle_role]
        opts = []
        for p in wedge_points(ends[middle_role], ends[others[0]], ends[others[1]], resolution):
            if point_vs_hull(p, hull) is not HullLocation.OUTSIDE:
                continue
            try:
                order = reflex_gap_order(p, ends)
            except ValueError:
                continue
            if "".join(map(str, order)) != symbol:
                continue
            if any(on_segment_interior(s, p, e) for e in ends for s in shape):
                continue
            opts.append(_Option(p, tuple((p, e) for e in ends)))
        options.append(opts)
    return options


def _backtrack(options, compatible, max_witnesses: int, budget: int):
    """All compatible assignments (up to max_witnesses); returns (found, nodes, finished)."""
    m = len(options)
    found: list[list[int]] = []
    nodes = 0
    chosen: list[int] = []

    def rec(i, domains) -> bool:
        nonlocal nodes
        if i == m:
            found.append(list(chosen))
            return len(found) >= max_witnesses
        for a in domains[i]:
            nodes += 1
            if nodes > budget:
                return True
            new = list(domains)
            ok = True
            for j in range(i + 1, m):
                new[j] = [b for b in domains[j] if (a, b) in compatible[i, j]]
                if not new[j]:
                    ok = False
                    break
            if ok:
                chosen.append(a)
                if rec(i + 1, new):
                    return True
                chosen.pop()
        return False

    stopped = rec(0, [list(range(len(o))) for o in options])
    return found, nodes, not stopped or len(found) >= max_witnesses and nodes <= budget


def refute_outer_type(n: int, type_symbol: str, strategy: Strategy = Grid(5),
                      budget: int = 1_000_000, shapes: Optional[Sequence[Sequence[Point]]] = None,
                      max_witnesses: int = 50) -> RefutationReport:
    """Search coherent outer drawings of G_3(n) of one uniform type.

    Singletons sit in strictly convex position (numbered clockwise from
    vertex 0); each tripleton is restricted to exact sample points of the
    wedge its type dictates, and every edge goes to the layer of its role.
    Candidates are all combinations of per-tripleton sample points.  All
    constraints between tripletons are pairwise, so crossing tallies are
    counted exactly per pair and multiplied out, and witnesses are found by
    backtracking with forward checking.
    """
    if n < 3:
        raise InvalidParametersError("need n >= 3")
    if type_symbol not in TYPE_SYMBOLS:
        raise InvalidParametersError(f"unknown type {type_symbol!r}")
    if isinstance(strategy, Grid):
        resolution = strategy.resolution
        if shapes is None:
            rng = random.Random(0)
            shapes = [regular_shape(n)] + [random_shape(n, rng) for _ in range(7)]
    elif isinstance(strategy, RandomPlacement):
        resolution = 5
        if shapes is None:
            rng = random.Random(strategy.seed)
            shapes = [random_shape(n, rng) for _ in range(strategy.trials)]
    else:
        raise InvalidParametersError("refutation needs a grid or random strategy")

    report = RefutationReport(n, type_symbol, describe(strategy))
    trips = list(combinations(range(n), 3))
    g = generate_incidence_graph(3, n)
    scale = 4 * (resolution + 1)
    for raw in shapes:
        shape = [Point(p.x * scale, p.y * scale) for p in _integral(raw)]
        if not in_strictly_convex_position(shape):
            raise InvalidParametersError("singleton shape is not strictly convex")
        options = _shape_options(shape, trips, type_symbol, resolution)
        report.shapes += 1
        sizes = [len(o) for o in options]
        total = math.prod(sizes)
        report.candidates += total
        if total == 0:
            continue
        compatible = {}
        for i, j in combinations(range(len(trips)), 2):
            ok_pairs = set()
            counts = {role: 0 for role in Role}
            for a, oa in enumerate(options[i]):
                for b, ob in enumerate(options[j]):
                    valid, crossed = _pair_status(oa, ob)
                    if valid and not crossed:
                        ok_pairs.add((a, b))
                    for role in crossed:
                        counts[role] += 1
            compatible[i, j] = ok_pairs
            rest = total // (sizes[i] * sizes[j])
            for role, c in counts.items():
                if c:
                    label = _label(role, trips[i], trips[j])
                    report.forced_crossings[label] = report.forced_crossings.get(label, 0) + c * rest
        remaining = max_witnesses - len(report.witnesses)
        if remaining <= 0:
            continue
        found, nodes, finished = _backtrack(options, compatible, remaining, budget)
        budget -= nodes
        report.exhaustive &= finished
        for assignment in found:
            coords = list(shape) + [options[i][a].point for i, a in enumerate(assignment)]
            d = _coherent_drawing(g, coords)
            _check_witness(d, type_symbol)
            report.witnesses.append(d)
        if budget <= 0:
            report.exhaustive = False
            break
    return report


def _coherent_drawing(g, coords) -> LayeredDrawing:
    d = LayeredDrawing(g, tuple(coords), (0,) * len(g.edges))
    roles = edge_roles(g, clockwise_numbering(d, g.singletons[0]))
    return d.with_layers([roles[e].value for e in range(len(g.edges))])


def _check_witness(d: LayeredDrawing, symbol: str) -> None:
    numbering = clockwise_numbering(d, d.graph.singletons[0])
    if not (verify_geometric_thickness_witness(d, 3) and is_coherent(d, numbering)
            and inner_outer(d) is InnerOuter.OUTER and drawing_type(d, numbering) == symbol):
        raise AssertionError("refutation search produced an invalid witness")


def hull_angle_sum_below_pi(d: LayeredDrawing, i: int, j: int) -> bool:
    """Whether the hull angles at singletons i and j (clockwise numbers from 0) sum below 180 degrees."""
    numbering = clockwise_numbering(d, d.graph.singletons[0])
    ring = [d.coords[v] for v in numbering.ordering]
    m = len(ring)

    def corner(k):
        return ring[k], ring[(k - 1) % m], ring[(k + 1) % m]

    return angle_sum_below_pi(*corner(i), *corner(j))
