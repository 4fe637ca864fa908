import pytest

from geothick.drawings import (BookLayout, LayeredDrawing, book_crossings, crossing_report,
                               is_planar, layer_crossings, validate_drawing,
                               verify_book_witness, verify_geometric_thickness_witness,
                               verify_thickness_layering)
from geothick.errors import InvalidDrawingError, InvalidLayeringError, InvalidParametersError
from geothick.geometry import Point as P
from geothick.graphs import SimpleGraph, complete_graph, cube_graph, cycle_graph, generate_incidence_graph

K4 = complete_graph(4)
K4_CONVEX = [P(0, 0), P(2, 0), P(2, 2), P(0, 2)]
K4_NESTED = [P(0, 0), P(4, 0), P(0, 4), P(1, 1)]


def test_k4_convex_one_layer_has_one_crossing():
    d = LayeredDrawing(K4, K4_CONVEX, [0] * 6)
    report = layer_crossings(d)
    assert report.valid and len(report.crossings) == 1
    assert not verify_geometric_thickness_witness(d, 1)
    e, f, layer = report.crossings[0]
    assert {K4.edges[e], K4.edges[f]} == {(0, 2), (1, 3)}


def test_k4_two_layers_and_nested_placement():
    d = LayeredDrawing(K4, K4_CONVEX, [1 if e == (0, 2) else 0 for e in K4.edges])
    assert verify_geometric_thickness_witness(d, 2)
    assert verify_geometric_thickness_witness(LayeredDrawing(K4, K4_NESTED, [0] * 6), 1)


def test_invalid_drawings():
    dup = LayeredDrawing(K4, [P(0, 0), P(0, 0), P(1, 0), P(0, 1)], [0] * 6)
    assert validate_drawing(dup).duplicates == [(0, 1)]
    with pytest.raises(InvalidDrawingError):
        layer_crossings(dup)
    assert not crossing_report(dup).valid
    assert not verify_geometric_thickness_witness(dup, 6)

    path = SimpleGraph(3, ((0, 1),))
    on_edge = LayeredDrawing(path, [P(0, 0), P(2, 0), P(1, 0)], [0])
    assert validate_drawing(on_edge).vertex_on_edge == [(2, 0)]

    two = SimpleGraph(4, ((0, 1), (2, 3)))
    overlap = LayeredDrawing(two, [P(0, 0), P(2, 0), P(1, 0), P(3, 0)], [0, 1])
    rep = validate_drawing(overlap)
    assert rep.overlaps == [(0, 1)]


def test_construction_errors():
    with pytest.raises(InvalidParametersError):
        LayeredDrawing(K4, K4_CONVEX[:3], [0] * 6)
    with pytest.raises(InvalidLayeringError):
        LayeredDrawing(K4, K4_CONVEX, [0] * 5)
    with pytest.raises(InvalidLayeringError):
        LayeredDrawing(K4, K4_CONVEX, [0, 0, 0, 0, 0, -1])


def test_cube_planar_drawing():
    cube = cube_graph()
    # bit 2 picks the inner square; bits 0 and 1 walk around it
    coords = [P(0, 0), P(4, 0), P(0, 4), P(4, 4), P(1, 1), P(3, 1), P(1, 3), P(3, 3)]
    d = LayeredDrawing(cube, coords, [0] * len(cube.edges))
    assert verify_geometric_thickness_witness(d, 1)


def test_planarity():
    assert is_planar(complete_graph(4))
    assert not is_planar(complete_graph(5))
    assert is_planar(generate_incidence_graph(3, 4))
    assert not is_planar(generate_incidence_graph(3, 6))


def test_verify_thickness_layering():
    k5 = complete_graph(5)
    assert not verify_thickness_layering(k5, [0] * 10, 1)
    layers = [1 if e == (0, 1) else 0 for e in k5.edges]
    assert verify_thickness_layering(k5, layers, 2)
    assert not verify_thickness_layering(k5, layers, 1)
    with pytest.raises(InvalidLayeringError):
        verify_thickness_layering(k5, [0] * 9, 2)
    with pytest.raises(InvalidLayeringError):
        verify_thickness_layering(k5, [0] * 9 + [None], 2)


def test_book_layouts():
    c6 = cycle_graph(6)
    bl = BookLayout(c6, tuple(range(6)), (0,) * 6)
    assert verify_book_witness(bl, 1)
    k4 = BookLayout(K4, (0, 1, 2, 3), (0,) * 6)
    assert len(book_crossings(k4)) == 1
    assert not verify_book_witness(k4, 1)
    fixed = BookLayout(K4, (0, 1, 2, 3), tuple(1 if e == (0, 2) else 0 for e in K4.edges))
    assert verify_book_witness(fixed, 2)
    with pytest.raises(InvalidParametersError):
        BookLayout(K4, (0, 1, 2, 2), (0,) * 6)


def test_report_json_shape():
    d = LayeredDrawing(K4, K4_CONVEX, [0] * 6)
    doc = crossing_report(d).to_json()
    assert doc["valid"] and not doc["crossing_free"]
    assert doc["layer_sizes"] == {"0": 6}
