import random

from hypothesis import given, settings, strategies as st

from geothick.coloring import ConflictGraph, chromatic_number_exact, dsatur_greedy, greedy_clique

from oracles import brute_force_chromatic


def _cycle(n):
    return ConflictGraph.from_pairs(n, [(i, (i + 1) % n) for i in range(n)])


def test_examples():
    assert chromatic_number_exact(_cycle(3), 5) == 3
    assert chromatic_number_exact(_cycle(4), 5) == 2
    assert chromatic_number_exact(_cycle(5), 5) == 3
    assert chromatic_number_exact(ConflictGraph.from_pairs(3, []), 5) == 1
    assert chromatic_number_exact(ConflictGraph.from_pairs(0, []), 5) == 0


def test_above_cap():
    k5 = ConflictGraph.from_pairs(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])
    assert chromatic_number_exact(k5, 4) is None
    assert chromatic_number_exact(k5, 5) == 5
    assert chromatic_number_exact(_cycle(5), 2) is None


def test_self_conflict_rejected():
    try:
        ConflictGraph.from_pairs(2, [(1, 1)])
    except ValueError:
        return
    raise AssertionError("self conflict accepted")


@st.composite
def graphs(draw):
    n = draw(st.integers(0, 12))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return n, chosen


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_matches_brute_force(case):
    n, pairs = case
    cg = ConflictGraph.from_pairs(n, pairs)
    assert chromatic_number_exact(cg, 12) == brute_force_chromatic(n, pairs)


def test_greedy_helpers_are_consistent():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(1, 12)
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4]
        cg = ConflictGraph.from_pairs(n, pairs)
        clique = greedy_clique(cg.adjacency)
        assert all(b in cg.adjacency[a] for a in clique for b in clique if a != b)
        colors = dsatur_greedy(cg.adjacency)
        assert all(colors[a] != colors[b] for a, b in pairs)
        chi = chromatic_number_exact(cg, n)
        assert len(clique) <= chi <= max(colors) + 1
