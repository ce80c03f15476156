from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from q2kit.coloring import (
    EdgeColoring,
    HyperedgeColoring,
    NotBipartiteError,
    NotRegularError,
    SearchBudgetExceeded,
    bipartite_delta_color,
    chromatic_index,
    color_hyperedges,
    exact_edge_color,
    hypergraph_chromatic_index,
    one_factorize,
    vizing_color,
)
from q2kit.graphs import (
    Graph,
    Hypergraph,
    bowtie_hypergraph,
    complete,
    complete_bipartite,
    cycle,
    hypercube,
    octahedron_triangle_hypergraph,
    path,
    petersen,
    rook_hypergraph,
    star,
)

from test_graphs import graphs


def proper(g, colors):
    for e, f in combinations(sorted(g.edges), 2):
        if len(set(e) | set(f)) < 4 and colors[e] == colors[f]:
            return False
    return len(colors) == g.m


def enumerate_k_colorable(g, k):
    """Try every assignment; only for tiny graphs."""
    edges = sorted(g.edges)
    return any(proper(g, dict(zip(edges, cs))) for cs in product(range(k), repeat=len(edges)))


def test_vizing_p3():
    c = vizing_color(path(3))
    assert proper(path(3), c.colors) and c.num_colors <= 3


def test_vizing_petersen_needs_four():
    c = vizing_color(petersen())
    assert proper(petersen(), c.colors)
    assert c.num_colors == 4
    assert exact_edge_color(petersen(), 3) is None


def test_vizing_k4():
    c = vizing_color(complete(4))
    assert proper(complete(4), c.colors) and c.num_colors <= 4
    assert exact_edge_color(complete(4), 3) is not None


def test_vizing_needs_an_edge():
    with pytest.raises(ValueError):
        vizing_color(Graph(3))


@given(graphs(9))
@settings(max_examples=200, deadline=None)
def test_vizing_bound_on_random_graphs(g):
    if g.m == 0:
        return
    c = vizing_color(g)
    assert proper(g, c.colors)
    assert c.num_colors <= g.max_degree() + 1


def test_vizing_deterministic():
    assert vizing_color(petersen()).colors == vizing_color(petersen()).colors


def test_exact_c4_alternates():
    c = exact_edge_color(cycle(4), 2)
    assert c.colors[(0, 1)] == c.colors[(2, 3)] == 0
    assert c.colors[(1, 2)] == c.colors[(0, 3)] == 1


def test_exact_c5_infeasible_matches_enumeration():
    assert exact_edge_color(cycle(5), 2) is None
    assert not enumerate_k_colorable(cycle(5), 2)
    assert exact_edge_color(cycle(5), 3) is not None


def test_exact_petersen_class_two():
    assert exact_edge_color(petersen(), 3) is None
    assert chromatic_index(petersen()) == 4


def test_budget_gives_undecided():
    with pytest.raises(SearchBudgetExceeded):
        exact_edge_color(petersen(), 3, budget=5)


@given(graphs(6))
@settings(max_examples=80, deadline=None)
def test_exact_agrees_with_enumeration(g):
    if g.m == 0 or g.m > 8:
        return
    for k in range(1, g.max_degree() + 2):
        found = exact_edge_color(g, k)
        assert (found is not None) == enumerate_k_colorable(g, k)
        if found is not None:
            assert proper(g, found.colors)


@given(graphs(7))
@settings(max_examples=80, deadline=None)
def test_exact_monotone_in_k(g):
    if g.m == 0:
        return
    for k in range(2, g.max_degree() + 2):
        if exact_edge_color(g, k - 1) is not None:
            assert exact_edge_color(g, k) is not None


@pytest.mark.parametrize("g,k", [(complete(4), 3), (complete_bipartite(3, 3), 3), (hypercube(3), 3), (cycle(6), 2)])
def test_one_factorize(g, k):
    factors = one_factorize(g)
    assert len(factors) == k
    assert sorted(e for f in factors for e in f) == sorted(g.edges)
    for f in factors:
        assert len(f) == g.n // 2
        assert sorted(v for e in f for v in e) == list(range(g.n))


def test_one_factorize_class_two_and_irregular():
    assert one_factorize(petersen()) is None
    assert one_factorize(complete(5)) is None
    with pytest.raises(NotRegularError):
        one_factorize(path(4))


@pytest.mark.parametrize("g,delta", [(complete_bipartite(3, 3), 3), (path(4), 2), (cycle(6), 2), (hypercube(3), 3), (star(5), 5)])
def test_bipartite_delta(g, delta):
    c = bipartite_delta_color(g)
    assert proper(g, c.colors)
    assert c.num_colors == delta and len(set(c.colors.values())) == delta


@given(graphs(9))
@settings(max_examples=150, deadline=None)
def test_bipartite_delta_random(g):
    if g.bipartition() is None:
        with pytest.raises(NotBipartiteError):
            bipartite_delta_color(g)
        return
    c = bipartite_delta_color(g)
    assert proper(g, c.colors)
    assert max(c.colors.values(), default=-1) < max(g.max_degree(), 1)


def test_rook_hyperedges_two_colors():
    h = rook_hypergraph(3)
    c = color_hyperedges(h, 2)
    assert c.colors == (0, 0, 0, 1, 1, 1)
    assert c.is_proper()


def test_bowtie_hyperedges_one_color_infeasible():
    assert color_hyperedges(bowtie_hypergraph(), 1) is None
    assert color_hyperedges(bowtie_hypergraph(), 2) is not None


def test_octahedron_triangles_need_four():
    h = octahedron_triangle_hypergraph()
    # every pair of triangles meets, so the intersection graph is K4
    assert all(set(a) & set(b) for a, b in combinations(h.edges, 2))
    c, coloring = hypergraph_chromatic_index(h)
    assert c == 4 and coloring.is_proper()
    assert color_hyperedges(h, 3) is None


def test_hypergraph_chromatic_index_rook():
    assert hypergraph_chromatic_index(rook_hypergraph(4))[0] == 2


def test_coloring_text_round_trip():
    g = petersen()
    c = vizing_color(g)
    assert EdgeColoring.from_text(g, c.to_text(), c.num_colors) == c
    h = rook_hypergraph(3)
    hc = color_hyperedges(h, 2)
    assert HyperedgeColoring.from_text(h, hc.to_text()) == hc
    assert hc.to_text().splitlines()[3] == "3 1"


def test_coloring_validation():
    g = path(3)
    with pytest.raises(ValueError):
        EdgeColoring(g, {(0, 1): 0}, 1)
    with pytest.raises(ValueError):
        EdgeColoring(g, {(0, 1): 0, (1, 2): 3}, 2)
    assert not EdgeColoring(g, {(0, 1): 0, (1, 2): 0}, 1).is_proper()
    h = Hypergraph.from_edges(4, [(0, 1), (1, 2)])
    assert not HyperedgeColoring(h, (0, 0), 1).is_proper()
