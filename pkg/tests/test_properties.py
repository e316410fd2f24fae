from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from src.chromatic.integral import integral_chromatic_dc, integral_terms
from src.chromatic.modular import modular_chromatic
from src.flats.semilattice import closure, enumerate_flats
from src.gains.graph import Edge, GainGraph, rooting
from src.gains.switching import (
    SwitchingFunction,
    contract,
    improper_edges,
    is_balanced,
    switch,
    top_vertex_switching,
)
from src.geometry.cones import cone_decomposition, point_total_weight
from src.geometry.oracles import oracle_integral, oracle_modular


@st.composite
def gain_graphs(draw, max_n: int = 4, max_edges: int = 6) -> GainGraph:
    n = draw(st.integers(1, max_n))
    edge = st.tuples(st.integers(1, n), st.integers(1, n), st.integers(-2, 2)).filter(
        lambda t: t[0] != t[1] or t[2] != 0
    )
    return GainGraph.build(n, draw(st.lists(edge, max_size=max_edges)))


def vectors(n: int, lo: int, hi: int) -> st.SearchStrategy:
    return st.lists(st.integers(lo, hi), min_size=n, max_size=n)


def switched_edge(edge: Edge, eta: SwitchingFunction) -> Edge:
    return Edge.make(edge.tail, edge.head, edge.gain + eta[edge.head] - eta[edge.tail])


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_switching_composes_and_inverts(data) -> None:
    graph = data.draw(gain_graphs())
    eta = SwitchingFunction(tuple(data.draw(vectors(graph.n, -3, 3))))
    other = SwitchingFunction(tuple(data.draw(vectors(graph.n, -3, 3))))

    assert switch(switch(graph, eta), other) == switch(graph, eta + other)
    assert switch(switch(graph, eta), -eta) == graph


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_balance_is_switching_invariant(data) -> None:
    graph = data.draw(gain_graphs())
    eta = SwitchingFunction(tuple(data.draw(vectors(graph.n, -3, 3))))
    keep = data.draw(st.lists(st.booleans(), min_size=len(graph.edges), max_size=len(graph.edges)))
    subset = [e for e, k in zip(graph.edges, keep) if k]

    switched = switch(graph, eta)
    image = [switched_edge(e, eta) for e in subset]
    assert (is_balanced(graph, subset) is None) == (is_balanced(switched, image) is None)


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_improper_edges_follow_switching(data) -> None:
    graph = data.draw(gain_graphs())
    eta = SwitchingFunction(tuple(data.draw(vectors(graph.n, -3, 3))))
    x = data.draw(vectors(graph.n, 1, 6))

    moved = [xi + eta[v] for v, xi in zip(graph.vertices, x)]
    expected = {switched_edge(e, eta) for e in improper_edges(graph, x)}
    assert improper_edges(switch(graph, eta), moved) == expected


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_improper_set_is_closed_and_balanced(data) -> None:
    graph = data.draw(gain_graphs())
    x = data.draw(vectors(graph.n, 1, 6))

    improper = improper_edges(graph, x)
    assert is_balanced(graph, improper) is not None
    assert closure(graph, improper).edges == improper


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_top_vertex_switching_normalizes_each_flat(data) -> None:
    graph = data.draw(gain_graphs())
    flat = data.draw(st.sampled_from(enumerate_flats(graph).flats))

    eta = top_vertex_switching(graph, flat.edges)
    switched = switch(graph, eta)
    assert all(switched_edge(e, eta).gain == 0 for e in flat.edges)
    assert all(value >= 0 for value in eta.values)
    for block in flat.blocks:
        assert min(eta[v] for v in block) == 0
    assert contract(graph, flat.edges).n == len(flat.blocks)


@given(gain_graphs(), st.integers(0, 6))
@settings(max_examples=80, deadline=None)
def test_integral_methods_agree(graph: GainGraph, m: int) -> None:
    expected = oracle_integral(graph, m)

    assert integral_terms(graph).evaluate(m) == expected
    assert integral_chromatic_dc(rooting(graph), m) == expected


@given(gain_graphs(), st.integers(1, 6))
@settings(max_examples=80, deadline=None)
def test_modular_matches_oracle(graph: GainGraph, m: int) -> None:
    assert modular_chromatic(graph, m) == oracle_modular(graph, m)


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_cones_weigh_proper_points_once(data) -> None:
    graph = data.draw(gain_graphs(max_n=3))
    x = data.draw(vectors(graph.n, 1, 6))

    expected = 0 if improper_edges(graph, x) else 1
    assert point_total_weight(cone_decomposition(graph), x, graph) == expected
