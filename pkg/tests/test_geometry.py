from __future__ import annotations

from itertools import product

import pytest

from corpus import corpus
from src.chromatic.integral import integral_chromatic
from src.errors import InvalidInput, OracleBudgetExceeded
from src.families.complete import interval_complete_graph
from src.flats.semilattice import enumerate_flats, mobius_sum_below
from src.gains.graph import Edge, GainGraph, RootedGainGraph, rooting
from src.gains.switching import improper_edges
from src.geometry.arrangement import (
    Arrangement,
    arrangement_to_gain_graph,
    gain_graph_to_arrangement,
)
from src.geometry.cones import Cone, cone_decomposition, point_total_weight
from src.geometry.oracles import oracle_integral, oracle_interval, oracle_modular, oracle_rooted


def test_arrangement_translation(shi2: GainGraph) -> None:
    shi_arrangement = Arrangement.build(2, [(1, 2, 0), (1, 2, 1)])
    linial = Arrangement.build(3, [(1, 2, 1), (1, 3, 1), (2, 3, 1)])

    assert arrangement_to_gain_graph(shi_arrangement) == shi2
    assert arrangement_to_gain_graph(linial).edges == (
        Edge(1, 2, 1),
        Edge(1, 3, 1),
        Edge(2, 3, 1),
    )
    assert arrangement_to_gain_graph(Arrangement.build(4)) == GainGraph.build(4)


def test_arrangement_canonical_form() -> None:
    arrangement = Arrangement.build(2, [(2, 1, -1), (1, 2, 1)])

    assert arrangement.hyperplanes == ((1, 2, 1),)
    with pytest.raises(InvalidInput):
        Arrangement.build(2, [(1, 1, 0)])
    with pytest.raises(InvalidInput):
        Arrangement.build(2, [(1, 3, 0)])


def test_round_trip_on_corpus() -> None:
    for label, graph in corpus():
        if graph.loops:
            with pytest.raises(InvalidInput):
                gain_graph_to_arrangement(graph)
            continue
        arrangement = gain_graph_to_arrangement(graph)
        assert arrangement_to_gain_graph(arrangement) == graph, label
        assert gain_graph_to_arrangement(arrangement_to_gain_graph(arrangement)) == arrangement


def test_oracle_examples(shi2: GainGraph, linial2: GainGraph) -> None:
    assert oracle_integral(shi2, 2) == 1
    assert oracle_modular(linial2, 4) == 12
    assert oracle_integral(linial2, 0) == 0
    assert oracle_integral(GainGraph.build(0), 0) == 1


def test_rooted_and_interval_oracles(shi2: GainGraph) -> None:
    edge = GainGraph.build(2, [(1, 2, 0)])

    assert oracle_rooted(rooting(shi2), 3) == 4
    assert oracle_rooted(RootedGainGraph.build(edge, [0, 1]), 3) == 4
    assert oracle_interval(edge, [0, 1], 3) == 4
    with pytest.raises(InvalidInput):
        oracle_interval(shi2, [0, 0], 3)


def test_oracle_budget() -> None:
    graph = interval_complete_graph(8, 0, 1)

    with pytest.raises(OracleBudgetExceeded) as excinfo:
        oracle_integral(graph, 10)
    assert excinfo.value.limit == 100_000_000
    with pytest.raises(OracleBudgetExceeded):
        oracle_modular(GainGraph.build(3), 5, limit=100)


def test_oracle_modular_needs_positive_modulus(linial2: GainGraph) -> None:
    with pytest.raises(InvalidInput):
        oracle_modular(linial2, 0)


def test_linial2_cones(linial2: GainGraph) -> None:
    assert cone_decomposition(linial2) == [
        Cone(weight=1, top_bounds={1: 0, 2: 0}, equations={}),
        Cone(weight=-1, top_bounds={2: 1}, equations={1: (2, 1)}),
    ]


def test_single_vertex_cone() -> None:
    assert cone_decomposition(GainGraph.build(1)) == [Cone(1, {1: 0}, {})]


def test_shi2_cones(shi2: GainGraph) -> None:
    cones = cone_decomposition(shi2)

    assert [c.weight for c in cones] == [1, -1, -1]
    assert [sorted(c.top_bounds.values()) for c in cones] == [[0, 0], [1], [0]]


@pytest.mark.parametrize("point, weight", [((2, 3), 0), ((3, 2), 1), ((1, 1), 1)])
def test_point_total_weight_examples(linial2: GainGraph, point: tuple, weight: int) -> None:
    assert point_total_weight(cone_decomposition(linial2), point, linial2) == weight


def test_point_total_weight_needs_positive_point(linial2: GainGraph) -> None:
    with pytest.raises(InvalidInput):
        point_total_weight(cone_decomposition(linial2), (0, 2), linial2)


@pytest.mark.parametrize("n, lo, hi", [(2, 0, 1), (3, 0, 1), (2, 1, 1), (3, 1, 1)])
def test_cones_partition_shi_and_linial(n: int, lo: int, hi: int) -> None:
    graph = interval_complete_graph(n, lo, hi)
    cones = cone_decomposition(graph)
    for point in product(range(1, 9), repeat=n):
        expected = 0 if improper_edges(graph, point) else 1
        assert point_total_weight(cones, point, graph) == expected, point


def test_cones_partition_on_corpus() -> None:
    for label, graph in corpus():
        cones = cone_decomposition(graph)
        for point in product(range(1, 5), repeat=graph.n):
            expected = 0 if improper_edges(graph, point) else 1
            assert point_total_weight(cones, point, graph) == expected, (label, point)


def test_improper_sets_are_flats_with_vanishing_mobius_sum() -> None:
    for label, graph in corpus():
        lattice = enumerate_flats(graph)
        for point in product(range(1, 4), repeat=graph.n):
            improper = improper_edges(graph, point)
            lattice.find(improper)
            assert mobius_sum_below(lattice, improper) == (0 if improper else 1), (label, point)


def test_lattice_point_count_matches_engine() -> None:
    for label, graph in corpus(max_edges=8):
        if graph.loops:
            continue
        arrangement = gain_graph_to_arrangement(graph)
        for m in range(0, 9):
            translated = arrangement_to_gain_graph(arrangement)
            assert oracle_integral(translated, m) == integral_chromatic(graph, m), (label, m)
