from __future__ import annotations

import random

import pytest

from corpus import corpus
from src.errors import FlatLimitExceeded, InvalidInput, UnbalancedEdgeSet
from src.flats.nbc import nbc_forest_count
from src.flats.semilattice import (
    closure,
    enumerate_flats,
    mobius_sum_below,
    rooted_heights,
)
from src.gains.graph import Edge, GainGraph, RootedGainGraph, rooting


def test_closure_examples(shi2: GainGraph, zero_triangle: GainGraph) -> None:
    assert closure(shi2, [(1, 2, 0)]).edges == {Edge(1, 2, 0)}
    assert closure(shi2).edges == frozenset()
    assert closure(zero_triangle, [(1, 2, 0), (2, 3, 0)]).edges == set(zero_triangle.edges)


def test_closure_absorbs_zero_loops() -> None:
    graph = GainGraph.build(2, [(1, 1, 0), (1, 2, 3)])

    assert closure(graph).edges == {Edge(1, 1, 0)}


def test_closure_rejects_unbalanced(shi2: GainGraph) -> None:
    with pytest.raises(UnbalancedEdgeSet):
        closure(shi2, shi2.edges)


def test_shi2_semilattice(shi2: GainGraph) -> None:
    lattice = enumerate_flats(shi2)

    summary = [(sorted(str(e) for e in flat.edges), mu) for flat, mu in lattice]
    assert summary == [([], 1), (["1e12"], -1), (["0e12"], -1)]
    heights = {str(next(iter(f.edges))): f.heights for f in lattice.flats[1:]}
    assert heights == {"0e12": (0,), "1e12": (1,)}


def test_zero_triangle_is_the_partition_lattice(zero_triangle: GainGraph) -> None:
    lattice = enumerate_flats(zero_triangle)

    assert len(lattice) == 5
    assert [flat.rank for flat in lattice.flats] == [0, 1, 1, 1, 2]
    assert lattice.mobius == (1, -1, -1, -1, 2)


def test_edgeless_graph_has_one_flat() -> None:
    lattice = enumerate_flats(GainGraph.build(3))

    assert len(lattice) == 1
    assert lattice.mobius == (1,)
    assert lattice.bottom.blocks == ((1,), (2,), (3,))


def test_flat_limit() -> None:
    graph = GainGraph.build(4, [(i, j, 0) for i in range(1, 5) for j in range(i + 1, 5)])

    with pytest.raises(FlatLimitExceeded) as excinfo:
        enumerate_flats(graph, limit=5)
    assert excinfo.value.limit == 5


def test_find_and_leq(shi2: GainGraph) -> None:
    lattice = enumerate_flats(shi2)
    flat = lattice.find([(1, 2, 1)])

    assert lattice.mobius_of(flat) == -1
    assert lattice.leq(lattice.bottom, flat)
    assert not lattice.leq(flat, lattice.find([(1, 2, 0)]))
    with pytest.raises(KeyError):
        lattice.find(shi2.edges)


def test_modular_flats_read_gains_mod_m() -> None:
    graph = GainGraph.build(2, [(1, 2, 0), (1, 2, 2)])

    lattice = enumerate_flats(graph, modulus=2)

    assert lattice.graph.edges == (Edge(1, 2, 0),)
    assert len(lattice) == 2


def test_rooted_heights(linial2: GainGraph) -> None:
    lattice = enumerate_flats(linial2)
    top = lattice.find(linial2.edges)

    assert rooted_heights(rooting(linial2), top) == {(1, 2): 1}
    assert rooted_heights(rooting(linial2), lattice.bottom) == {(1,): 0, (2,): 0}

    zero_edge = GainGraph.build(2, [(1, 2, 0)])
    rooted = RootedGainGraph.build(zero_edge, [0, 1])
    flat = enumerate_flats(zero_edge).find(zero_edge.edges)
    assert rooted_heights(rooted, flat) == {(1, 2): 1}


def test_loop_gains_of_contractions(shi2: GainGraph) -> None:
    lattice = enumerate_flats(shi2)

    assert lattice.bottom.loop_gains == ()
    assert [flat.loop_gains for flat in lattice.flats[1:]] == [(1,), (1,)]


def test_mobius_sum_below(zero_triangle: GainGraph) -> None:
    lattice = enumerate_flats(zero_triangle)

    assert mobius_sum_below(lattice, []) == 1
    assert mobius_sum_below(lattice, [(1, 2, 0)]) == 0
    assert mobius_sum_below(lattice, zero_triangle.edges) == 0


def test_nbc_count_on_zero_triangle(zero_triangle: GainGraph) -> None:
    top = enumerate_flats(zero_triangle).find(zero_triangle.edges)
    ordering = [Edge(1, 2, 0), Edge(2, 3, 0), Edge(1, 3, 0)]

    assert nbc_forest_count(zero_triangle, top, ordering) == 2


def test_nbc_count_small_flats(shi2: GainGraph) -> None:
    lattice = enumerate_flats(shi2)
    ordering = list(shi2.edges)

    assert [nbc_forest_count(shi2, f, ordering) for f in lattice.flats] == [1, 1, 1]


def test_nbc_rejects_partial_ordering(shi2: GainGraph) -> None:
    with pytest.raises(InvalidInput):
        nbc_forest_count(shi2, enumerate_flats(shi2).bottom, shi2.edges[:1])


def test_mobius_signs_and_nbc_agree_on_corpus() -> None:
    rng = random.Random(7)
    for label, graph in corpus():
        lattice = enumerate_flats(graph)
        orderings = [list(graph.edges) for _ in range(3)]
        for ordering in orderings:
            rng.shuffle(ordering)
        for flat, mu in lattice:
            assert (-1) ** flat.rank * mu > 0, label
            for ordering in orderings:
                assert nbc_forest_count(graph, flat, ordering) == abs(mu), label


def test_mobius_recursion_sums_to_zero_on_corpus() -> None:
    for label, graph in corpus():
        lattice = enumerate_flats(graph)
        for flat in lattice.flats[1:]:
            assert mobius_sum_below(lattice, flat.edges) == 0, label


def test_enumeration_is_deterministic() -> None:
    for _, graph in corpus()[:40]:
        first = enumerate_flats(graph)
        second = enumerate_flats(graph)
        assert [f.key for f in first.flats] == [f.key for f in second.flats]
        assert first.mobius == second.mobius


def test_unrooted_heights_are_nonnegative() -> None:
    for _, graph in corpus():
        for flat in enumerate_flats(graph).flats:
            assert all(h >= 0 for h in flat.heights)
            for block, h in zip(flat.blocks, flat.heights):
                if len(block) == 1:
                    assert h == 0
