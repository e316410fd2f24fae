from __future__ import annotations

import pytest

from corpus import corpus
from src.chromatic.characteristic import balanced_chromatic_polynomial, max_circle_gain
from src.chromatic.modular import (
    loop_rule_applies,
    modular_chromatic,
    modular_dc_check,
    modular_loop_rule,
)
from src.errors import InvalidInput
from src.gains.graph import GainGraph
from src.geometry.oracles import oracle_modular


def test_modular_examples(shi2: GainGraph) -> None:
    assert modular_chromatic(shi2, 3) == 3
    assert modular_chromatic(shi2, 1) == 0


def test_modular_needs_positive_modulus(shi2: GainGraph) -> None:
    with pytest.raises(InvalidInput):
        modular_chromatic(shi2, 0)
    with pytest.raises(InvalidInput):
        modular_loop_rule(shi2, -1)


def test_loop_divisible_by_m_kills_the_count() -> None:
    graph = GainGraph.build(2, [(1, 1, 3), (1, 2, 1)])

    assert modular_chromatic(graph, 3) == 0
    assert modular_chromatic(graph, 2) == 2


def test_loop_rule_agrees_when_m_divides_no_loop_gain(shi2: GainGraph) -> None:
    assert modular_loop_rule(shi2, 3) == 3
    assert loop_rule_applies(shi2, 3)


def test_loop_rule_departs_from_the_count_at_small_moduli(shi2: GainGraph) -> None:
    assert modular_loop_rule(shi2, 1) == 1
    assert modular_chromatic(shi2, 1) == 0
    assert not loop_rule_applies(shi2, 1)

    doubled = GainGraph.build(2, [(1, 2, 0), (1, 2, 2)])
    assert modular_loop_rule(doubled, 2) == 4
    assert modular_chromatic(doubled, 2) == oracle_modular(doubled, 2) == 2


def test_modular_deletion_contraction_examples(shi2: GainGraph, linial2: GainGraph) -> None:
    assert modular_dc_check(shi2, (1, 2, 0), 1) == (0, 0)
    assert modular_dc_check(linial2, (1, 2, 1), 4) == (12, 12)
    assert modular_dc_check(GainGraph.build(2, [(1, 2, 0)]), (1, 2, 0), 2) == (2, 2)


def test_modular_deletion_contraction_needs_a_link() -> None:
    graph = GainGraph.build(1, [(1, 1, 2)])

    with pytest.raises(InvalidInput):
        modular_dc_check(graph, (1, 1, 2), 3)


def test_modular_matches_oracle_on_corpus() -> None:
    for label, graph in corpus():
        for m in range(1, 11):
            assert modular_chromatic(graph, m) == oracle_modular(graph, m), (label, m)


def test_modular_matches_characteristic_polynomial_above_circle_gains() -> None:
    for label, graph in corpus():
        polynomial = balanced_chromatic_polynomial(graph)
        start = max_circle_gain(graph) + 1
        for m in range(start, start + 4):
            assert modular_chromatic(graph, m) == polynomial(m), (label, m)


def test_loop_rule_on_its_domain() -> None:
    for label, graph in corpus():
        for m in range(1, 11):
            if loop_rule_applies(graph, m):
                assert modular_loop_rule(graph, m) == oracle_modular(graph, m), (label, m)


def test_modular_deletion_contraction_on_corpus() -> None:
    for label, graph in corpus():
        for link in graph.links:
            for m in range(1, 11):
                whole, split = modular_dc_check(graph, link, m)
                assert whole == split, (label, link.as_triple(), m)
