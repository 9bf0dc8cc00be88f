"""Matching certificates and exact Stanley depth against naive search."""
from __future__ import annotations

import pytest
from hypothesis import given, settings

import oracles
from strategies import normalized_pairs, pairs
from sqfdepth import (
    FactorPair,
    brute_force_sdepth,
    build_graph,
    hall_certificate,
    max_matching,
    parse_ideal,
    reference,
    rho,
    sdepth_equals_indeg,
)
from sqfdepth.core import intersect
from sqfdepth.errors import (
    EmptyLeftSideError,
    NotNormalizedError,
    TooLargeError,
)


def _poset_size(pair, cap=64):
    count = 0
    ig = list(pair.I.gen_masks())
    jg = list(pair.J.gen_masks())
    for mask in range(1 << pair.n):
        if oracles.in_factor(ig, jg, mask):
            count += 1
            if count > cap:
                return count
    return count


def test_graph_shape_on_reference_pair():
    pair = reference.witness_pair()
    graph = build_graph(pair)
    assert graph.d == 2
    assert [str(m) for m in graph.left] == [
        "x1*x3", "x2*x4", "x3*x4", "x1*x5", "x1*x6",
    ]
    assert len(graph.right) == 4  # the s = 4 uncovered cubics
    # adjacency is divisibility, verified pointwise
    for u, row in enumerate(graph.adjacency):
        for v in range(len(graph.right)):
            edge = graph.left[u].divides(graph.right[v])
            assert (v in row) == edge
    assert graph.edge_count == sum(len(r) for r in graph.adjacency)


def test_graph_refusals():
    I = parse_ideal("x1, x2", 3)
    with pytest.raises(NotNormalizedError):
        build_graph(FactorPair(I, parse_ideal("x2", 3)))
    pair = FactorPair(parse_ideal("x1*x2", 3), parse_ideal("x1*x2*x3", 3))
    with pytest.raises(EmptyLeftSideError):
        build_graph(pair, d=1)


@given(normalized_pairs(max_n=6))
@settings(max_examples=30)
def test_matching_size_matches_kuhn(pair):
    graph = build_graph(pair)
    matching = max_matching(graph)
    adjacency = [list(row) for row in graph.adjacency]
    assert matching.size == oracles.kuhn_matching_size(adjacency, len(graph.right))
    # genuinely a matching
    lefts = [u for u, _ in matching.pairs]
    rights = [v for _, v in matching.pairs]
    assert len(set(lefts)) == len(lefts)
    assert len(set(rights)) == len(rights)
    for u, v in matching.pairs:
        assert v in graph.adjacency[u]


@given(normalized_pairs(max_n=6))
@settings(max_examples=30)
def test_hall_certificate_invariants(pair):
    graph = build_graph(pair)
    cert = hall_certificate(graph)
    adjacency = [list(row) for row in graph.adjacency]
    best = oracles.kuhn_matching_size(adjacency, len(graph.right))
    if cert.complete:
        assert best == len(graph.left)
        assert len(cert.pairs) == len(graph.left)
        assert not cert.violator and not cert.gamma
    else:
        deficiency = len(graph.left) - best
        assert deficiency > 0
        A = list(cert.violator)
        gamma = set(cert.gamma)
        assert gamma == oracles.neighborhood(adjacency, A)
        assert len(gamma) == len(A) - deficiency
        assert len(gamma) < len(A)


@given(normalized_pairs(max_n=5))
@settings(max_examples=40)
def test_decision_agrees_with_brute_force(pair):
    if _poset_size(pair, cap=20) > 20:
        return
    decision = sdepth_equals_indeg(pair)
    brute = brute_force_sdepth(pair)
    d = pair.d()
    assert brute >= d
    assert decision.answer == (brute == d)
    if decision.answer:
        witness = decision.witness_ideal
        assert witness is not None
        lhs = rho(witness, d)
        rhs = rho(witness, d + 1) - rho(intersect(witness, pair.J), d + 1)
        assert lhs > rhs
        # the count on the violator ideal, recomputed naively
        wg = list(witness.gen_masks())
        assert oracles.rho_count(wg, pair.n, d) == lhs


@given(pairs(max_n=4))
@settings(max_examples=20)
def test_brute_force_matches_exhaustive_partition_search(pair):
    if _poset_size(pair, cap=11) > 11:
        return
    ig = list(pair.I.gen_masks())
    jg = list(pair.J.gen_masks())
    assert brute_force_sdepth(pair) == oracles.sdepth_exhaustive(pair.n, ig, jg)


def test_reference_sdepth_values():
    assert brute_force_sdepth(reference.witness_pair()) == 2
    assert brute_force_sdepth(reference.tight_pair()) == 3
    assert sdepth_equals_indeg(reference.witness_pair()).answer is True
    assert sdepth_equals_indeg(reference.tight_pair()).answer is False


def test_certificate_json_shapes():
    complete = sdepth_equals_indeg(reference.tight_pair())
    doc = complete.to_json()
    assert doc["sdepth_equals_indeg"] is False
    assert doc["certificate"]["type"] == "matching"
    assert len(doc["certificate"]["pairs"]) == 3
    violated = sdepth_equals_indeg(reference.witness_pair())
    doc = violated.to_json()
    assert doc["sdepth_equals_indeg"] is True
    cert = doc["certificate"]
    assert cert["type"] == "violator"
    assert len(cert["gamma"]) < len(cert["A"])
    assert doc["witness_ideal"]


def test_size_guards():
    wide = FactorPair(parse_ideal("x1", 26), parse_ideal("x1*x2", 26))
    with pytest.raises(TooLargeError):
        brute_force_sdepth(wide)
    pair = reference.witness_pair()
    with pytest.raises(TooLargeError):
        brute_force_sdepth(pair, limit=3)
