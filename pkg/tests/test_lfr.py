"""Planted-partition benchmark generator: sampling, feasibility, realized structure."""

from __future__ import annotations

import io
import random
import statistics
from collections import Counter

import pytest

from lpakit import (
    Graph,
    LfrFeasibilityError,
    LfrParams,
    PlantedNetwork,
    generate,
    mean_clustering,
    membership,
    realized_mixing,
    sample_power_law,
    write_truth,
)


def community_is_connected(g: Graph, comm: frozenset[int]) -> bool:
    start = next(iter(comm))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in g.adj[u]:
            if v in comm and v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == len(comm)


# ------------------------------------------------------------- sampling

def test_power_sample_degenerate_support():
    rng = random.Random(0)
    assert all(sample_power_law(2.0, 7, 7, rng) == 7 for _ in range(100))


def test_power_sample_rejects_bad_support():
    rng = random.Random(0)
    with pytest.raises(ValueError):
        sample_power_law(2.0, 5, 4, rng)
    with pytest.raises(ValueError):
        sample_power_law(2.0, 0, 4, rng)
    with pytest.raises(ValueError):
        sample_power_law(-1.0, 1, 4, rng)


def test_power_sample_weight_ratio_matches_exact_model():
    rng = random.Random(12)
    counts = Counter(sample_power_law(2.0, 10, 50, rng) for _ in range(100_000))
    ratio = counts[10] / counts[20]
    assert ratio == pytest.approx(4.0, rel=0.10)
    assert min(counts) >= 10
    assert max(counts) <= 50


def test_power_sample_zero_exponent_is_uniform():
    rng = random.Random(13)
    lo, hi = 10, 50
    trials = 100_000
    counts = Counter(sample_power_law(0.0, lo, hi, rng) for _ in range(trials))
    expected = trials / (hi - lo + 1)
    chi2 = sum((counts[x] - expected) ** 2 / expected for x in range(lo, hi + 1))
    assert chi2 < 80.0  # 40 degrees of freedom; far tail cutoff


# ----------------------------------------------------------- parameters

def test_params_validation_errors():
    with pytest.raises(LfrFeasibilityError):
        LfrParams(mu=1.0)
    with pytest.raises(LfrFeasibilityError):
        LfrParams(mu=-0.1)
    with pytest.raises(LfrFeasibilityError):
        LfrParams(mu=0.1, n=1)
    with pytest.raises(LfrFeasibilityError):
        LfrParams(mu=0.1, size_min=60, size_max=50)
    with pytest.raises(LfrFeasibilityError):
        LfrParams(mu=0.1, avg_k=60.0, max_k=50)
    with pytest.raises(LfrFeasibilityError):
        LfrParams(mu=0.1, n=40, max_k=50)
    with pytest.raises(LfrFeasibilityError):
        # intra stubs could not fit inside the smallest community
        LfrParams(mu=0.1, avg_k=12.0, max_k=50, size_min=10)
    with pytest.raises(LfrFeasibilityError):
        LfrParams(mu=0.1, degree_exp=-2.0)


def test_params_round_trip_dict():
    p = LfrParams(mu=0.25, seed=3)
    d = p.to_dict()
    assert d["mu"] == 0.25
    assert LfrParams(**d) == p


# ----------------------------------------------------------- generation

def test_generate_default_parameters_hit_targets():
    net = generate(LfrParams(mu=0.1, seed=5))
    g = net.graph
    g.validate()
    assert g.n == 1000
    mean_degree = 2 * g.m / g.n
    assert mean_degree == pytest.approx(5.0, abs=0.5)
    assert max(g.degrees) <= 50
    assert realized_mixing(net) == pytest.approx(0.1, abs=0.03)


def test_generate_truth_is_a_valid_partition_with_bounded_sizes():
    params = LfrParams(mu=0.2, seed=9)
    net = generate(params)
    membership(net.truth, net.graph.n)  # raises if not a partition
    sizes = sorted(len(c) for c in net.truth)
    assert sizes[0] >= params.size_min
    # the final community may absorb a short remainder when sizes close out n
    assert sizes[-1] <= params.size_max + params.size_min - 1
    assert sum(sizes) == params.n


def test_generate_zero_mixing_keeps_all_edges_internal():
    params = LfrParams(mu=0.0, n=200, avg_k=5.0, max_k=20,
                       size_min=10, size_max=30, seed=2)
    net = generate(params)
    assert realized_mixing(net) == 0.0
    member = membership(net.truth, net.graph.n)
    for u in range(net.graph.n):
        for v in net.graph.adj[u]:
            assert member[u] == member[v]


def test_generate_half_mixing_lands_on_target():
    values = [realized_mixing(generate(LfrParams(mu=0.5, seed=s)))
              for s in range(3)]
    assert statistics.mean(values) == pytest.approx(0.5, abs=0.05)


def test_generate_communities_connected_at_low_mixing():
    for mu in (0.1, 0.3, 0.5):
        net = generate(LfrParams(mu=mu, seed=11))
        for comm in net.truth:
            assert community_is_connected(net.graph, comm), (
                f"disconnected planted community at mu={mu}")


def test_generate_is_deterministic_per_seed():
    a = generate(LfrParams(mu=0.3, seed=77))
    b = generate(LfrParams(mu=0.3, seed=77))
    assert a.graph.adj == b.graph.adj
    assert a.truth == b.truth
    c = generate(LfrParams(mu=0.3, seed=78))
    assert a.graph.adj != c.graph.adj


def test_generate_degree_cap_holds_across_mixes():
    for mu in (0.1, 0.6):
        net = generate(LfrParams(mu=mu, seed=21))
        assert max(net.graph.degrees) <= 50


def test_clustering_drops_as_mixing_rises():
    cc = {}
    for mu in (0.1, 0.3):
        vals = [mean_clustering(generate(LfrParams(mu=mu, seed=s)).graph)
                for s in range(3)]
        cc[mu] = statistics.mean(vals)
    assert cc[0.3] < cc[0.1]


def test_realized_mixing_extremes():
    g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    whole = PlantedNetwork(g, [frozenset({0, 1, 2})], LfrParams(mu=0.1))
    assert realized_mixing(whole) == 0.0
    singles = PlantedNetwork(g, [frozenset({i}) for i in range(3)],
                             LfrParams(mu=0.1))
    assert realized_mixing(singles) == 1.0
    empty = PlantedNetwork(Graph.from_edges(2, []),
                           [frozenset({0}), frozenset({1})], LfrParams(mu=0.1))
    assert realized_mixing(empty) == 0.0


def test_write_truth_lines_are_node_sorted():
    truth = [frozenset({1, 3}), frozenset({0, 2})]
    buf = io.StringIO()
    write_truth(truth, buf)
    assert buf.getvalue().splitlines() == ["0 1", "1 0", "2 1", "3 0"]
