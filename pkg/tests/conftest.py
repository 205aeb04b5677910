"""Shared fixtures and corpus builders for the test suite.

The random-graph corpus is the workhorse for oracle comparisons: small
G(n, p) graphs whose properties are cheap to recompute by brute force.
Classic benchmark networks beyond the bundled one are optional; tests that
need them skip when the files are absent from the data directory.
"""

from __future__ import annotations

import random

import pytest

from lpakit import Graph, dataset_path, karate_graph, load_dataset


def random_graph(rng: random.Random, max_n: int = 30) -> Graph:
    """One G(n, p) graph with n in [4, max_n] and edge probability in [0.2, 0.6]."""
    n = rng.randint(4, max_n)
    p = rng.uniform(0.2, 0.6)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_graph_corpus(count: int, seed: int, max_n: int = 30) -> list[Graph]:
    rng = random.Random(seed)
    return [random_graph(rng, max_n) for _ in range(count)]


def random_labeling(rng: random.Random, n: int) -> list[int]:
    """Per-node labels drawn from a small pool so repeated labels are common."""
    k = rng.randint(1, max(2, n // 2))
    return [rng.randrange(k) for _ in range(n)]


def random_partition(rng: random.Random, n: int,
                     k_max: int | None = None) -> list[set[int]]:
    """A valid partition of 0..n-1 into 1..k_max non-empty communities."""
    k = rng.randint(1, k_max if k_max is not None else max(2, n // 2))
    member = [rng.randrange(k) for _ in range(n)]
    groups: dict[int, set[int]] = {}
    for i, c in enumerate(member):
        groups.setdefault(c, set()).add(i)
    return list(groups.values())


def require_dataset(name: str) -> Graph:
    """Load an optional benchmark network or skip the calling test."""
    if dataset_path(name) is None:
        pytest.skip(f"dataset {name!r} not present in the data directory")
    return load_dataset(name)


@pytest.fixture(scope="session")
def karate() -> Graph:
    return karate_graph()


@pytest.fixture(scope="session")
def small_corpus() -> list[Graph]:
    """Fifty small random graphs reused by property tests within one session."""
    return random_graph_corpus(50, seed=90)
