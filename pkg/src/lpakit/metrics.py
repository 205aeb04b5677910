"""Partition quality and similarity: modularity, NMI, ARI, size distributions."""

from __future__ import annotations

import math
from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Sequence, AbstractSet

import numpy as np

from .graph import Graph

# A partition is a sequence of disjoint node sets covering 0..n-1 with no
# empty community; extract_communities and LFR ground truths produce these.
Partition = Sequence[AbstractSet[int]]


def membership(partition: Partition, n: int) -> list[int]:
    """Community index per node; validates the partition covers 0..n-1 exactly."""
    member = [-1] * n
    for k, comm in enumerate(partition):
        if not comm:
            raise ValueError(f"community {k} is empty")
        for i in comm:
            if not 0 <= i < n:
                raise ValueError(f"node {i} outside 0..{n - 1}")
            if member[i] != -1:
                raise ValueError(f"node {i} appears in two communities")
            member[i] = k
    missing = member.count(-1)
    if missing:
        raise ValueError(f"{missing} nodes not covered by the partition")
    return member


def _partition_size(partition: Partition) -> int:
    return sum(len(c) for c in partition)


def modularity(g: Graph, partition: Partition) -> float:
    """Newman modularity: sum over communities of e_kk - a_k^2."""
    if g.m == 0:
        raise ValueError("modularity undefined on a graph with no edges")
    member = membership(partition, g.n)
    k = len(partition)
    intra = [0] * k
    deg_sum = [0] * k
    for i in range(g.n):
        ci = member[i]
        deg_sum[ci] += g.degrees[i]
        for j in g.adj[i]:
            if j > i and member[j] == ci:
                intra[ci] += 1
    m = g.m
    two_m = 2.0 * m
    return sum(intra[x] / m - (deg_sum[x] / two_m) ** 2 for x in range(k))


def nmi(p1: Partition, p2: Partition) -> float:
    """Normalized mutual information between two partitions of the same nodes.

    Confusion-matrix form with natural logarithms, normalized by the mean of
    the two partition entropies. When both partitions are the single
    whole-set community the value is 1 by convention.
    """
    n = _partition_size(p1)
    if n != _partition_size(p2):
        raise ValueError("partitions cover different numbers of nodes")
    if n == 0:
        raise ValueError("empty partitions")
    m1 = membership(p1, n)
    m2 = membership(p2, n)
    row = Counter(m1)
    col = Counter(m2)
    joint = Counter(zip(m1, m2))
    denom = (sum(x * math.log(x / n) for x in row.values())
             + sum(x * math.log(x / n) for x in col.values()))
    if denom == 0.0:
        # both partitions are trivial (one community each), hence identical
        return 1.0
    num = sum(nij * math.log(nij * n / (row[a] * col[b]))
              for (a, b), nij in joint.items())
    val = -2.0 * num / denom
    return min(1.0, max(0.0, val))


def ari(p1: Partition, p2: Partition) -> float:
    """Adjusted Rand index in pair-counting form.

    Returns 1.0 when the null-adjusted denominator vanishes, which only
    happens when both partitions are the same extreme partition.
    """
    n = _partition_size(p1)
    if n != _partition_size(p2):
        raise ValueError("partitions cover different numbers of nodes")
    if n < 2:
        raise ValueError("ARI needs at least 2 nodes")
    m1 = membership(p1, n)
    m2 = membership(p2, n)
    joint = Counter(zip(m1, m2))
    sum_ij = sum(comb(v, 2) for v in joint.values())
    sum_a = sum(comb(v, 2) for v in Counter(m1).values())
    sum_b = sum(comb(v, 2) for v in Counter(m2).values())
    total = comb(n, 2)
    expected = sum_a * sum_b / total
    max_index = (sum_a + sum_b) / 2.0
    if max_index == expected:
        return 1.0
    return (sum_ij - expected) / (max_index - expected)


def size_ccdf(partition: Partition) -> list[tuple[int, float]]:
    """(s, P(S > s)) for every integer s from 1 to the largest community size."""
    if not partition:
        raise ValueError("empty partition")
    sizes = sorted(len(c) for c in partition)
    k = len(sizes)
    return [(s, (k - bisect_right(sizes, s)) / k) for s in range(1, sizes[-1] + 1)]


@dataclass(frozen=True)
class PowerLawFit:
    """Least-squares slope(s) of log P(S > s) against log s.

    segments is 1 for a single fit and 2 when a separate tail range was
    fitted independently (tail_alpha / tail_range filled in).
    """

    alpha: float
    fit_range: tuple[int, int]
    segments: int = 1
    tail_alpha: float | None = None
    tail_range: tuple[int, int] | None = None


def fit_power_law(ccdf: Sequence[tuple[int, float]],
                  fit_range: tuple[int, int]) -> PowerLawFit:
    """OLS fit of the CCDF exponent on log-log points inside fit_range.

    Points with zero probability are excluded; at least 3 usable points are
    required.
    """
    lo, hi = fit_range
    pts = [(s, p) for s, p in ccdf if lo <= s <= hi and p > 0]
    if len(pts) < 3:
        raise ValueError(f"need at least 3 positive points in range {fit_range}, "
                         f"got {len(pts)}")
    xs = np.log([float(s) for s, _ in pts])
    ys = np.log([p for _, p in pts])
    slope = float(np.polyfit(xs, ys, 1)[0])
    return PowerLawFit(slope, (lo, hi))


def fit_power_law_two_part(ccdf: Sequence[tuple[int, float]],
                           head_range: tuple[int, int],
                           tail_range: tuple[int, int]) -> PowerLawFit:
    """Two independent OLS fits on caller-chosen head and tail ranges."""
    head = fit_power_law(ccdf, head_range)
    tail = fit_power_law(ccdf, tail_range)
    return PowerLawFit(head.alpha, head.fit_range, 2, tail.alpha, tail.fit_range)


@dataclass(frozen=True)
class MetricReport:
    """Scores for one labeling: q <= 1, nmi in [0, 1], ari <= 1 when present."""

    q: float | None
    nmi: float | None
    ari: float | None
    sizes: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"q": self.q, "nmi": self.nmi, "ari": self.ari,
                "sizes": list(self.sizes)}


def score_partition(g: Graph, found: Partition,
                    truth: Partition | None = None) -> MetricReport:
    """MetricReport for a detected partition, with similarity when truth is given."""
    q = modularity(g, found) if g.m else None
    s_nmi = nmi(found, truth) if truth is not None else None
    s_ari = ari(found, truth) if truth is not None else None
    sizes = tuple(sorted((len(c) for c in found), reverse=True))
    return MetricReport(q, s_nmi, s_ari, sizes)
