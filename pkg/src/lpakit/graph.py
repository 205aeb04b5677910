"""Undirected simple graphs: edge-list parsing, components, clustering coefficients."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import ceil
from typing import Iterable, Sequence

log = logging.getLogger(__name__)


class EdgeListParseError(ValueError):
    """Malformed edge-list input. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class Graph:
    """Immutable undirected simple graph over dense node ids 0..n-1.

    Adjacency lists are sorted ascending and symmetric, with no self-loops and
    no duplicate entries. ``names[i]`` keeps the external id the node had in
    the source data (defaults to ``str(i)``) so labelings can be written back
    in the caller's vocabulary.
    """

    __slots__ = ("n", "m", "adj", "degrees", "names", "_nbr_sets", "_common_map")

    def __init__(self, adj: Sequence[Iterable[int]], names: Sequence[str] | None = None):
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(nbrs)) for nbrs in adj)
        self.n: int = len(self.adj)
        self.degrees: tuple[int, ...] = tuple(len(nbrs) for nbrs in self.adj)
        self.m: int = sum(self.degrees) // 2
        if names is None:
            self.names: tuple[str, ...] = tuple(str(i) for i in range(self.n))
        else:
            self.names = tuple(names)
        if len(self.names) != self.n:
            raise ValueError("names length does not match node count")
        self._nbr_sets: tuple[set[int], ...] | None = None
        self._common_map: dict[int, int] | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   names: Sequence[str] | None = None) -> "Graph":
        """Build a graph on n nodes from (u, v) pairs, dropping loops and duplicates."""
        adj: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                continue
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside node range 0..{n - 1}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                continue
            seen.add(e)
            adj[e[0]].append(e[1])
            adj[e[1]].append(e[0])
        return cls(adj, names)

    @property
    def neighbor_sets(self) -> tuple[set[int], ...]:
        if self._nbr_sets is None:
            self._nbr_sets = tuple(set(a) for a in self.adj)
        return self._nbr_sets

    def common_neighbors(self, i: int, j: int) -> int:
        """Number of nodes adjacent to both i and j."""
        sets = self.neighbor_sets
        si, sj = sets[i], sets[j]
        if len(si) > len(sj):
            si, sj = sj, si
        return len(si & sj)

    def common_neighbor_map(self) -> dict[int, int]:
        """Common-neighbor count for every edge, keyed i*n+j in both orders.

        Computed once per graph and cached; the packed int key keeps lookups
        cheap in the update loops.
        """
        if self._common_map is None:
            n = self.n
            sets = self.neighbor_sets
            cm: dict[int, int] = {}
            for i in range(n):
                si = sets[i]
                base = i * n
                for j in self.adj[i]:
                    if j < i:
                        continue
                    sj = sets[j]
                    h = len(si & sj) if len(si) <= len(sj) else len(sj & si)
                    cm[base + j] = h
                    cm[j * n + i] = h
            self._common_map = cm
        return self._common_map

    def validate(self) -> None:
        """Full-scan check of the structural invariants; raises ValueError on breach."""
        sets = self.neighbor_sets
        for i, nbrs in enumerate(self.adj):
            if list(nbrs) != sorted(set(nbrs)):
                raise ValueError(f"adjacency of node {i} not sorted/deduplicated")
            if i in sets[i]:
                raise ValueError(f"self-loop at node {i}")
            for j in nbrs:
                if not (0 <= j < self.n):
                    raise ValueError(f"neighbor {j} of node {i} out of range")
                if i not in sets[j]:
                    raise ValueError(f"asymmetric edge ({i}, {j})")
        if sum(self.degrees) != 2 * self.m:
            raise ValueError("degree sum does not equal 2m")

    def __repr__(self) -> str:  # pragma: no cover
        return f"Graph(n={self.n}, m={self.m})"


def parse_edge_list(text: str | Iterable[str]) -> Graph:
    """Parse whitespace-separated edge lines into a Graph.

    Blank lines and lines starting with '#' or '%' are skipped. Node tokens
    are arbitrary strings, mapped to dense ids in first-seen order; the
    original tokens are retained in Graph.names. Self-loops are dropped and
    duplicate edges collapsed, with counts reported via logging.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    ids: dict[str, int] = {}
    edges: set[tuple[int, int]] = set()
    self_loops = 0
    duplicates = 0
    data_lines = 0
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line[0] in "#%":
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(f"expected 2 node tokens, got {len(tokens)}", lineno)
        a = ids.setdefault(tokens[0], len(ids))
        b = ids.setdefault(tokens[1], len(ids))
        data_lines += 1
        if a == b:
            self_loops += 1
            continue
        e = (a, b) if a < b else (b, a)
        if e in edges:
            duplicates += 1
        else:
            edges.add(e)
    if data_lines == 0:
        raise EdgeListParseError("no edges found in input")
    n = len(ids)
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    names = [None] * n
    for tok, i in ids.items():
        names[i] = tok
    if self_loops or duplicates:
        log.info("parse_edge_list: dropped %d self-loops, %d duplicate edges",
                 self_loops, duplicates)
    return Graph(adj, names)  # type: ignore[arg-type]


def largest_connected_component(g: Graph) -> Graph:
    """Largest connected component, re-densified to 0..k-1.

    Ties between equal-sized components go to the one containing the smallest
    original node id. Node names are carried over.
    """
    if g.n == 0:
        raise ValueError("graph has no nodes")
    seen = [False] * g.n
    best: list[int] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        stack = [start]
        while stack:
            u = stack.pop()
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    stack.append(v)
        # strict > keeps the earlier component on ties, i.e. the one whose
        # smallest member id is lowest
        if len(comp) > len(best):
            best = comp
    best.sort()
    remap = {old: new for new, old in enumerate(best)}
    adj = [[remap[v] for v in g.adj[old] if v in remap] for old in best]
    return Graph(adj, [g.names[old] for old in best])


def clustering_coefficient(g: Graph, i: int) -> float:
    """Local clustering coefficient z / (d*(d-1)/2); nodes with d <= 1 score 1.0."""
    d = g.degrees[i]
    if d <= 1:
        return 1.0
    sets = g.neighbor_sets
    si = sets[i]
    twice_links = 0
    for j in g.adj[i]:
        sj = sets[j]
        twice_links += len(si & sj) if len(si) <= len(sj) else len(sj & si)
    return twice_links / (d * (d - 1))


def mean_clustering(g: Graph) -> float:
    if g.n == 0:
        raise ValueError("graph has no nodes")
    return sum(clustering_coefficient(g, i) for i in range(g.n)) / g.n


@dataclass(frozen=True)
class CcHistogram:
    """Cumulative clustering-coefficient distribution over fixed-width bins.

    cumulative[b] is the fraction of nodes with coefficient <= the b-th bin's
    upper edge; the final entry is 1.0 by construction.
    """

    bin_width: float
    cumulative: tuple[float, ...]
    mean_cc: float

    @property
    def bin_edges(self) -> tuple[float, ...]:
        return tuple((b + 1) * self.bin_width for b in range(len(self.cumulative)))


def cc_distribution(g: Graph, bin_width: float = 0.1) -> CcHistogram:
    """Cumulative histogram of local clustering coefficients."""
    if not 0 < bin_width <= 1:
        raise ValueError("bin_width must be in (0, 1]")
    if g.n == 0:
        raise ValueError("graph has no nodes")
    ccs = [clustering_coefficient(g, i) for i in range(g.n)]
    nbins = ceil(1.0 / bin_width)
    cumulative = []
    for b in range(nbins):
        edge = (b + 1) * bin_width + 1e-9
        cumulative.append(sum(1 for v in ccs if v <= edge) / g.n)
    return CcHistogram(bin_width, tuple(cumulative), sum(ccs) / g.n)


def summary(g: Graph) -> dict:
    """Size, density and clustering summary used by the CLI."""
    return {
        "n": g.n,
        "m": g.m,
        "mean_degree": 2 * g.m / g.n if g.n else 0.0,
        "mean_cc": mean_clustering(g) if g.n else 0.0,
    }


def write_edge_list(g: Graph, file) -> None:
    """Write one 'u v' line per edge using the graph's external node names."""
    for i in range(g.n):
        ni = g.names[i]
        for j in g.adj[i]:
            if j > i:
                file.write(f"{ni} {g.names[j]}\n")
