"""Asynchronous label propagation with a neighborhood-strength score rule.

Two drivers are provided. run_original sweeps all nodes in fresh random
permutations until a sweep ends with every node passive. run_speedup keeps
the set of active nodes (nodes whose current label is not among the argmax
labels of their neighborhood score) in a constant-time sample pool and only
ever updates those, so every performed update changes a label.

The score of a candidate label k at node i is

    S(k) = sum over neighbors j carrying k of (1 + c * h(j, i))

where h(j, i) counts j's links into the rest of i's neighborhood and
c in [0, 1] weighs that term. c = 0 reduces the rule to plain majority
voting over neighbor labels.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from enum import Enum

from .graph import Graph

Labeling = list[int]


class NodeState(Enum):
    INTERIOR_PASSIVE = "interior_passive"    # all neighbors share the node's label
    BOUNDARY_PASSIVE = "boundary_passive"    # mixed neighborhood, own label still argmax
    BOUNDARY_ACTIVE = "boundary_active"      # own label not argmax: an update must change it


@dataclass(frozen=True)
class LpaConfig:
    """Run parameters. max_updates caps attempted updates (None means 100*n)."""

    c: float = 0.0
    seed: int = 0
    max_updates: int | None = None

    def __post_init__(self):
        if not 0.0 <= self.c <= 1.0:
            raise ValueError("c must lie in [0, 1]")
        if self.max_updates is not None and self.max_updates < 0:
            raise ValueError("max_updates must be non-negative")


@dataclass
class RunResult:
    """Outcome of one run. runtime_ms is informational and excluded from equality."""

    labels: Labeling
    effective_updates: int
    attempted_updates: int
    sweeps: int
    converged: bool
    runtime_ms: float = field(default=0.0, compare=False)

    def to_json(self) -> str:
        return json.dumps({
            "effective_updates": self.effective_updates,
            "sweeps": self.sweeps,
            "converged": self.converged,
            "runtime_ms": self.runtime_ms,
        })


class ActivePool:
    """Set of node ids with O(1) insert, remove and uniform sampling.

    A dense position index plus swap-remove keeps the backing list compact,
    so sampling is a single randrange; the operation order fully determines
    the layout, which keeps runs reproducible.
    """

    __slots__ = ("_items", "_pos")

    def __init__(self, n: int):
        self._items: list[int] = []
        self._pos = [-1] * n

    def __len__(self) -> int:
        return len(self._items)

    def __contains__(self, i: int) -> bool:
        return self._pos[i] >= 0

    def add(self, i: int) -> None:
        if self._pos[i] < 0:
            self._pos[i] = len(self._items)
            self._items.append(i)

    def discard(self, i: int) -> None:
        p = self._pos[i]
        if p < 0:
            return
        last = self._items[-1]
        self._items[p] = last
        self._pos[last] = p
        self._items.pop()
        self._pos[i] = -1

    def sample(self, rng: random.Random) -> int:
        return self._items[rng.randrange(len(self._items))]

    def members(self) -> list[int]:
        return list(self._items)


def initial_labels(n: int) -> Labeling:
    """Every node starts with its own id as label."""
    return list(range(n))


def neighborhood_link_count(g: Graph, j: int, i: int) -> int:
    """h(j, i): links from neighbor j to the other neighbors of i.

    The j-i link itself never counts (i is not its own neighbor), and links
    from j to nodes outside i's neighborhood are ignored.
    """
    assert j in g.neighbor_sets[i], "j must be a neighbor of i"
    return g.common_neighbors(i, j)


def _score_parts(g: Graph, labels: Labeling, i: int, with_h: bool,
                 h: dict[int, int] | None):
    """Per-label (neighbor count, summed link count) pairs around node i."""
    counts: dict[int, int] = {}
    hsums: dict[int, int] = {}
    if not with_h:
        for j in g.adj[i]:
            k = labels[j]
            counts[k] = counts.get(k, 0) + 1
        return counts, hsums
    if h is not None:
        base = i * g.n
        for j in g.adj[i]:
            k = labels[j]
            counts[k] = counts.get(k, 0) + 1
            hsums[k] = hsums.get(k, 0) + h[base + j]
    else:
        for j in g.adj[i]:
            k = labels[j]
            counts[k] = counts.get(k, 0) + 1
            hsums[k] = hsums.get(k, 0) + g.common_neighbors(i, j)
    return counts, hsums


def label_scores(g: Graph, labels: Labeling, i: int, c: float,
                 _h: dict[int, int] | None = None) -> dict[int, float]:
    """Score every label present among i's neighbors.

    With c = 0 the scores are exact integer neighbor counts, so ties are
    decided by equality of counts rather than float comparisons.
    """
    if c == 0:
        counts, _ = _score_parts(g, labels, i, False, None)
        return counts
    counts, hsums = _score_parts(g, labels, i, True, _h)
    return {k: counts[k] + c * hsums[k] for k in counts}


def _argmax_labels(scores: dict[int, float]) -> list[int]:
    best = max(scores.values())
    return [k for k, v in scores.items() if v == best]


def classify_node(g: Graph, labels: Labeling, i: int, c: float,
                  _h: dict[int, int] | None = None) -> NodeState:
    """State of node i under the current labeling and score rule."""
    nbrs = g.adj[i]
    if not nbrs:
        return NodeState.INTERIOR_PASSIVE
    own = labels[i]
    for j in nbrs:
        if labels[j] != own:
            break
    else:
        return NodeState.INTERIOR_PASSIVE
    scores = label_scores(g, labels, i, c, _h)
    mine = scores.get(own)
    if mine is not None and mine == max(scores.values()):
        return NodeState.BOUNDARY_PASSIVE
    return NodeState.BOUNDARY_ACTIVE


def update_node(g: Graph, labels: Labeling, i: int, c: float, rng: random.Random,
                _h: dict[int, int] | None = None) -> int:
    """Relabel active node i to a uniformly chosen argmax label and return it.

    Calling this on a passive node is a contract violation (debug assertion):
    by the definition of active, an update here always changes the label.
    """
    assert classify_node(g, labels, i, c, _h) is NodeState.BOUNDARY_ACTIVE, \
        "update_node requires an active node"
    best = _argmax_labels(label_scores(g, labels, i, c, _h))
    new = best[0] if len(best) == 1 else rng.choice(best)
    labels[i] = new
    return new


def run_speedup(g: Graph, cfg: LpaConfig, initial: Labeling | None = None,
                pool_check: bool = False) -> RunResult:
    """Active-pool driver: sample an active node, update it, reclassify locally.

    After every update only the updated node and its neighbors can change
    state, so the pool is maintained exactly with local reclassification.
    Converged means the pool emptied; hitting the update cap returns the
    partial labeling with converged=False. pool_check rescans the whole
    graph after each update (tests only).
    """
    labels = initial_labels(g.n) if initial is None else list(initial)
    if len(labels) != g.n:
        raise ValueError("initial labeling length does not match node count")
    rng = random.Random(cfg.seed)
    c = cfg.c
    h = g.common_neighbor_map() if c > 0 else None
    cap = cfg.max_updates if cfg.max_updates is not None else 100 * g.n
    active = NodeState.BOUNDARY_ACTIVE
    t0 = time.perf_counter()
    pool = ActivePool(g.n)
    for i in range(g.n):
        if classify_node(g, labels, i, c, h) is active:
            pool.add(i)
    effective = 0
    adj = g.adj
    while len(pool) and effective < cap:
        i = pool.sample(rng)
        best = _argmax_labels(label_scores(g, labels, i, c, h))
        labels[i] = best[0] if len(best) == 1 else rng.choice(best)
        effective += 1
        # the updated node is always passive now: its new label is argmax of
        # scores that do not depend on its own label
        pool.discard(i)
        for v in adj[i]:
            if classify_node(g, labels, v, c, h) is active:
                pool.add(v)
            else:
                pool.discard(v)
        if pool_check:
            want = {v for v in range(g.n) if classify_node(g, labels, v, c, h) is active}
            assert set(pool.members()) == want, "pool out of sync with active set"
    ms = (time.perf_counter() - t0) * 1000.0
    return RunResult(labels, effective, effective, 0, len(pool) == 0, ms)


def run_original(g: Graph, cfg: LpaConfig, initial: Labeling | None = None) -> RunResult:
    """Sweep driver: visit all nodes in a fresh random permutation per sweep.

    Every visited node adopts a uniformly chosen argmax label, re-rolling
    ties even when its current label is among them — the extra churn in
    tie-heavy regions is characteristic of the classic sweep algorithm. The
    run stops once a sweep begins with every node passive (its label in its
    argmax set); attempted updates count one per visit (sweeps * n when the
    cap never triggers).
    """
    labels = initial_labels(g.n) if initial is None else list(initial)
    if len(labels) != g.n:
        raise ValueError("initial labeling length does not match node count")
    rng = random.Random(cfg.seed)
    c = cfg.c
    h = g.common_neighbor_map() if c > 0 else None
    cap = cfg.max_updates if cfg.max_updates is not None else 100 * g.n
    active = NodeState.BOUNDARY_ACTIVE
    t0 = time.perf_counter()
    order = list(range(g.n))
    attempted = 0
    effective = 0
    sweeps = 0
    converged = False
    while True:
        if all(classify_node(g, labels, v, c, h) is not active for v in range(g.n)):
            converged = True
            break
        if attempted >= cap:
            break
        hit_cap = False
        rng.shuffle(order)
        for i in order:
            if attempted >= cap:
                hit_cap = True
                break
            attempted += 1
            if not g.adj[i]:
                continue
            scores = label_scores(g, labels, i, c, h)
            best = _argmax_labels(scores)
            if len(best) == 1 and labels[i] == best[0]:
                continue
            new = best[0] if len(best) == 1 else rng.choice(best)
            if new != labels[i]:
                labels[i] = new
                effective += 1
        if hit_cap:
            break
        sweeps += 1
    ms = (time.perf_counter() - t0) * 1000.0
    return RunResult(labels, effective, attempted, sweeps, converged, ms)


def extract_communities(g: Graph, labels: Labeling) -> list[frozenset[int]]:
    """Connected components of the same-label subgraph, ordered by smallest member."""
    if len(labels) != g.n:
        raise ValueError("labeling length does not match node count")
    seen = [False] * g.n
    communities: list[frozenset[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        lab = labels[start]
        seen[start] = True
        comp = [start]
        stack = [start]
        while stack:
            u = stack.pop()
            for v in g.adj[u]:
                if not seen[v] and labels[v] == lab:
                    seen[v] = True
                    comp.append(v)
                    stack.append(v)
        communities.append(frozenset(comp))
    return communities


def write_labeling(g: Graph, labels: Labeling, file) -> None:
    """One 'original_node_id label_id' line per node."""
    for i in range(g.n):
        file.write(f"{g.names[i]} {labels[i]}\n")
