"""Benchmark graphs with planted communities, power-law degrees and sizes.

The generator follows the classic planted-partition recipe at desk scale:
degrees come from a truncated power law whose realized mean is forced close
to the target, community sizes from a second power law that is trimmed to
close at exactly n nodes, each node splits its degree into intra and inter
stubs according to the mixing parameter, and the stubs are paired by a
configuration model with rejection of self-loops and duplicates plus local
rewiring. For mixing <= 0.5 a degree-preserving repair pass makes every
planted community induce a connected subgraph.
"""

from __future__ import annotations

import math
import random
from bisect import bisect_left
from dataclasses import dataclass, asdict
from functools import lru_cache
from itertools import accumulate, combinations

from .graph import Graph

_MAX_GENERATION_ATTEMPTS = 40
_MAX_MEAN_REJECTIONS = 60


class LfrFeasibilityError(ValueError):
    """Parameter combination cannot produce a valid network."""


class WiringError(RuntimeError):
    """Stub pairing or repair failed; the caller may retry with new draws."""


@dataclass(frozen=True)
class LfrParams:
    """Generation parameters; defaults give 1000 nodes, mean degree 5, sizes 10..50."""

    mu: float
    n: int = 1000
    avg_k: float = 5.0
    max_k: int = 50
    size_min: int = 10
    size_max: int = 50
    degree_exp: float = 2.0
    size_exp: float = 1.0
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.mu < 1.0:
            raise LfrFeasibilityError("mu must lie in [0, 1)")
        if self.n < 2:
            raise LfrFeasibilityError("n must be at least 2")
        if not 1 <= self.size_min <= self.size_max <= self.n:
            raise LfrFeasibilityError("need 1 <= size_min <= size_max <= n")
        if not 1.0 <= self.avg_k <= self.max_k:
            raise LfrFeasibilityError("need 1 <= avg_k <= max_k")
        if self.max_k >= self.n:
            raise LfrFeasibilityError("max_k must be smaller than n")
        if (1.0 - self.mu) * self.avg_k >= self.size_min:
            raise LfrFeasibilityError(
                "(1 - mu) * avg_k must stay below size_min so intra stubs fit")
        if self.degree_exp < 0 or self.size_exp < 0:
            raise LfrFeasibilityError("exponents must be non-negative")

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class PlantedNetwork:
    """Generated graph plus its ground-truth communities."""

    graph: Graph
    truth: list[frozenset[int]]
    params: LfrParams


@lru_cache(maxsize=512)
def _cumulative_power_weights(exponent: float, lo: int, hi: int) -> tuple[float, ...]:
    weights = [x ** (-exponent) for x in range(lo, hi + 1)]
    total = sum(weights)
    cum = list(accumulate(w / total for w in weights))
    cum[-1] = 1.0
    return tuple(cum)


def sample_power_law(exponent: float, lo: int, hi: int, rng: random.Random) -> int:
    """Draw an integer in [lo, hi] with probability proportional to x^-exponent.

    Inverse-CDF sampling on the normalized discrete weights; exponent 0 is a
    uniform draw.
    """
    if lo > hi:
        raise ValueError("lo must not exceed hi")
    if lo < 1:
        raise ValueError("support must start at 1 or above")
    if exponent < 0:
        raise ValueError("exponent must be non-negative")
    cum = _cumulative_power_weights(float(exponent), int(lo), int(hi))
    return lo + bisect_left(cum, rng.random())


def _mean_adjusted_cumulative(exponent: float, lo: int, hi: int,
                              target: float) -> tuple[int, tuple[float, ...]]:
    """Cumulative weights of a truncated power law whose mean equals target.

    The plain truncated power law rarely has the requested mean, so the mass
    of one boundary value is rescaled: the low end is shaved when the mean
    must rise, the high end when it must fall. Returns (support_lo, cum).
    """
    if not lo <= target <= hi:
        raise LfrFeasibilityError(
            f"target mean {target} outside degree support [{lo}, {hi}]")
    xs = list(range(lo, hi + 1))
    w = [x ** (-exponent) for x in xs]
    mean = sum(x * wi for x, wi in zip(xs, w)) / sum(w)
    if abs(mean - target) < 1e-12:
        total = sum(w)
        cum = list(accumulate(wi / total for wi in w))
        cum[-1] = 1.0
        return lo, tuple(cum)
    for bound_idx in (0, len(xs) - 1):
        if abs(xs[bound_idx] - target) < 1e-12:
            point = [0.0] * len(xs)
            point[bound_idx] = 1.0
            return lo, tuple(accumulate(point))

    def theta_for(a_idx: int, upper: bool) -> float | None:
        # support is xs[a_idx:] with scaled weight at xs[a_idx] (upper=False),
        # or xs[:a_idx+1] with scaled weight at xs[a_idx] (upper=True)
        a = xs[a_idx]
        if upper:
            rest = range(0, a_idx)
        else:
            rest = range(a_idx + 1, len(xs))
        s0 = sum(w[t] for t in rest)
        s1 = sum(xs[t] * w[t] for t in rest)
        denom = w[a_idx] * (a - target)
        if denom == 0:
            return None
        theta = (target * s0 - s1) / denom
        return theta if 0.0 < theta <= 1.0 else None

    if target > mean:
        for a_idx in range(len(xs)):
            theta = theta_for(a_idx, upper=False)
            if theta is not None:
                ws = [0.0] * a_idx + [theta * w[a_idx]] + w[a_idx + 1:]
                break
        else:
            raise LfrFeasibilityError("cannot match target mean degree")
    else:
        for a_idx in range(len(xs) - 1, -1, -1):
            theta = theta_for(a_idx, upper=True)
            if theta is not None:
                ws = w[:a_idx] + [theta * w[a_idx]] + [0.0] * (len(xs) - a_idx - 1)
                break
        else:
            raise LfrFeasibilityError("cannot match target mean degree")
    total = sum(ws)
    cum = list(accumulate(wi / total for wi in ws))
    cum[-1] = 1.0
    return lo, tuple(cum)


def _draw_degrees(params: LfrParams, rng: random.Random, largest_size: int) -> list[int]:
    """Degree sequence with even sum and mean within 5% of avg_k.

    The upper truncation also caps degrees whose intra share could not fit
    in the largest drawn community.
    """
    hi = min(params.max_k, params.n - 1)
    if params.mu < 1.0:
        fit_cap = int((largest_size - 1) / (1.0 - params.mu) + 1e-9)
        hi = min(hi, fit_cap)
    if hi < 1 or hi < params.avg_k:
        raise LfrFeasibilityError(
            f"degree cap {hi} cannot support mean degree {params.avg_k}")
    lo, cum = _mean_adjusted_cumulative(params.degree_exp, 1, hi, params.avg_k)
    tol = 0.05 * params.avg_k
    for _ in range(_MAX_MEAN_REJECTIONS):
        degrees = [lo + bisect_left(cum, rng.random()) for _ in range(params.n)]
        if abs(sum(degrees) / params.n - params.avg_k) > tol:
            continue
        if sum(degrees) % 2:
            for _ in range(1000):
                i = rng.randrange(params.n)
                if degrees[i] < hi:
                    degrees[i] += 1
                    break
            else:
                continue
        return degrees
    raise LfrFeasibilityError(
        "could not realize mean degree within 5% of avg_k; "
        "check degree_exp / max_k against avg_k")


def _draw_sizes(params: LfrParams, rng: random.Random) -> list[int]:
    """Community sizes drawn until they cover n nodes, then trimmed to close."""
    cum = _cumulative_power_weights(float(params.size_exp),
                                    params.size_min, params.size_max)
    sizes: list[int] = []
    total = 0
    while total < params.n:
        s = params.size_min + bisect_left(cum, rng.random())
        sizes.append(s)
        total += s
    overshoot = total - params.n
    if overshoot:
        remainder = sizes[-1] - overshoot
        if remainder >= params.size_min:
            sizes[-1] = remainder
        else:
            # closure adjustment: fold the short remainder into the previous
            # community rather than keeping an undersized one
            sizes.pop()
            if sizes:
                sizes[-1] += remainder
            else:
                sizes = [remainder]
    return sizes


def _intra_degrees(params: LfrParams, degrees: list[int],
                   rng: random.Random) -> tuple[list[int], int]:
    """Intra-community degree per node: (1 - mu) * d rounded stochastically.

    Stochastic rounding keeps the expected intra share exact for every node,
    which deterministic rounding does not at small degrees. For mu <= 0.5
    every node keeps at least one intra stub (otherwise a community holding
    a zero-intra node could never induce a connected subgraph); the second
    return value is the pre-floor stub total, the unbiased target that
    later adjustment passes rebalance back to.
    """
    share = 1.0 - params.mu
    floor_one = params.mu <= 0.5 and params.size_min >= 2
    intra = []
    drawn = 0
    for d in degrees:
        x = share * d
        k = int(x)
        frac = x - k
        if frac > 0.0 and rng.random() < frac:
            k += 1
        drawn += k
        if floor_one and k == 0 and d > 0:
            k = 1
        intra.append(k)
    return intra, drawn


def _assign_nodes(sizes: list[int], intra: list[int], rng: random.Random) -> list[int] | None:
    """Community index per node, or None when placement gets stuck.

    Nodes are placed in descending intra-degree order into a community with
    free capacity whose size exceeds the node's intra degree, chosen with
    probability proportional to remaining capacity.
    """
    n = len(intra)
    order = sorted(range(n), key=lambda i: (-intra[i], i))
    free = list(sizes)
    comm = [-1] * n
    for i in order:
        eligible = [k for k, f in enumerate(free) if f > 0 and sizes[k] - 1 >= intra[i]]
        if not eligible:
            return None
        pick = rng.randrange(sum(free[k] for k in eligible))
        for k in eligible:
            pick -= free[k]
            if pick < 0:
                break
        comm[i] = k
        free[k] -= 1
    return comm


def _balance_intra_capacity(members: list[list[int]], comm: list[int],
                            intra: list[int]) -> None:
    """Trade members between communities until each can span itself.

    A community of size s can only induce a connected subgraph when its
    members carry at least 2(s - 1) intra stubs. Capacity-based assignment
    can stuff a community with degree-1 nodes and starve it below that
    budget, so its poorest member is swapped for a slightly richer node
    from a community with surplus, which preserves community sizes, node
    degrees and every node's intra/inter split. A margin above the exact
    budget absorbs the parity and realizability adjustments that follow.
    """
    margin = 4

    def total(mem: list[int]) -> int:
        return sum(intra[i] for i in mem)

    def budget(mem: list[int]) -> int:
        return 2 * (len(mem) - 1) + margin

    for k, mem in enumerate(members):
        guard = 6 * len(mem)
        while total(mem) < budget(mem):
            guard -= 1
            if guard <= 0:
                raise WiringError("intra capacity balancing stalled")
            x = min(mem, key=lambda i: (intra[i], i))
            best = None
            for k2, mem2 in enumerate(members):
                if k2 == k:
                    continue
                surplus = total(mem2) - budget(mem2)
                if surplus <= 0:
                    continue
                for y in mem2:
                    delta = intra[y] - intra[x]
                    if delta < 1 or delta > surplus:
                        continue
                    if intra[y] > len(mem) - 1 or intra[x] > len(mem2) - 1:
                        continue
                    if best is None or (delta, intra[y], y) < best[:3]:
                        best = (delta, intra[y], y, k2)
            if best is None:
                raise WiringError("no donor for intra capacity balancing")
            _, _, y, k2 = best
            mem2 = members[k2]
            mem[mem.index(x)] = y
            mem2[mem2.index(y)] = x
            comm[x], comm[y] = k2, k


def _fix_intra_parity(members: list[list[int]], degrees: list[int],
                      intra: list[int], rng: random.Random) -> None:
    """Make each community's intra-stub sum even by flipping one node's count."""
    for mem in members:
        if sum(intra[i] for i in mem) % 2 == 0:
            continue
        cap = len(mem) - 1
        up = [i for i in mem if intra[i] < min(degrees[i], cap)]
        if up:
            intra[rng.choice(up)] += 1
            continue
        down = [i for i in mem if intra[i] > 0]
        if not down:
            raise WiringError("cannot repair intra-degree parity")
        intra[rng.choice(down)] -= 1


def _graphical(seq: list[int]) -> bool:
    """Erdos-Gallai test; seq must be sorted descending with an even sum."""
    total = sum(seq)
    if total % 2:
        return False
    prefix = 0
    for k in range(1, len(seq) + 1):
        prefix += seq[k - 1]
        rhs = k * (k - 1) + sum(min(d, k) for d in seq[k:])
        if prefix > rhs:
            return False
        if seq[k - 1] < k:  # remaining inequalities hold automatically
            break
    return True


def _shift_excess_intra(members: list[list[int]], intra: list[int]) -> int:
    """Demote intra stubs to inter stubs until every community is realizable.

    Node-to-community assignment only guarantees intra <= size - 1; a
    community stuffed with hubs plus low-degree tail nodes can still be
    non-graphical. Taking stubs from the heaviest members (two at a time, so
    the community stub sum stays even) restores realizability while keeping
    every node's total degree; it only nudges that node's intra/inter split.
    Returns the number of stubs moved.
    """
    moved = 0
    for mem in members:
        seq = sorted(((intra[i], i) for i in mem), reverse=True)
        while not _graphical([d for d, _ in seq]):
            for _ in range(2):
                d, i = seq[0]
                if d == 0:
                    raise WiringError("cannot make intra sequence graphical")
                intra[i] -= 1
                seq[0] = (d - 1, i)
                seq.sort(reverse=True)
                moved += 1
    return moved


def _rebalance_intra(members: list[list[int]], degrees: list[int],
                     intra: list[int], target_sum: int, min_intra: int,
                     rng: random.Random) -> None:
    """Nudge intra counts back toward target_sum after repair passes.

    The parity, floor and realizability adjustments each bias the total
    intra-stub count, which directly biases the realized mixing. This pass
    promotes or demotes stubs two at a time within one community (keeping
    its stub sum even and its degree sequence graphical) until the global
    total is within one stub of the unbiased target.
    """
    diff = sum(intra) - target_sum
    order = list(range(len(members)))
    while abs(diff) >= 2:
        rng.shuffle(order)
        progressed = False
        for ci in order:
            if abs(diff) < 2:
                break
            mem = members[ci]
            cap = len(mem) - 1
            step = -1 if diff > 0 else 1
            if step < 0:
                if min_intra and sum(intra[i] for i in mem) - 2 < 2 * cap:
                    continue  # keep the community's spanning-tree stub budget
                cands = sorted((i for i in mem if intra[i] - 1 >= min_intra),
                               key=lambda i: -intra[i])
            else:
                cands = sorted((i for i in mem
                                if intra[i] + 1 <= min(degrees[i], cap)),
                               key=lambda i: intra[i])
            done = False
            for a, b in combinations(cands[:4], 2):
                intra[a] += step
                intra[b] += step
                if _graphical(sorted((intra[i] for i in mem), reverse=True)):
                    done = True
                    break
                intra[a] -= step
                intra[b] -= step
            if done:
                diff += 2 * step
                progressed = True
        if not progressed:
            break


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _degree_sequence_edges(stubs: list[int]) -> set[tuple[int, int]] | None:
    """Build a simple graph with exactly the stub multiset as degrees.

    Greedy largest-first construction (connect the heaviest node to the next
    heaviest ones); returns None when the sequence is not graphical.
    """
    counts: dict[int, int] = {}
    for s in stubs:
        counts[s] = counts.get(s, 0) + 1
    remaining = [(d, node) for node, d in counts.items()]
    edges: set[tuple[int, int]] = set()
    while True:
        remaining.sort(reverse=True)
        while remaining and remaining[-1][0] == 0:
            remaining.pop()
        if not remaining:
            return edges
        d, u = remaining[0]
        if d > len(remaining) - 1:
            return None
        for t in range(1, d + 1):
            dv, v = remaining[t]
            if dv == 0:
                return None
            edges.add(_norm_edge(u, v))
            remaining[t] = (dv - 1, v)
        remaining[0] = (0, u)


def _shuffle_edges(edges: set[tuple[int, int]], rng: random.Random,
                   rounds: int = 10) -> set[tuple[int, int]]:
    """Randomize a simple graph in place by degree-preserving double swaps."""
    edge_list = list(edges)
    m = len(edge_list)
    if m < 2:
        return edges
    for _ in range(rounds * m):
        i1, i2 = rng.randrange(m), rng.randrange(m)
        if i1 == i2:
            continue
        a, b = edge_list[i1]
        c, d = edge_list[i2]
        if rng.random() < 0.5:
            p, q, r, s = a, d, c, b
        else:
            p, q, r, s = a, c, b, d
        if p == q or r == s:
            continue
        e1, e2 = _norm_edge(p, q), _norm_edge(r, s)
        if e1 == e2 or e1 in edges or e2 in edges:
            continue
        edges.remove(edge_list[i1])
        edges.remove(edge_list[i2])
        edges.add(e1)
        edges.add(e2)
        edge_list[i1] = e1
        edge_list[i2] = e2
    return edges


def _pair_stubs(stubs: list[int], rng: random.Random, valid) -> set[tuple[int, int]]:
    """Configuration-model pairing into simple edges.

    Conflicting pairs (self-loops, duplicates, valid() rejections) are
    reshuffled a few rounds, then resolved by degree-preserving swaps with
    already accepted edges. Raises WiringError when no resolution exists.
    """
    if len(stubs) % 2:
        raise WiringError("odd stub count")
    edge_list: list[tuple[int, int]] = []
    edge_set: set[tuple[int, int]] = set()

    def norm(u: int, v: int) -> tuple[int, int]:
        return (u, v) if u < v else (v, u)

    pending = list(stubs)
    rng.shuffle(pending)
    for _ in range(20):
        leftovers: list[int] = []
        for t in range(0, len(pending) - 1, 2):
            u, v = pending[t], pending[t + 1]
            e = norm(u, v)
            if u == v or e in edge_set or not valid(u, v):
                leftovers.append(u)
                leftovers.append(v)
            else:
                edge_list.append(e)
                edge_set.add(e)
        if not leftovers:
            return edge_set
        pending = leftovers
        rng.shuffle(pending)
    for t in range(0, len(pending) - 1, 2):
        u, v = pending[t], pending[t + 1]
        placed = False
        for _ in range(500):
            if not edge_list:
                break
            idx = rng.randrange(len(edge_list))
            a, b = edge_list[idx]
            for p, q, r, s in ((u, a, v, b), (u, b, v, a)):
                if p == q or r == s:
                    continue
                e1, e2 = norm(p, q), norm(r, s)
                if e1 == e2 or e1 in edge_set or e2 in edge_set:
                    continue
                if not (valid(p, q) and valid(r, s)):
                    continue
                edge_set.remove((a, b))
                edge_list[idx] = edge_list[-1]
                edge_list.pop()
                for e in (e1, e2):
                    edge_list.append(e)
                    edge_set.add(e)
                placed = True
                break
            if placed:
                break
        if not placed:
            raise WiringError("stub pairing could not resolve conflicts")
    return edge_set


def _pair_intra_stubs(stubs: list[int], rng: random.Random) -> set[tuple[int, int]]:
    """Pair stubs inside one community.

    Random pairing first; skewed sequences (a member that must link to almost
    every other member) can defeat local conflict repair even though they are
    graphical, so fall back to a direct degree-sequence construction that is
    then randomized by degree-preserving swaps.
    """
    try:
        return _pair_stubs(stubs, rng, lambda u, v: True)
    except WiringError:
        edges = _degree_sequence_edges(stubs)
        if edges is None:
            raise WiringError("intra degree sequence is not graphical") from None
        return _shuffle_edges(edges, rng)


def _components(nodes: list[int], edges: set[tuple[int, int]]) -> list[list[int]]:
    adj: dict[int, list[int]] = {i: [] for i in nodes}
    for u, v in sorted(edges):
        adj[u].append(v)
        adj[v].append(u)
    seen: set[int] = set()
    comps: list[list[int]] = []
    for start in sorted(nodes):
        if start in seen:
            continue
        seen.add(start)
        comp = [start]
        stack = [start]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    comp.append(v)
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def _spare_edges(comp: list[int], edges: set[tuple[int, int]]) -> list[tuple[int, int]]:
    """Edges of this component whose removal keeps it connected.

    These are exactly the edges outside one spanning tree (cycle edges).
    Returns an empty list when the component is a tree.
    """
    comp_set = set(comp)
    comp_edges = [e for e in edges if e[0] in comp_set]
    if len(comp_edges) < len(comp):
        return []
    adj: dict[int, list[int]] = {i: [] for i in comp}
    for u, v in comp_edges:
        adj[u].append(v)
        adj[v].append(u)
    root = comp[0]
    seen = {root}
    tree: set[tuple[int, int]] = set()
    stack = [root]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                tree.add(_norm_edge(u, v))
                stack.append(v)
    return sorted(e for e in comp_edges if e not in tree)


def _connect_communities(members: list[list[int]], comm: list[int],
                         intra_sets: list[set[tuple[int, int]]],
                         inter_set: set[tuple[int, int]],
                         rng: random.Random) -> None:
    """Degree-preserving rewiring until every community induces one component.

    Every merge removes an edge that lies on a cycle (so its component
    stays whole) and trades it against a fragment edge: the fragment's
    halves reattach to the cycle's endpoints, strictly reducing the
    component count. A fragment that is a bare node with no intra edge is
    attached by trading one of its inter edges against a cycle edge, which
    keeps both the degree sequence and the intra/inter stub split intact.
    """
    inter_adj: dict[int, list[int]] = {}
    for u, v in sorted(inter_set):
        inter_adj.setdefault(u, []).append(v)
        inter_adj.setdefault(v, []).append(u)

    for k, mem in enumerate(members):
        if len(mem) <= 1:
            continue
        edges = intra_sets[k]
        budget = 2 * len(mem) + 20
        while True:
            comps = _components(mem, edges)
            if len(comps) == 1:
                break
            budget -= 1
            if budget <= 0:
                raise WiringError(f"community {k} would not connect")
            comps.sort(key=len)
            spare_by_comp = [_spare_edges(comp, edges) for comp in comps]
            rich = [idx for idx, sp in enumerate(spare_by_comp) if sp]
            if not rich:
                raise WiringError(
                    f"community {k} has too few intra edges to connect")
            main_idx = rich[-1]
            spare = spare_by_comp[main_idx]
            frag = comps[0] if main_idx != 0 else comps[1]
            frag_nodes = set(frag)
            frag_edges = sorted(e for e in edges if e[0] in frag_nodes)
            if frag_edges:
                a, b = frag_edges[rng.randrange(len(frag_edges))]
                u, v = spare[rng.randrange(len(spare))]
                edges.discard((a, b))
                edges.discard((u, v))
                edges.add(_norm_edge(a, u))
                edges.add(_norm_edge(b, v))
                continue
            # bare node: swap one of its inter edges with a cycle edge
            w = frag[0]
            partners = inter_adj.get(w, [])
            if not partners:
                raise WiringError(f"node {w} has no edges to rewire")
            placed = False
            for _ in range(200):
                x = partners[rng.randrange(len(partners))]
                u, v = spare[rng.randrange(len(spare))]
                if u == x or v == x:
                    continue
                new_inter = _norm_edge(u, x)
                if new_inter in inter_set:
                    continue
                # (w, v) cannot exist: w has no intra edges
                edges.discard((u, v))
                edges.add(_norm_edge(w, v))
                inter_set.discard(_norm_edge(w, x))
                inter_set.add(new_inter)
                partners.remove(x)
                inter_adj.setdefault(u, []).append(x)
                wx = inter_adj.get(x, [])
                wx.remove(w)
                wx.append(u)
                placed = True
                break
            if not placed:
                raise WiringError(f"could not attach node {w} to community {k}")


def _generate_once(params: LfrParams, rng: random.Random) -> PlantedNetwork:
    sizes = _draw_sizes(params, rng)
    degrees = _draw_degrees(params, rng, max(sizes))
    intra, intra_target = _intra_degrees(params, degrees, rng)
    comm = _assign_nodes(sizes, intra, rng)
    if comm is None:
        raise WiringError("node-to-community assignment got stuck")
    members: list[list[int]] = [[] for _ in sizes]
    for i, k in enumerate(comm):
        members[k].append(i)
    min_intra = 1 if params.mu <= 0.5 and params.size_min >= 2 else 0
    if min_intra:
        _balance_intra_capacity(members, comm, intra)
    _fix_intra_parity(members, degrees, intra, rng)
    _shift_excess_intra(members, intra)
    _rebalance_intra(members, degrees, intra, intra_target, min_intra, rng)
    if params.mu == 0.0:
        # zero mixing admits no crossing stubs: the parity/graphicality
        # repairs above must shrink the degree itself, not spill outward
        degrees = list(intra)

    intra_sets: list[set[tuple[int, int]]] = []
    for mem in members:
        stubs = [i for i in mem for _ in range(intra[i])]
        intra_sets.append(_pair_intra_stubs(stubs, rng))
    inter_stubs = [i for i in range(params.n)
                   for _ in range(degrees[i] - intra[i])]
    if inter_stubs:
        inter_set = _pair_stubs(inter_stubs, rng,
                                lambda u, v: comm[u] != comm[v])
    else:
        inter_set = set()

    if params.mu <= 0.5:
        _connect_communities(members, comm, intra_sets, inter_set, rng)

    edges: set[tuple[int, int]] = set(inter_set)
    for es in intra_sets:
        edges |= es
    graph = Graph.from_edges(params.n, sorted(edges))
    truth = [frozenset(mem) for mem in members]
    return PlantedNetwork(graph, truth, params)


def generate(params: LfrParams) -> PlantedNetwork:
    """Generate one benchmark network; identical params give identical output.

    Wiring dead-ends are retried with fresh draws from the same seeded
    stream, so results stay reproducible.
    """
    rng = random.Random(params.seed)
    last: Exception | None = None
    for _ in range(_MAX_GENERATION_ATTEMPTS):
        try:
            return _generate_once(params, rng)
        except WiringError as exc:
            last = exc
    raise WiringError(f"generation failed after {_MAX_GENERATION_ATTEMPTS} attempts: {last}")


def realized_mixing(net: PlantedNetwork) -> float:
    """Fraction of edge endpoints that cross ground-truth communities.

    Endpoint-weighted, which equals the fraction of crossing edges.
    """
    g = net.graph
    if g.m == 0:
        return 0.0
    member = {}
    for k, commset in enumerate(net.truth):
        for i in commset:
            member[i] = k
    cross = 0
    for i in range(g.n):
        mi = member[i]
        for j in g.adj[i]:
            if j > i and member[j] != mi:
                cross += 1
    return cross / g.m


def write_truth(truth: list[frozenset[int]], file) -> None:
    """One 'node community' line per node, in node order."""
    pairs = []
    for k, commset in enumerate(truth):
        pairs.extend((i, k) for i in commset)
    for i, k in sorted(pairs):
        file.write(f"{i} {k}\n")
