"""Graph-algorithmic oracles over a materialized graph.

Everything here recomputes invariants from the adjacency structure
alone, so the results can be compared against the closed forms without
sharing any reasoning with them.  The BFS sweep is vectorized over the
CSR arrays; the remaining algorithms are classical (Hopcroft-Karp,
Tarjan lowlinks, Dinic) and run on instances small enough that clarity
wins over tuning.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .core import KneserBGraph


def bfs_distances(graph: KneserBGraph, source: int) -> np.ndarray:
    """Distances from ``source``; -1 marks unreachable vertices."""
    indptr, indices = graph.indptr, graph.indices
    dist = np.full(graph.order, -1, dtype=np.int32)
    dist[source] = 0
    frontier = np.array([source], dtype=np.int64)
    level = 0
    while frontier.size:
        starts = indptr[frontier]
        lens = indptr[frontier + 1] - starts
        total = int(lens.sum())
        if total == 0:
            break
        cum = np.zeros(frontier.size, dtype=np.int64)
        np.cumsum(lens[:-1], out=cum[1:])
        gather = np.arange(total, dtype=np.int64) + np.repeat(starts - cum, lens)
        nbrs = indices[gather]
        fresh = nbrs[dist[nbrs] == -1]
        if fresh.size == 0:
            break
        frontier = np.unique(fresh).astype(np.int64)
        level += 1
        dist[frontier] = level
    return dist


@dataclass
class DistanceSummary:
    """Output of one all-pairs BFS sweep.

    Histograms count unordered pairs.  ``distance4_part2_classes`` keys
    distance-4 pairs inside Part 2 by their sorted magnitude-set sizes.
    """

    order: int
    connected: bool
    histogram: dict[int, int]
    within_part1: dict[int, int]
    within_part2: dict[int, int]
    cross: dict[int, int]
    unreachable_pairs: int
    eccentricity: np.ndarray
    status: np.ndarray
    distance4_part2_classes: dict[tuple[int, int], int]
    part1_mask: np.ndarray = field(repr=False)

    @property
    def diameter(self) -> int | None:
        return int(self.eccentricity.max()) if self.connected else None

    @property
    def radius(self) -> int | None:
        return int(self.eccentricity.min()) if self.connected else None

    def center_vertices(self) -> tuple[int, ...]:
        if not self.connected:
            raise ValueError("center undefined on a disconnected graph")
        r = self.eccentricity.min()
        return tuple(np.flatnonzero(self.eccentricity == r).tolist())

    def periphery_vertices(self) -> tuple[int, ...]:
        if not self.connected:
            raise ValueError("periphery undefined on a disconnected graph")
        d = self.eccentricity.max()
        return tuple(np.flatnonzero(self.eccentricity == d).tolist())

    def median_vertices(self) -> tuple[int, ...]:
        if not self.connected:
            raise ValueError("median undefined on a disconnected graph")
        s = self.status.min()
        return tuple(np.flatnonzero(self.status == s).tolist())


def distance_summary(graph: KneserBGraph) -> DistanceSummary:
    """Run BFS from every vertex and fold the results into one summary."""
    order = graph.order
    part1 = graph.part1_mask()
    sizes = np.array([v.size for v in graph.vertices], dtype=np.int64)
    ecc = np.zeros(order, dtype=np.int64)
    status = np.zeros(order, dtype=np.int64)
    hist: dict[int, int] = {}
    within1: dict[int, int] = {}
    within2: dict[int, int] = {}
    cross: dict[int, int] = {}
    class4: dict[tuple[int, int], int] = {}
    unreachable = 0

    def absorb(bucket: dict[int, int], values: np.ndarray) -> None:
        if values.size == 0:
            return
        got = np.bincount(values)
        for d in np.flatnonzero(got):
            bucket[int(d)] = bucket.get(int(d), 0) + int(got[d])

    for u in range(order):
        dist = bfs_distances(graph, u)
        reach = dist >= 0
        ecc[u] = int(dist[reach].max())
        status[u] = int(dist[reach].sum())
        tail = dist[u + 1 :]
        tail_p1 = part1[u + 1 :]
        seen = tail >= 0
        unreachable += int((~seen).sum())
        vals = tail[seen]
        absorb(hist, vals)
        if part1[u]:
            absorb(within1, tail[seen & tail_p1])
            absorb(cross, tail[seen & ~tail_p1])
        else:
            absorb(cross, tail[seen & tail_p1])
            both2 = seen & ~tail_p1
            absorb(within2, tail[both2])
            at4 = both2 & (tail == 4)
            if at4.any():
                sz = sizes[u + 1 :][at4]
                lo = np.minimum(sz, sizes[u])
                hi = np.maximum(sz, sizes[u])
                keys, counts = np.unique(lo * 64 + hi, return_counts=True)
                for key, cnt in zip(keys.tolist(), counts.tolist()):
                    pair = (key // 64, key % 64)
                    class4[pair] = class4.get(pair, 0) + cnt

    return DistanceSummary(
        order=order,
        connected=unreachable == 0,
        histogram=hist,
        within_part1=within1,
        within_part2=within2,
        cross=cross,
        unreachable_pairs=unreachable,
        eccentricity=ecc,
        status=status,
        distance4_part2_classes=dict(sorted(class4.items())),
        part1_mask=part1,
    )


def distance_histogram(graph: KneserBGraph) -> dict[int, int]:
    """Unordered pair counts per distance, straight from a BFS sweep.

    Single-purpose view over ``distance_summary``; reuse the summary
    when more than one of these per-graph quantities is needed.
    """
    return distance_summary(graph).histogram


def eccentricity_profile(graph: KneserBGraph) -> DistanceSummary:
    """Per-vertex eccentricity and status with the derived diameter,
    radius, center, periphery and median sets."""
    return distance_summary(graph)


def distance4_class_histogram(
    graph: KneserBGraph,
) -> dict[tuple[int, int], int]:
    """Distance-4 pairs inside Part 2, keyed by sorted magnitude sizes."""
    return distance_summary(graph).distance4_part2_classes


def degree_sequence_oracle(graph: KneserBGraph) -> list[tuple[int, int]]:
    """Merged (degree, multiplicity) pairs, degree non-increasing."""
    degs, counts = np.unique(graph.degrees(), return_counts=True)
    return [(int(d), int(c)) for d, c in zip(degs[::-1], counts[::-1])]


def count_components(graph: KneserBGraph) -> int:
    seen = np.zeros(graph.order, dtype=bool)
    components = 0
    for v in range(graph.order):
        if seen[v]:
            continue
        components += 1
        seen[bfs_distances(graph, v) >= 0] = True
    return components


def max_matching(graph: KneserBGraph) -> int:
    """Maximum matching size via Hopcroft-Karp, Part 1 on the left."""
    left = list(graph.part1)
    match = np.full(graph.order, -1, dtype=np.int64)
    inf = graph.order + 1

    def bfs_layers() -> bool:
        nonlocal layer
        layer = {}
        queue = deque()
        for u in left:
            if match[u] == -1:
                layer[u] = 0
                queue.append(u)
        found = False
        while queue:
            u = queue.popleft()
            for v in graph.neighbors(u):
                w = match[int(v)]
                if w == -1:
                    found = True
                elif w not in layer:
                    layer[int(w)] = layer[u] + 1
                    queue.append(int(w))
        return found

    def augment(u: int) -> bool:
        for v in graph.neighbors(u):
            v = int(v)
            w = int(match[v])
            if w == -1 or (layer.get(w) == layer[u] + 1 and augment(w)):
                match[u] = v
                match[v] = u
                return True
        layer[u] = inf
        return False

    layer: dict[int, int] = {}
    size = 0
    while bfs_layers():
        for u in left:
            if match[u] == -1 and augment(u):
                size += 1
    return size


def independence_number_oracle(graph: KneserBGraph) -> int:
    """|V| minus the maximum matching (Koenig, bipartite)."""
    return graph.order - max_matching(graph)


def covering_number_oracle(graph: KneserBGraph) -> int:
    """Minimum vertex cover = maximum matching (Koenig, bipartite)."""
    return max_matching(graph)


@dataclass(frozen=True)
class DominationResult:
    """Value with an exactness flag; witness is a dominating set found."""

    value: int
    exact: bool
    witness: tuple[int, ...]


def min_dominating_set(
    graph: KneserBGraph, exhaustive_limit: int = 24
) -> DominationResult:
    """Exhaustive minimum domination when the order permits.

    Above ``exhaustive_limit`` vertices the search is skipped and the
    Part 1 bound is returned with exact=False after checking that
    Part 1 really dominates.
    """
    order = graph.order
    closed = []
    for v in range(order):
        mask = 1 << v
        for u in graph.neighbors(v):
            mask |= 1 << int(u)
        closed.append(mask)
    full = (1 << order) - 1

    part1_union = 0
    for v in graph.part1:
        part1_union |= closed[v]
    if part1_union != full:
        raise AssertionError("Part 1 failed to dominate; adjacency is broken")

    if order > exhaustive_limit:
        return DominationResult(len(graph.part1), False, tuple(graph.part1))

    for s in range(1, len(graph.part1) + 1):
        for combo in itertools.combinations(range(order), s):
            got = 0
            for v in combo:
                got |= closed[v]
            if got == full:
                return DominationResult(s, True, combo)
    return DominationResult(len(graph.part1), True, tuple(graph.part1))


def girth_oracle(graph: KneserBGraph) -> int | None:
    """Length of a shortest cycle, or None for a forest.

    Per-source BFS closes in on the shortest cycle through each vertex;
    once the best over sources reaches 4, only a triangle could beat
    it, so the sweep stops and a neighborhood-intersection pass settles
    3 versus 4.
    """
    order = graph.order
    if graph.size - order + count_components(graph) == 0:
        return None
    best: int | None = None
    dist = np.empty(order, dtype=np.int64)
    parent = np.empty(order, dtype=np.int64)
    for s in range(order):
        dist.fill(-1)
        parent.fill(-1)
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for v in graph.neighbors(u):
                v = int(v)
                if dist[v] == -1:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif v != parent[u]:
                    cycle = int(dist[u] + dist[v] + 1)
                    if best is None or cycle < best:
                        best = cycle
        if best == 3:
            return 3
        if best == 4:
            break
    if best == 4:
        masks = []
        for v in range(order):
            m = 0
            for u in graph.neighbors(v):
                m |= 1 << int(u)
            masks.append(m)
        for u, v in graph.edges():
            if masks[u] & masks[v]:
                return 3
    return best


def _articulation_or_bridge(graph: KneserBGraph) -> tuple[bool, bool]:
    """(has articulation point, has bridge) via iterative lowlinks."""
    order = graph.order
    disc = np.full(order, -1, dtype=np.int64)
    low = np.zeros(order, dtype=np.int64)
    timer = 0
    has_art = False
    has_bridge = False
    for root in range(order):
        if disc[root] != -1:
            continue
        stack = [(root, -1, iter(graph.neighbors(root).tolist()))]
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                w = int(w)
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(graph.neighbors(w).tolist())))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > disc[p]:
                        has_bridge = True
                    if p != root and low[v] >= disc[p]:
                        has_art = True
        if root_children > 1:
            has_art = True
    return has_art, has_bridge


class _Dinic:
    """Plain Dinic max-flow on an explicit arc list."""

    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add(self, u: int, v: int, cap: int, rcap: int = 0) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(rcap)

    def max_flow(self, s: int, t: int, stop_at: int | None = None) -> int:
        flow = 0
        while True:
            level = [-1] * self.n
            level[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for e in self.head[u]:
                    if self.cap[e] > 0 and level[self.to[e]] == -1:
                        level[self.to[e]] = level[u] + 1
                        queue.append(self.to[e])
            if level[t] == -1:
                return flow
            it = [0] * self.n

            def dfs(u: int, pushed: int) -> int:
                if u == t:
                    return pushed
                while it[u] < len(self.head[u]):
                    e = self.head[u][it[u]]
                    v = self.to[e]
                    if self.cap[e] > 0 and level[v] == level[u] + 1:
                        got = dfs(v, min(pushed, self.cap[e]))
                        if got:
                            self.cap[e] -= got
                            self.cap[e ^ 1] += got
                            return got
                    it[u] += 1
                return 0

            while True:
                pushed = dfs(s, 10**9)
                if not pushed:
                    break
                flow += pushed
                if stop_at is not None and flow >= stop_at:
                    return flow


def _vertex_cut(graph: KneserBGraph, s: int, t: int, stop_at: int) -> int:
    n = graph.order
    net = _Dinic(2 * n)
    for v in range(n):
        cap = 10**9 if v in (s, t) else 1
        net.add(2 * v, 2 * v + 1, cap)
    for u, v in graph.edges():
        net.add(2 * u + 1, 2 * v, 10**9)
        net.add(2 * v + 1, 2 * u, 10**9)
    return net.max_flow(2 * s + 1, 2 * t, stop_at=stop_at)


def vertex_connectivity_oracle(graph: KneserBGraph) -> int:
    """Global vertex connectivity by articulation shortcut, then flow."""
    order = graph.order
    if order < 2 or count_components(graph) > 1:
        return 0
    if order == 2:
        return 1
    has_art, _ = _articulation_or_bridge(graph)
    if has_art:
        return 1
    best = order - 1
    adj = {frozenset(e) for e in graph.edges()}
    for s in range(order):
        for t in range(s + 1, order):
            if frozenset((s, t)) in adj:
                continue
            best = min(best, _vertex_cut(graph, s, t, stop_at=best))
            if best <= 2:
                # An articulation pass already ruled out 1.
                return best
    return best


def edge_connectivity_oracle(graph: KneserBGraph) -> int:
    """Global edge connectivity: bridge shortcut, then s-t flows."""
    order = graph.order
    if order < 2 or count_components(graph) > 1:
        return 0
    _, has_bridge = _articulation_or_bridge(graph)
    if has_bridge:
        return 1
    best = int(graph.degrees().min())
    s = 0
    for t in range(1, order):
        net = _Dinic(order)
        for u, v in graph.edges():
            net.add(u, v, 1, 1)
        best = min(best, net.max_flow(s, t, stop_at=best))
        if best <= 2:
            return best
    return best


def circuit_rank_oracle(graph: KneserBGraph) -> int:
    return graph.size - graph.order + count_components(graph)


def omega_oracle(graph: KneserBGraph) -> int:
    """Sum of (deg(v) - 2) straight off the degree array."""
    total = int(graph.degrees().sum()) - 2 * graph.order
    assert total == 2 * (graph.size - graph.order)
    return total


def face_count_oracle(graph: KneserBGraph) -> int:
    return omega_oracle(graph) // 2 + count_components(graph)
