"""Construction of the bipartite Kneser B type-k graph H_B(n, k).

Vertices are the signed subsets of {+-1, ..., +-(n-1), n} whose largest
magnitude carries a plus sign.  A signed subset is stored as a pair of
bitmasks over magnitudes 1..n: bit i-1 of ``mag`` says magnitude i is
present, bit i-1 of ``neg`` says it is present with a minus sign.

Part 1 holds the all-positive k-subsets; Part 2 holds every other valid
signed subset.  A Part 1 vertex X and a Part 2 vertex Y are adjacent
exactly when one of X, mag(Y) contains the other.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

MAX_N = 30
DEFAULT_VERTEX_CEILING = 10**6


class CapacityError(ValueError):
    """Requested graph exceeds the configured vertex ceiling."""


@dataclass(frozen=True)
class GroundParams:
    """Validated (n, k) pair for H_B(n, k)."""

    n: int
    k: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or not isinstance(self.k, int):
            raise ValueError("n and k must be integers")
        if self.n < 2:
            raise ValueError(f"need n >= 2, got n={self.n}")
        if self.n > MAX_N:
            raise ValueError(f"need n <= {MAX_N}, got n={self.n}")
        if not 1 <= self.k < self.n:
            raise ValueError(f"need 1 <= k < n, got k={self.k}, n={self.n}")


@dataclass(frozen=True, order=True)
class SignedVertex:
    """One signed subset, as (magnitude mask, negative-sign mask)."""

    mag: int
    neg: int

    def __post_init__(self) -> None:
        if self.mag == 0:
            raise ValueError("signed subset must be non-empty")
        if self.neg & ~self.mag:
            raise ValueError("neg mask must be a subset of mag mask")
        top = 1 << (self.mag.bit_length() - 1)
        if self.neg & top:
            raise ValueError("largest magnitude must be positive")

    @property
    def size(self) -> int:
        return self.mag.bit_count()

    def magnitudes(self) -> tuple[int, ...]:
        """Magnitudes present, ascending."""
        return tuple(i + 1 for i in range(self.mag.bit_length()) if self.mag >> i & 1)

    def signed_elements(self) -> tuple[int, ...]:
        """Elements with signs applied, ordered by magnitude."""
        out = []
        for i in range(self.mag.bit_length()):
            if self.mag >> i & 1:
                out.append(-(i + 1) if self.neg >> i & 1 else i + 1)
        return tuple(out)

    def is_all_positive(self) -> bool:
        return self.neg == 0


def magnitude_set(v: SignedVertex) -> int:
    """Underlying magnitude mask (the dagger map)."""
    return v.mag


def is_adjacent(x: SignedVertex, y: SignedVertex, params: GroundParams) -> bool:
    """Adjacency test: one part-1 set and one part-2 set, related by inclusion.

    Inclusion is not strict, so the k-subsets of Part 2 with the same
    magnitudes as a Part 1 vertex are adjacent to it.
    """
    k = params.k
    x_in_p1 = x.neg == 0 and x.size == k
    y_in_p1 = y.neg == 0 and y.size == k
    if x_in_p1 == y_in_p1:
        return False
    a, b = (x, y) if x_in_p1 else (y, x)
    bm = b.mag
    return a.mag & ~bm == 0 or bm & ~a.mag == 0


def vertex_table(params: GroundParams) -> list[SignedVertex]:
    """All valid signed subsets in the canonical order.

    Order: by subset size, then magnitude mask, then sign mask, all
    ascending.  Every builder and exporter relies on this order.
    """
    n = params.n
    out: list[SignedVertex] = []
    for size in range(1, n + 1):
        for combo in itertools.combinations(range(n), size):
            mag = 0
            for i in combo:
                mag |= 1 << i
            top = 1 << combo[-1]
            lower = mag ^ top
            # Sign choices run over the non-maximal magnitudes only.
            for neg in _submasks(lower):
                out.append(SignedVertex(mag, neg))
    out.sort(key=lambda v: (v.size, v.mag, v.neg))
    return out


def enumerate_vertices(
    params: GroundParams,
) -> tuple[list[SignedVertex], list[SignedVertex]]:
    """The two parts of H_B(n, k), each in canonical order.

    Returns (part 1, part 2): the all-positive k-subsets first, then
    everything else.  Their interleaved merge is ``vertex_table``.
    """
    k = params.k
    part1: list[SignedVertex] = []
    part2: list[SignedVertex] = []
    for v in vertex_table(params):
        (part1 if v.neg == 0 and v.size == k else part2).append(v)
    return part1, part2


def _submasks(mask: int):
    """Every submask of ``mask``, ascending."""
    subs = [0]
    i = 0
    while mask >> i:
        if mask >> i & 1:
            bit = 1 << i
            subs.extend(s | bit for s in list(subs))
        i += 1
    subs.sort()
    return subs


def expected_order(n: int) -> int:
    """Number of valid signed subsets of {1..n}: (3^n - 1) / 2."""
    return (3**n - 1) // 2


@dataclass(frozen=True)
class KneserBGraph:
    """Materialized H_B(n, k) with a CSR adjacency structure.

    ``vertices`` lists every vertex in canonical order; ``part1`` /
    ``part2`` hold the vertex indices of each part.  ``indptr`` and
    ``indices`` form the usual compressed sparse row adjacency over
    vertex indices; both arrays are read-only.
    """

    params: GroundParams
    vertices: tuple[SignedVertex, ...]
    part1: tuple[int, ...]
    part2: tuple[int, ...]
    indptr: np.ndarray
    indices: np.ndarray

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return int(self.indices.shape[0]) // 2

    def degree(self, v: int) -> int:
        if not 0 <= v < self.order:
            raise IndexError(f"vertex index {v} out of range 0..{self.order - 1}")
        return int(self.indptr[v + 1] - self.indptr[v])

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def part_of(self, v: int) -> int:
        """1 or 2."""
        w = self.vertices[v]
        return 1 if w.neg == 0 and w.size == self.params.k else 2

    def part1_mask(self) -> np.ndarray:
        mask = np.zeros(self.order, dtype=bool)
        mask[list(self.part1)] = True
        return mask

    def edges(self):
        """Yield each edge once as (u, v) with u < v."""
        for u in range(self.order):
            for v in self.neighbors(u):
                if u < int(v):
                    yield u, int(v)


def build_graph(
    params: GroundParams, vertex_ceiling: int = DEFAULT_VERTEX_CEILING
) -> KneserBGraph:
    """Materialize H_B(n, k).

    Raises CapacityError before allocating anything when the order
    (3^n - 1) / 2 exceeds ``vertex_ceiling``.
    """
    n, k = params.n, params.k
    order = expected_order(n)
    if order > vertex_ceiling:
        raise CapacityError(
            f"H_B({n},{k}) has {order} vertices, over the ceiling {vertex_ceiling}"
        )

    verts = vertex_table(params)
    index = {v: i for i, v in enumerate(verts)}
    part1 = tuple(
        index[v] for v in verts if v.neg == 0 and v.size == k
    )
    part2 = tuple(i for i in range(order) if verts[i].neg != 0 or verts[i].size != k)

    # Adjacency depends on magnitudes only, so compute the Part 1
    # neighborhood once per distinct magnitude mask of Part 2.
    nbrs_by_mag: dict[int, list[int]] = {}

    def part1_neighbors(mag: int) -> list[int]:
        got = nbrs_by_mag.get(mag)
        if got is not None:
            return got
        bits = [i for i in range(n) if mag >> i & 1]
        r = len(bits)
        if r < k:
            rest = [i for i in range(n) if not mag >> i & 1]
            masks = []
            for extra in itertools.combinations(rest, k - r):
                m = mag
                for i in extra:
                    m |= 1 << i
                masks.append(m)
        elif r == k:
            masks = [mag]
        else:
            masks = []
            for sub in itertools.combinations(bits, k):
                m = 0
                for i in sub:
                    m |= 1 << i
                masks.append(m)
        got = sorted(index[SignedVertex(m, 0)] for m in masks)
        nbrs_by_mag[mag] = got
        return got

    deg = np.zeros(order, dtype=np.int64)
    for v in part2:
        nb = part1_neighbors(verts[v].mag)
        deg[v] = len(nb)
        for u in nb:
            deg[u] += 1

    indptr = np.zeros(order + 1, dtype=np.int64)
    np.cumsum(deg, out=indptr[1:])
    indices = np.zeros(int(indptr[-1]), dtype=np.int32)
    cursor = indptr[:-1].copy()
    for v in part2:
        for u in part1_neighbors(verts[v].mag):
            indices[cursor[v]] = u
            cursor[v] += 1
            indices[cursor[u]] = v
            cursor[u] += 1

    # Neighbor lists sorted ascending; Part 2 rows already are, Part 1
    # rows were filled in Part 2 iteration order, which is ascending too,
    # so this is a safety net rather than a hot path.
    for u in part1:
        row = indices[indptr[u] : indptr[u + 1]]
        row.sort()

    indptr.setflags(write=False)
    indices.setflags(write=False)
    return KneserBGraph(
        params=params,
        vertices=tuple(verts),
        part1=part1,
        part2=part2,
        indptr=indptr,
        indices=indices,
    )
