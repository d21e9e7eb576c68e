"""Closed-form invariants of H_B(n, k).

Every function here evaluates an exact expression in n and k; nothing
touches a materialized graph.  The distance-theory functions (distance
distribution, pair classes, eccentricities, center/periphery/median)
hold on the domain n > 2, 1 < k < n and raise DomainError outside it.
Functions that reproduce published expressions known to disagree with
the definitional quantity carry ``published`` in their name; they are
kept verbatim so reports can surface the discrepancy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb


class DomainError(ValueError):
    """Parameters outside the region where the expression is proven."""


class _NotCovered:
    """Marker for invariants with no closed form at these parameters."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "NOT_COVERED"


NOT_COVERED = _NotCovered()


def _check_base(n: int, k: int) -> None:
    if n < 2 or not 1 <= k < n:
        raise DomainError(f"need n >= 2 and 1 <= k < n, got n={n}, k={k}")


def _check_distance_domain(n: int, k: int) -> None:
    _check_base(n, k)
    if n <= 2 or k <= 1:
        raise DomainError(
            f"distance theory needs n > 2 and 1 < k < n, got n={n}, k={k}"
        )


def order_formula(n: int) -> int:
    """|V(H_B(n, k))| = (3^n - 1) / 2, independent of k."""
    if n < 2:
        raise DomainError(f"need n >= 2, got n={n}")
    return (3**n - 1) // 2


def part1_degree(n: int, k: int) -> int:
    """Degree of every all-positive k-subset vertex."""
    _check_base(n, k)
    return (3**k - 3) // 2 + 2 ** (k - 1) * (3 ** (n - k) - 1)


def part2_degree(n: int, k: int, r: int) -> int:
    """Degree of a Part 2 vertex whose magnitude set has size r."""
    _check_base(n, k)
    if not 1 <= r <= n:
        raise DomainError(f"need 1 <= r <= n, got r={r}")
    if r < k:
        return comb(n - r, k - r)
    if r == k:
        return 1
    return comb(r, k)


def size_formula(n: int, k: int) -> int:
    """|E| = C(n, k) * ((3^k - 3)/2 + 2^(k-1) (3^(n-k) - 1))."""
    _check_base(n, k)
    return comb(n, k) * part1_degree(n, k)


@dataclass(frozen=True)
class DegreeClass:
    """One orbit of vertices sharing a degree: Part 1, or Part 2 by r."""

    part: int
    r: int
    degree: int
    multiplicity: int


def degree_classes(n: int, k: int) -> list[DegreeClass]:
    """Degree classes with multiplicities; zero-multiplicity classes dropped.

    Part 2 splits by magnitude-set size r, with 2^(r-1) C(n, r) vertices
    per r except r = k, which loses its all-positive members to Part 1.
    """
    _check_base(n, k)
    out = [DegreeClass(1, k, part1_degree(n, k), comb(n, k))]
    for r in range(1, n + 1):
        mult = 2 ** (r - 1) * comb(n, r)
        if r == k:
            mult -= comb(n, k)
        if mult == 0:
            continue
        out.append(DegreeClass(2, r, part2_degree(n, k, r), mult))
    return out


def degree_sequence_formula(n: int, k: int) -> list[DegreeClass]:
    """Degree classes ordered by degree, non-increasing.

    Classes sharing a degree stay separate here (ties broken by part
    then r); ``degree_sequence`` gives the merged rendering.
    """
    return sorted(
        degree_classes(n, k), key=lambda c: (-c.degree, c.part, c.r)
    )


def degree_sequence(n: int, k: int) -> list[tuple[int, int]]:
    """Merged (degree, multiplicity) pairs, degree non-increasing."""
    hist: dict[int, int] = {}
    for cls in degree_classes(n, k):
        hist[cls.degree] = hist.get(cls.degree, 0) + cls.multiplicity
    return sorted(hist.items(), reverse=True)


def independence_number(n: int, k: int) -> int:
    """alpha = |V| - C(n, k); Part 2 is a maximum independent set."""
    _check_base(n, k)
    return order_formula(n) - comb(n, k)


def matching_number(n: int, k: int) -> int:
    """beta = C(n, k); Part 1 saturates in a maximum matching."""
    _check_base(n, k)
    return comb(n, k)


def covering_number(n: int, k: int) -> int:
    """Minimum vertex cover, C(n, k); equals the matching number (bipartite)."""
    return matching_number(n, k)


def domination_number(n: int, k: int) -> int:
    """gamma = C(n, k): Part 1 dominates, and is claimed minimum.

    Minimality is certified exhaustively only for small instances; see
    the oracle module.
    """
    _check_base(n, k)
    return comb(n, k)


def girth_formula(n: int, k: int):
    """4 for k > 1; no closed form is claimed for k = 1."""
    _check_base(n, k)
    return 4 if k > 1 else NOT_COVERED


def vertex_connectivity_formula(n: int, k: int):
    """1 for k > 1 (a degree-1 vertex exists); k = 1 not covered."""
    _check_base(n, k)
    return 1 if k > 1 else NOT_COVERED


def edge_connectivity_formula(n: int, k: int):
    """1 for k > 1; k = 1 not covered."""
    _check_base(n, k)
    return 1 if k > 1 else NOT_COVERED


def circuit_rank(n: int, k: int) -> int:
    """|E| - |V| + 1; the graph is connected for every valid (n, k)."""
    _check_base(n, k)
    return size_formula(n, k) - order_formula(n) + 1


def omega_definitional(classes: list[DegreeClass]) -> int:
    """Sum of multiplicity * (degree - 2) over a full set of degree
    classes; always equals 2(|E| - |V|)."""
    return sum(cls.multiplicity * (cls.degree - 2) for cls in classes)


def omega_published_closed_form(n: int, k: int) -> int:
    """Published closed form for the degree excess.

    Kept verbatim: C(n,k) * sum_i C(k,i) 2^(i-1) - sum_i C(n,i) 2^i,
    which simplifies to C(n,k)(3^k - 1)/2 - (3^n - 1).  It disagrees
    with omega_definitional (for H_B(4,2): -56 against 148); reports
    compare the two and flag the difference as a known discrepancy.
    """
    _check_base(n, k)
    lhs = comb(n, k) * sum(comb(k, i) * 2 ** (i - 1) for i in range(1, k + 1))
    rhs = sum(comb(n, i) * 2**i for i in range(1, n + 1))
    return lhs - rhs


def face_count(n: int, k: int) -> int:
    """Definitional omega / 2 + 1 = |E| - |V| + 1."""
    _check_base(n, k)
    return size_formula(n, k) - order_formula(n) + 1


def published_face_count(n: int, k: int) -> int | Fraction:
    """Published face count, omega_published / 2 + 1; may be fractional."""
    _check_base(n, k)
    value = Fraction(omega_published_closed_form(n, k), 2) + 1
    return int(value) if value.denominator == 1 else value


def p_ij(n: int, k: int, i: int, j: int) -> int:
    """Distance-4 pairs in Part 2 between magnitude sizes i and j.

    Defined for sizes i, j in 1..n-1 with k + 1 <= i + j <= n + k - 1;
    the class pair is unordered, so the argument order of i and j does
    not matter.  A pair sits at distance 4 exactly when no all-positive
    k-set is sandwiched by both magnitude sets; summing over the overlap
    size t counts those pairs, split into cases by whether either size
    hits k.
    """
    _check_distance_domain(n, k)
    if i > j:
        i, j = j, i
    if not (1 <= i <= j <= n - 1 and k + 1 <= i + j <= n + k - 1):
        raise DomainError(
            f"pair class ({i},{j}) undefined for n={n}, k={k}"
        )
    t_lo = max(0, i + j - n)
    t_hi = min(i + j - k, i, k)  # exclusive
    total = 0
    for t in range(t_lo, t_hi):
        place = comb(n - i, j - t) * comb(i, t)
        if i != k and j != k:
            total += comb(n, i) * 2 ** (i - 1) * 2 ** (j - 1) * place
        elif i == k and j != k:
            total += comb(n, k) * (2 ** (k - 1) - 1) * 2 ** (j - 1) * place
        elif i != k and j == k:
            total += comb(n, i) * 2 ** (i - 1) * (2 ** (k - 1) - 1) * place
        else:
            total += comb(n, k) * (2 ** (k - 1) - 1) ** 2 * place
    if i == j:
        # The sum counted ordered pairs.
        if total % 2:
            raise AssertionError("ordered pair count must be even")
        total //= 2
    return total


def p_ij_table(n: int, k: int) -> dict[tuple[int, int], int]:
    """All defined pair classes for (n, k); every value is positive."""
    _check_distance_domain(n, k)
    out: dict[tuple[int, int], int] = {}
    for i in range(1, n):
        for j in range(i, n):
            if k + 1 <= i + j <= n + k - 1:
                out[i, j] = p_ij(n, k, i, j)
    return out


def d1_formula(n: int, k: int) -> int:
    """Pairs at distance 1: exactly the edges, so this equals |E|."""
    _check_distance_domain(n, k)
    return size_formula(n, k)


def d2_v1_formula(n: int, k: int) -> int:
    """Distance-2 pairs inside Part 1: every pair, C(C(n,k), 2)."""
    _check_distance_domain(n, k)
    return comb(comb(n, k), 2)


def d3_formula(n: int, k: int) -> int:
    """Pairs at distance 3: the non-adjacent cross-part pairs."""
    _check_distance_domain(n, k)
    c = comb(n, k)
    return c * (order_formula(n) - c) - size_formula(n, k)


def d4_v2_formula(n: int, k: int) -> int:
    """Pairs at distance 4, all inside Part 2: sum of the pair classes."""
    _check_distance_domain(n, k)
    return sum(p_ij_table(n, k).values())


@dataclass(frozen=True)
class DistanceDistribution:
    """Pair counts by distance, overall and split by part membership."""

    counts: dict[int, int]
    within_part1: dict[int, int]
    within_part2: dict[int, int]
    cross: dict[int, int]

    def total_pairs(self) -> int:
        return sum(self.counts.values())


def distance_distribution_formula(n: int, k: int) -> DistanceDistribution:
    """Exact pair counts at each distance (diameter is 4 on this domain).

    The distance-2 count combines both parts: all of Part 1 pairwise,
    plus the Part 2 pairs not already accounted at distance 4.
    """
    _check_distance_domain(n, k)
    order = order_formula(n)
    c = comb(n, k)
    d1 = d1_formula(n, k)
    d3 = d3_formula(n, k)
    d2_p1 = d2_v1_formula(n, k)
    d4 = d4_v2_formula(n, k)
    d2_p2 = comb(order - c, 2) - d4
    counts = {1: d1, 2: d2_p1 + d2_p2, 3: d3, 4: d4}
    return DistanceDistribution(
        counts=counts,
        within_part1={2: d2_p1},
        within_part2={2: d2_p2, 4: d4},
        cross={1: d1, 3: d3},
    )


def eccentricity_class(n: int, k: int, part: int, r: int) -> int:
    """Eccentricity shared by a whole vertex class.

    Part 1 vertices: 3.  Part 2 vertices: 2 when the magnitude set is
    full (r = n), else 4.
    """
    _check_distance_domain(n, k)
    if part == 1:
        if r != k:
            raise DomainError("Part 1 vertices have magnitude size k")
        return 3
    if not 1 <= r <= n:
        raise DomainError(f"need 1 <= r <= n, got r={r}")
    return 2 if r == n else 4


def diameter_radius(n: int, k: int) -> tuple[int, int]:
    """(4, 2) on the distance-theory domain."""
    _check_distance_domain(n, k)
    return 4, 2


def center_class(n: int, k: int) -> str:
    """The center is the set of full-magnitude Part 2 vertices."""
    _check_distance_domain(n, k)
    return "full-magnitude"


def periphery_class(n: int, k: int) -> str:
    """The periphery is every Part 2 vertex with magnitude size < n."""
    _check_distance_domain(n, k)
    return "part2-partial"


def status_part1(n: int, k: int) -> int:
    """Distance sum from a Part 1 vertex to all others.

    Neighbors at 1, the other Part 1 vertices at 2, the remaining
    Part 2 vertices at 3.
    """
    _check_distance_domain(n, k)
    c = comb(n, k)
    d = part1_degree(n, k)
    return d + 2 * (c - 1) + 3 * (order_formula(n) - c - d)


def status_full_magnitude(n: int, k: int) -> int:
    """Distance sum from a full-magnitude vertex: C(n,k) + 2(|V|-1-C(n,k))."""
    _check_distance_domain(n, k)
    c = comb(n, k)
    return c + 2 * (order_formula(n) - 1 - c)


def median_classes(n: int, k: int) -> tuple[str, ...]:
    """Vertex classes of minimum status, derived from the distance split.

    Only Part 1 and the full-magnitude class can attain the minimum: a
    Part 2 vertex with r < n has degree below C(n, k), so its status
    already exceeds the full-magnitude status on the Part 1 side alone.
    The two candidate statuses differ by order - 2 * part1_degree, so
    the sign of that quantity decides the median.
    """
    _check_distance_domain(n, k)
    s1 = status_part1(n, k)
    s2 = status_full_magnitude(n, k)
    if s1 < s2:
        return ("part1",)
    if s1 > s2:
        return ("full-magnitude",)
    return ("part1", "full-magnitude")


def published_median_class(n: int, k: int) -> str:
    """Published claim: the median coincides with the center.

    Kept verbatim even though median_classes shows the claim fails when
    order <= 2 * part1_degree (for example n=3, k=2 and n=4, k=3);
    reports compare it with the oracle and flag the known mismatches.
    """
    _check_distance_domain(n, k)
    return "full-magnitude"
