"""Shared builders for the tests, cached so hypothesis stays fast."""

from __future__ import annotations

from functools import lru_cache

from hbnk.core import GroundParams, build_graph
from hbnk.oracle import distance_summary

import bruteforce

SMALL_POOL = ((2, 1), (3, 1), (3, 2), (4, 2), (4, 3))

# Verdict lines from the acceptance tests; the conftest terminal-summary
# hook replays them after capture ends so they always reach the user.
ACCEPTANCE_LINES: list[str] = []


@lru_cache(maxsize=None)
def graph(n: int, k: int):
    return build_graph(GroundParams(n, k))


@lru_cache(maxsize=None)
def brute(n: int, k: int):
    return bruteforce.build(n, k)


@lru_cache(maxsize=None)
def summary(n: int, k: int):
    return distance_summary(graph(n, k))


def as_frozensets(g) -> list[frozenset[int]]:
    """Package vertices converted to the reference representation."""
    return [frozenset(v.signed_elements()) for v in g.vertices]
