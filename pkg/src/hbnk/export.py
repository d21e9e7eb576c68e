"""Deterministic renderers for a materialized graph.

Labels spell out the signed elements in magnitude order, e.g.
``{-1,2,4}``; no whitespace, so labels stay single tokens in the
edge-list format.  All three formats emit vertices in canonical order
and edges as (i, j) with i < j, so repeated runs are byte-identical.
"""

from __future__ import annotations

import json

from .core import KneserBGraph, SignedVertex


def vertex_label(v: SignedVertex) -> str:
    return "{" + ",".join(str(e) for e in v.signed_elements()) + "}"


def render_edgelist(graph: KneserBGraph) -> str:
    labels = [vertex_label(v) for v in graph.vertices]
    lines = [f"{labels[u]} {labels[v]}" for u, v in graph.edges()]
    return "\n".join(lines) + "\n"


def render_dot(graph: KneserBGraph) -> str:
    labels = [vertex_label(v) for v in graph.vertices]
    out = ["graph hbnk {"]
    for i, lab in enumerate(labels):
        out.append(f'  "{lab}" [part={graph.part_of(i)}];')
    for u, v in graph.edges():
        out.append(f'  "{labels[u]}" -- "{labels[v]}";')
    out.append("}")
    return "\n".join(out) + "\n"


def graph_to_dict(graph: KneserBGraph) -> dict:
    """Full vertex table plus adjacency as an index edge list."""
    verts = [
        {
            "label": vertex_label(v),
            "elements": list(v.signed_elements()),
            "part": graph.part_of(i),
        }
        for i, v in enumerate(graph.vertices)
    ]
    return {
        "n": graph.params.n,
        "k": graph.params.k,
        "vertex_count": graph.order,
        "edge_count": graph.size,
        "vertices": verts,
        "edges": [[u, v] for u, v in graph.edges()],
    }


def render_json(graph: KneserBGraph) -> str:
    return json.dumps(graph_to_dict(graph), indent=2, sort_keys=True) + "\n"


RENDERERS = {
    "edgelist": render_edgelist,
    "dot": render_dot,
    "json": render_json,
}
