"""JSON graph files and machine-readable analysis reports.

A graph file is a JSON document

    {"vertices": [{"id": "a", "q": 0.0, "host_degree": 3}, ...],
     "edges":    [{"u": "a", "v": "b", "theta": 0.5}, ...]}

with unique string ids, optional host degrees (defaulting to the
internal degree), and optional antisymmetric edge phases stored for the
written (u, v) orientation.  Vertices map to dense indices in file
order; saving normalizes key order and float formatting, after which
load/save round-trips are byte-stable.
"""
from __future__ import annotations

import hashlib
import json
from typing import Any

import numpy as np

from .graphs import Graph, PhaseField, Potential, subset_stats

__all__ = [
    "graph_to_document", "document_to_graph", "save_graph", "load_graph",
    "canonical_json", "graph_digest", "id_map_digest", "write_report",
    "verify_report_certificates",
]


def canonical_json(obj: Any) -> str:
    """Stable serialization: sorted keys, two-space indent, LF endings."""
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=True) + "\n"


def graph_to_document(graph: Graph, potential: Potential | None = None,
                      phase: PhaseField | None = None,
                      ids: list[str] | None = None) -> dict:
    n = graph.vertex_count
    if ids is None:
        ids = [str(i) for i in range(n)]
    if len(ids) != n or len(set(ids)) != n:
        raise ValueError("ids must be unique, one per vertex")
    q = potential.values if potential is not None else np.zeros(n)
    vertices = []
    for x in range(n):
        entry: dict[str, Any] = {"id": ids[x], "q": float(q[x])}
        if graph.host_degree[x] != graph.internal_degree[x]:
            entry["host_degree"] = int(graph.host_degree[x])
        vertices.append(entry)
    edges = []
    for i, (u, v) in enumerate(graph.edges):
        entry = {"u": ids[u], "v": ids[v]}
        if phase is not None:
            entry["theta"] = float(phase.values[i])
        edges.append(entry)
    return {"vertices": vertices, "edges": edges}


def document_to_graph(doc: dict) -> tuple[Graph, Potential, PhaseField | None, list[str]]:
    """Parse a graph document; errors name the offending entry."""
    if not isinstance(doc, dict) or "vertices" not in doc or "edges" not in doc:
        raise ValueError("graph document needs 'vertices' and 'edges'")
    ids: list[str] = []
    q: list[float] = []
    host: list[int | None] = []
    index: dict[str, int] = {}
    for i, entry in enumerate(doc["vertices"]):
        where = f"vertices[{i}]"
        if not isinstance(entry, dict) or "id" not in entry:
            raise ValueError(f"{where}: missing id")
        vid = str(entry["id"])
        if vid in index:
            raise ValueError(f"{where}: duplicate id {vid!r}")
        index[vid] = i
        ids.append(vid)
        q.append(float(entry.get("q", 0.0)))
        hd = entry.get("host_degree")
        host.append(None if hd is None else int(hd))
    edges: list[tuple[int, int]] = []
    thetas: dict[tuple[int, int], float] = {}
    has_theta = False
    for j, entry in enumerate(doc["edges"]):
        where = f"edges[{j}]"
        if not isinstance(entry, dict) or "u" not in entry or "v" not in entry:
            raise ValueError(f"{where}: missing endpoint")
        try:
            u = index[str(entry["u"])]
            v = index[str(entry["v"])]
        except KeyError as exc:
            raise ValueError(f"{where}: unknown id {exc.args[0]!r}") from None
        if u == v:
            raise ValueError(f"{where}: self-loop at {entry['u']!r}")
        key = (u, v) if u < v else (v, u)
        if key in thetas:
            raise ValueError(f"{where}: duplicate edge")
        edges.append(key)
        if "theta" in entry and entry["theta"] is not None:
            has_theta = True
            t = float(entry["theta"])
            thetas[key] = t if u < v else -t
        else:
            thetas[key] = 0.0
    internal = [0] * len(ids)
    for (u, v) in edges:
        internal[u] += 1
        internal[v] += 1
    host_degree = [internal[i] if host[i] is None else host[i]
                   for i in range(len(ids))]
    for i, hd in enumerate(host_degree):
        if hd < internal[i]:
            raise ValueError(
                f"vertices[{i}]: host degree below internal degree")
    graph = Graph(len(ids), edges, host_degree=host_degree)
    potential = Potential(q)
    phase = None
    if has_theta:
        phase = PhaseField(graph, [thetas[e] for e in graph.edges])
    return graph, potential, phase, ids


def save_graph(path, graph: Graph, potential: Potential | None = None,
               phase: PhaseField | None = None,
               ids: list[str] | None = None) -> None:
    doc = graph_to_document(graph, potential, phase, ids)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(canonical_json(doc))


def load_graph(path) -> tuple[Graph, Potential, PhaseField | None, list[str]]:
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    return document_to_graph(doc)


def graph_digest(graph: Graph, potential: Potential | None = None,
                 phase: PhaseField | None = None,
                 ids: list[str] | None = None) -> str:
    text = canonical_json(graph_to_document(graph, potential, phase, ids))
    return hashlib.sha256(text.encode()).hexdigest()


def id_map_digest(ids: list[str]) -> str:
    return hashlib.sha256(json.dumps(list(ids)).encode()).hexdigest()


def write_report(path, report: dict) -> None:
    text = canonical_json(report)
    if path is None:
        print(text, end="")
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def verify_report_certificates(report: dict, graph: Graph,
                               potential: Potential,
                               ids: list[str]) -> float:
    """Re-score every witness in a report against the graph it names.

    Returns the largest absolute deviation between stored and
    recomputed ratios (contracted to stay below 1e-12).
    """
    index = {vid: i for i, vid in enumerate(ids)}
    worst = 0.0

    def rescore(entry: dict) -> None:
        nonlocal worst
        witness = [index[v] for v in entry["witness"]]
        st = subset_stats(graph, potential, witness)
        if "a" in entry:  # sparseness certificate at fixed a
            ratio = (2.0 * st.induced_edges - entry["a"]
                     * (st.boundary + st.q_plus_sum)) / st.size
            stored = entry["ratio"]
        elif "value" in entry:  # (a, 0) threshold certificate
            den = st.boundary + st.q_plus_sum
            stored = entry["value"]
            if stored == "inf":
                if st.induced_edges > 0 and den == 0:
                    return
                worst = max(worst, np.inf)
                return
            ratio = 0.0 if st.induced_edges == 0 else \
                2.0 * st.induced_edges / den
        else:  # isoperimetric certificate
            den = st.degree_sum + st.q_sum
            ratio = 0.0 if den == 0 else (st.boundary + st.q_sum) / den
            stored = entry["ratio"]
        worst = max(worst, abs(ratio - float(stored)))

    def walk(node) -> None:
        if isinstance(node, dict):
            if "witness" in node and ("ratio" in node or "value" in node):
                rescore(node)
            for v in node.values():
                walk(v)
        elif isinstance(node, list):
            for v in node:
                walk(v)

    walk(report)
    return worst
