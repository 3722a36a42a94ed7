"""Graphs on surface points or curves, and strongly-regular verification.

Adjacency lives in a dense boolean matrix; common-neighbor counting is one
integer matmul, so the full lambda/mu sweep over every vertex pair is cheap
at these sizes (<= ~3300 vertices).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np


class Graph:
    """Simple graph: symmetric boolean adjacency, zero diagonal, labels."""

    def __init__(self, adj, labels=None):
        adj = np.asarray(adj, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError("adjacency must be square")
        if (adj != adj.T).any():
            raise ValueError("adjacency must be symmetric")
        if adj.diagonal().any():
            raise ValueError("adjacency must have zero diagonal")
        adj = adj.copy()
        adj.setflags(write=False)
        self.adj = adj
        self.n = adj.shape[0]
        self.labels = list(labels) if labels is not None else list(range(self.n))

    def complement(self):
        comp = (~self.adj).copy()
        np.fill_diagonal(comp, False)
        return Graph(comp, self.labels)

    def is_complete(self):
        return bool((self.adj | np.eye(self.n, dtype=bool)).all())

    def edge_count(self):
        return int(self.adj.sum()) // 2

    def same_edges(self, other):
        return self.n == other.n and bool((self.adj == other.adj).all())

    def to_edge_list_json(self):
        """Canonical edge list (sorted label pairs)."""
        labels = [str(l) for l in self.labels]
        edges = []
        for i, j in zip(*np.nonzero(np.triu(self.adj))):
            a, b = sorted((labels[int(i)], labels[int(j)]))
            edges.append([a, b])
        return json.dumps({"vertices": sorted(labels), "edges": sorted(edges)})

    def adjacency_text(self):
        order = np.argsort([str(l) for l in self.labels])
        sub = self.adj[np.ix_(order, order)]
        return "\n".join("".join("1" if x else "0" for x in row) for row in sub)


@dataclass(frozen=True)
class SrgParams:
    v: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        if self.k * (self.k - self.lam - 1) != (self.v - self.k - 1) * self.mu:
            raise ValueError(f"infeasible SRG parameters {self}")

    def as_tuple(self):
        return (self.v, self.k, self.lam, self.mu)


@dataclass(frozen=True)
class NotSrgReport:
    reason: str
    witness: tuple


def srg_formula(q):
    """Parameters of the curve graph: ((q^3+1)(q^2+1), q^5,
    q(q-1)(q^3+q^2-1), q^3(q^2-1))."""
    return SrgParams((q**3 + 1) * (q**2 + 1), q**5,
                     q * (q - 1) * (q**3 + q**2 - 1), q**3 * (q**2 - 1))


def srg_params(graph: Graph):
    """Verify strong regularity over every pair; returns SrgParams, a
    NotSrgReport with the first violating pair, or a degenerate report for
    graphs without non-adjacent pairs."""
    A = graph.adj
    n = graph.n
    deg = A.sum(axis=1)
    if not (deg == deg[0]).all():
        i = int(np.argmax(deg != deg[0]))
        return NotSrgReport("irregular degree", (i, int(deg[i]), int(deg[0])))
    k = int(deg[0])
    common = (A.astype(np.int64) @ A.astype(np.int64))
    off = ~np.eye(n, dtype=bool)
    adj_counts = common[A]
    non_counts = common[(~A) & off]
    lam = int(adj_counts[0]) if adj_counts.size else 0
    if adj_counts.size and not (adj_counts == lam).all():
        idx = np.argwhere(A)[int(np.argmax(common[A] != lam))]
        return NotSrgReport("lambda not constant", tuple(int(x) for x in idx))
    if non_counts.size == 0:
        return NotSrgReport("degenerate: complete graph, mu undefined", (n, k, lam))
    mu = int(non_counts[0])
    if not (non_counts == mu).all():
        idx = np.argwhere((~A) & off)[int(np.argmax(non_counts != mu))]
        return NotSrgReport("mu not constant", tuple(int(x) for x in idx))
    return SrgParams(n, k, lam, mu)


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def build_point_curve_graph(points, curve_point_sets):
    """Vertices = surface points; edges join two points lying on a common
    curve (the union of cliques over the curves' rational point sets)."""
    index = {p: i for i, p in enumerate(points)}
    n = len(points)
    adj = np.zeros((n, n), dtype=bool)
    for pts in curve_point_sets:
        try:
            ids = [index[p] for p in pts]
        except KeyError as exc:
            raise ValueError(f"curve point {exc.args[0]} is not a surface point")
        ids = np.array(ids)
        adj[np.ix_(ids, ids)] = True
    np.fill_diagonal(adj, False)
    return Graph(adj, labels=[str(p) for p in points])


def collinearity_graph(points, line_point_sets):
    """Vertices = points; edges join two points on a common line."""
    return build_point_curve_graph(points, line_point_sets)
