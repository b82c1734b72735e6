"""Brute-force measurements on a materialized graph.

These never look at labels or closed forms; they only see the edge
structure, which makes them the reference the analytic and oracle modules
are checked against.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterator, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .analytic import root_class_points
from .core import GraphView, Params


class DisconnectedGraph(RuntimeError):
    pass


class FitError(ValueError):
    pass


@dataclass
class EmpiricalReport:
    params: Params
    size: int
    degree_histogram: dict[int, int]
    radius: int
    diameter: int
    root_eccentricity: int
    clustering_coefficient: Fraction
    triangles: int
    triples: int
    transitivity: Fraction
    per_vertex_clustering: dict[int, Fraction] = field(default_factory=dict, repr=False)


# ---------------------------------------------------------------------------
# distances


def _csr(graph: GraphView) -> csr_matrix:
    num = graph.num_vertices
    data = np.ones(len(graph.indices), dtype=np.int8)
    return csr_matrix((data, graph.indices, graph.indptr), shape=(num, num))


def bfs_distances(graph: GraphView, source: int) -> list[int]:
    """Plain single-source BFS; -1 marks unreachable vertices."""
    dist = [-1] * graph.num_vertices
    dist[source] = 0
    queue = deque([source])
    adj = graph.adjacency_lists()
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def bfs_distance_rows(graph: GraphView, chunk: int = 512) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Yield ``(sources, distance matrix)`` blocks covering all sources."""
    mat = _csr(graph)
    num = graph.num_vertices
    for start in range(0, num, chunk):
        src = np.arange(start, min(start + chunk, num))
        d = shortest_path(mat, method="D", directed=False, unweighted=True, indices=src)
        if not np.all(np.isfinite(d)):
            raise DisconnectedGraph(f"{graph.params} is disconnected")
        yield src, d.astype(np.int64)


def bfs_eccentricities(graph: GraphView) -> dict:
    ecc = np.empty(graph.num_vertices, dtype=np.int64)
    for src, d in bfs_distance_rows(graph):
        ecc[src] = d.max(axis=1)
    return {
        "eccentricity": ecc,
        "radius": int(ecc.min()),
        "diameter": int(ecc.max()),
    }


# ---------------------------------------------------------------------------
# clustering and triangles


def local_clustering(graph: GraphView, x: int) -> Fraction:
    nbrs = graph.neighbors(x)
    deg = len(nbrs)
    if deg < 2:
        return Fraction(0)
    links = sum(
        len(np.intersect1d(graph.neighbors(u), nbrs, assume_unique=True)) for u in nbrs
    )
    # every neighbor edge was seen from both ends
    return Fraction(links, deg * (deg - 1))


def vertex_triangles(graph: GraphView) -> tuple[int, np.ndarray]:
    """Total triangles and per-vertex triangle counts.

    Each triangle u < v < w is found once, from edge (u, v) by intersecting
    the higher-id neighbor sets of both endpoints.
    """
    num = graph.num_vertices
    higher = [set(graph.neighbors(v)[graph.neighbors(v) > v].tolist()) for v in range(num)]
    per_vertex = np.zeros(num, dtype=np.int64)
    total = 0
    for u, v in graph.edges.tolist():
        for w in higher[u] & higher[v]:
            total += 1
            per_vertex[u] += 1
            per_vertex[v] += 1
            per_vertex[w] += 1
    return total, per_vertex


def triangle_and_triple_census(graph: GraphView) -> dict:
    triangles, _ = vertex_triangles(graph)
    triples = sum(comb(int(d), 2) for d in graph.degrees())
    return {
        "triangles": triangles,
        "triples": triples,
        "transitivity": Fraction(3 * triangles, triples) if triples else Fraction(0),
    }


def empirical_report(graph: GraphView) -> EmpiricalReport:
    params = graph.params
    degrees = graph.degrees()
    hist = dict(sorted(Counter(int(d) for d in degrees).items()))
    ecc = bfs_eccentricities(graph)
    triangles, per_vertex = vertex_triangles(graph)
    clustering = {}
    for v, (d, t) in enumerate(zip(degrees.tolist(), per_vertex.tolist())):
        clustering[v] = Fraction(2 * t, d * (d - 1)) if d >= 2 else Fraction(0)
    triples = sum(comb(d, 2) for d in degrees.tolist())
    return EmpiricalReport(
        params=params,
        size=graph.num_edges,
        degree_histogram=hist,
        radius=ecc["radius"],
        diameter=ecc["diameter"],
        root_eccentricity=int(ecc["eccentricity"][0]),
        clustering_coefficient=sum(clustering.values(), Fraction(0)) / graph.num_vertices,
        triangles=triangles,
        triples=triples,
        transitivity=Fraction(3 * triangles, triples) if triples else Fraction(0),
        per_vertex_clustering=clustering,
    )


# ---------------------------------------------------------------------------
# log-log fits


def _loglog_slope(points: Sequence[tuple[float, float]]) -> float:
    xs = {float(x) for x, _ in points}
    if len(xs) < 3:
        raise FitError(f"need at least 3 distinct degrees, got {len(xs)}")
    x = np.log([float(p[0]) for p in points])
    y = np.log([float(p[1]) for p in points])
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


def fit_gamma(points: Sequence[tuple[float, float]]) -> float:
    """Exponent gamma from ``(degree, cumulative fraction)`` pairs, using
    P_cum(z) ~ z^(1 - gamma) and an unweighted least-squares line."""
    return 1.0 - _loglog_slope(points)


def fit_clustering_exponent(points: Sequence[tuple[float, float]]) -> float:
    """Slope of log clustering against log degree."""
    if any(float(c) <= 0 for _, c in points):
        raise FitError("clustering values must be positive for a log-log fit")
    return _loglog_slope(points)


def gamma_fit(params: Params) -> float:
    if params.n < 3:
        raise FitError(f"no power law for n={params.n}")
    return fit_gamma([(z, p) for z, p, _ in root_class_points(params)])


def clustering_slope(params: Params) -> float:
    if params.n < 3:
        raise FitError(f"clustering vanishes for n={params.n}")
    return fit_clustering_exponent([(z, c) for z, _, c in root_class_points(params)])
