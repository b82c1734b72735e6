"""Cross-checks between closed forms, the distance oracle and brute force."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .analytic import AnalyticReport, analytic_report, class_census, class_clustering, degree_histogram
from .core import (
    DEFAULT_CAP,
    GraphView,
    Params,
    check_budget,
    classify,
    collapse,
    decode,
    encode,
    enumerate_edges,
    format_label,
    labels,
    neighbors,
    predicate_edges,
)
from .empirical import EmpiricalReport, bfs_distance_rows, empirical_report
from .oracle import distances_from, helper_tables

# full pairwise predicate scans are quadratic; above this only the
# rule-driven neighbor generator is compared with the recursive build
PREDICATE_SCAN_LIMIT = 1024


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def compare_reports(a: AnalyticReport, e: EmpiricalReport) -> dict[str, bool]:
    p = a.params
    per_vertex = all(
        c == class_clustering(classify(decode(v, p), p), p)
        for v, c in e.per_vertex_clustering.items()
    )
    return {
        "size": e.size == a.size,
        "degree_histogram": e.degree_histogram == degree_histogram(p),
        "radius": e.radius == a.radius,
        "diameter": e.diameter == a.diameter,
        "root_eccentricity": e.root_eccentricity == a.root_eccentricity,
        "per_vertex_clustering": per_vertex,
        "clustering": e.clustering_coefficient == a.clustering_coefficient,
        "triangles": e.triangles == a.triangles,
        "triples": e.triples == a.triples,
        "transitivity": e.transitivity == a.transitivity,
    }


def _label(v: int, p: Params) -> str:
    return format_label(decode(v, p), p.n)


def check_construction(p: Params, g: GraphView) -> CheckResult:
    for v, x in enumerate(labels(p)):
        got = [encode(y, p) for y in neighbors(x, p)]
        if got != g.neighbors(v).tolist():
            return CheckResult("construction", False, f"neighbors of {_label(v, p)} differ from recursive build")
    if p.order <= PREDICATE_SCAN_LIMIT:
        diff = g.edge_set() ^ predicate_edges(p)
        if diff:
            u, v = min(diff)
            return CheckResult("construction", False, f"edge {_label(u, p)}-{_label(v, p)} differs from predicate")
    return CheckResult("construction", True)


def check_census(p: Params, g: GraphView) -> CheckResult:
    expected = {s.cls: s for s in class_census(p)}
    seen: Counter = Counter()
    degrees = g.degrees()
    for v, x in enumerate(labels(p)):
        cls = classify(x, p)
        seen[cls] += 1
        if degrees[v] != expected[cls].degree:
            return CheckResult("class census", False, f"degree of {_label(v, p)} is {degrees[v]}, table says {expected[cls].degree}")
    for cls, stat in expected.items():
        if seen[cls] != stat.count:
            return CheckResult("class census", False, f"{cls}: {seen[cls]} vertices, table says {stat.count}")
    return CheckResult("class census", True)


def check_metrics(p: Params, g: GraphView) -> CheckResult:
    match = compare_reports(analytic_report(p), empirical_report(g))
    bad = [name for name, ok in match.items() if not ok]
    return CheckResult("metrics", not bad, f"mismatch: {bad[0]}" if bad else "")


def check_oracle(p: Params, g: GraphView) -> CheckResult:
    tables = helper_tables(p)
    for src, rows in bfs_distance_rows(g):
        for s, row in zip(src.tolist(), rows):
            oracle = distances_from(s, p, tables)
            wrong = np.nonzero(oracle != row)[0]
            if len(wrong):
                t = int(wrong[0])
                return CheckResult(
                    "oracle vs BFS", False,
                    f"{_label(s, p)} -> {_label(t, p)}: oracle {oracle[t]}, BFS {row[t]}",
                )
    return CheckResult("oracle vs BFS", True)


def check_collapse(p: Params, g: GraphView) -> CheckResult:
    for level in range(1, p.k):
        q = collapse(level, p, g)
        if q.edge_set() != enumerate_edges(Params(p.n, level)).edge_set():
            return CheckResult("collapse", False, f"level {level} quotient is not H({p.n},{level})")
    return CheckResult("collapse", True)


CHECKS: list[Callable[[Params, GraphView], CheckResult]] = [
    check_construction,
    check_census,
    check_metrics,
    check_oracle,
    check_collapse,
]


def run_suite(p: Params, cap: int = DEFAULT_CAP) -> list[CheckResult]:
    check_budget(p, cap)
    g = enumerate_edges(p, cap)
    return [check(p, g) for check in CHECKS]
