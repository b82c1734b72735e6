"""Edge lists, DOT, JSON reports and CSV sweeps."""
from __future__ import annotations

import csv
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Iterator

from . import analytic
from .analytic import AnalyticReport, GammaUndefined
from .core import GraphView, Params, decode, format_label, from_edges, validate_params
from .empirical import EmpiricalReport

HEADER_RE = re.compile(r"^# hiernet n=(\d+) k=(\d+) vertices=(\d+) edges=(\d+)$")

SWEEP_METRICS = ("clustering", "transitivity", "size", "diameter", "gamma_theory")


class FormatError(ValueError):
    pass


# ---------------------------------------------------------------------------
# edge list


def write_edgelist(graph: GraphView, sink: IO[str]) -> None:
    p = graph.params
    sink.write(f"# hiernet n={p.n} k={p.k} vertices={p.order} edges={graph.num_edges}\n")
    sink.writelines(f"{u} {v}\n" for u, v in graph.edges.tolist())


def read_edgelist(source: IO[str]) -> GraphView:
    header = source.readline().rstrip("\n")
    m = HEADER_RE.match(header)
    if not m:
        raise FormatError(f"malformed header: {header!r}")
    n, k, vertices, num_edges = map(int, m.groups())
    try:
        params = validate_params(n, k)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    if vertices != params.order:
        raise FormatError(f"header says {vertices} vertices, H({n},{k}) has {params.order}")
    edges = []
    for lineno, line in enumerate(source, start=2):
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected '<u> <v>', got {line.rstrip()!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer id in {line.rstrip()!r}") from None
        if not (0 <= u < vertices and 0 <= v < vertices):
            raise FormatError(f"line {lineno}: id out of range [0, {vertices})")
        if u >= v:
            raise FormatError(f"line {lineno}: expected u < v, got {u} {v}")
        edges.append((u, v))
    if len(edges) != num_edges:
        raise FormatError(f"header says {num_edges} edges, body has {len(edges)}")
    try:
        return from_edges(params, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


# ---------------------------------------------------------------------------
# DOT


def write_dot(graph: GraphView, sink: IO[str]) -> None:
    p = graph.params
    names = [format_label(decode(v, p), p.n) for v in range(p.order)]
    sink.write(f'graph "H({p.n},{p.k})" {{\n')
    for name in names:
        sink.write(f'  "{name}";\n')
    for u, v in graph.edges.tolist():
        sink.write(f'  "{names[u]}" -- "{names[v]}";\n')
    sink.write("}\n")


# ---------------------------------------------------------------------------
# JSON report


def fraction_str(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _rational(q: Fraction) -> dict:
    return {"exact": fraction_str(q), "float": float(q)}


def report_dict(a: AnalyticReport, e: EmpiricalReport | None = None, match: dict | None = None) -> dict:
    if e is not None and e.params != a.params:
        raise ValueError(f"reports disagree on parameters: {a.params} vs {e.params}")
    out = {
        "params": {"n": a.params.n, "k": a.params.k},
        "order": a.order,
        "size": a.size,
        "radius": a.radius,
        "diameter": a.diameter,
        "root_eccentricity": a.root_eccentricity,
        "avg_degree": {**_rational(a.avg_degree), "asymptotic": a.avg_degree_asymptotic},
        "clustering": _rational(a.clustering_coefficient),
        "triangles": a.triangles,
        "triples": a.triples,
        "transitivity": _rational(a.transitivity),
        "gamma_theory": a.gamma_theory,
        "class_stats": [
            {
                "class": s.cls.kind.value,
                "level": s.cls.level,
                "count": s.count,
                "degree": s.degree,
                "clustering": _rational(s.clustering),
            }
            for s in a.class_stats
        ],
    }
    if e is not None:
        out["empirical"] = {
            "size": e.size,
            "degree_histogram": {str(d): c for d, c in e.degree_histogram.items()},
            "radius": e.radius,
            "diameter": e.diameter,
            "root_eccentricity": e.root_eccentricity,
            "clustering": _rational(e.clustering_coefficient),
            "triangles": e.triangles,
            "triples": e.triples,
            "transitivity": _rational(e.transitivity),
        }
        if match is None:
            from .verify import compare_reports

            match = compare_reports(a, e)
        out["match"] = match
    return out


def write_report(a: AnalyticReport, e: EmpiricalReport | None, sink: IO[str]) -> dict:
    doc = report_dict(a, e)
    sink.write(json.dumps(doc, indent=2))
    sink.write("\n")
    return doc


# ---------------------------------------------------------------------------
# sweeps


@dataclass(frozen=True)
class SweepSpec:
    n_range: tuple[int, int, int]
    k_range: tuple[int, int]
    metric: str

    def __post_init__(self):
        if self.metric not in SWEEP_METRICS:
            raise ValueError(f"unknown metric {self.metric!r}; choose from {', '.join(SWEEP_METRICS)}")
        n0, n1, step = self.n_range
        k0, k1 = self.k_range
        if step < 1:
            raise ValueError("n step must be >= 1")
        if n0 > n1 or k0 > k1:
            raise ValueError("empty sweep range")
        validate_params(n0, k0)

    def grid(self) -> Iterator[Params]:
        n0, n1, step = self.n_range
        k0, k1 = self.k_range
        for n in range(n0, n1 + 1, step):
            for k in range(k0, k1 + 1):
                yield Params(n, k)


def sweep_value(params: Params, metric: str):
    """Exact single-point value, or None where the metric is undefined."""
    if metric == "clustering":
        return analytic.clustering_coefficient_closed(params)
    if metric == "transitivity":
        return analytic.transitivity_closed(params)
    if metric == "size":
        return analytic.size_closed(params)
    if metric == "diameter":
        return analytic.metric_closed(params)["diameter"]
    try:
        return analytic.gamma_theory(params)
    except GammaUndefined:
        return None


def format_value(value) -> str:
    if value is None:
        return "error"
    if isinstance(value, int):
        return str(value)
    return f"{float(value):.12g}"


def run_sweep(spec: SweepSpec, sink: IO[str]) -> int:
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(["n", "k", spec.metric])
    rows = 0
    for p in spec.grid():
        writer.writerow([p.n, p.k, format_value(sweep_value(p, spec.metric))])
        rows += 1
    return rows
