"""Exact closed-form properties of H(n, k).

Everything is computed with Python integers and ``fractions.Fraction``;
floats appear only where a logarithm is involved.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .core import Kind, Params, VertexClass, check_label


class GammaUndefined(ValueError):
    pass


@dataclass(frozen=True)
class ClassStat:
    cls: VertexClass
    count: int
    degree: int
    clustering: Fraction


@dataclass(frozen=True)
class AnalyticReport:
    params: Params
    order: int
    size: int
    radius: int
    diameter: int
    root_eccentricity: int
    avg_degree: Fraction
    avg_degree_asymptotic: int
    clustering_coefficient: Fraction
    triangles: int
    triples: int
    transitivity: Fraction
    gamma_theory: float | None
    class_stats: list[ClassStat] = field(default_factory=list)


# ---------------------------------------------------------------------------
# size


def size_sum_form(params: Params) -> int:
    n, k = params.n, params.k
    total = n ** (k - 1) * comb(n, 2)
    total += sum(n ** (k - i) * (n - 1) ** i for i in range(2, k + 1))
    total += comb(n - 1, 2) * sum(n**i for i in range(k - 1))
    return total


def size_closed_form(params: Params) -> int:
    n, k = params.n, params.k
    value = Fraction(3, 2) * n ** (k + 1) - (n - 1) ** (k + 1) - 2 * n**k - Fraction(n, 2) + 1
    assert value.denominator == 1
    return int(value)


def size_recurrence(params: Params) -> int:
    n = params.n
    e = comb(n, 2)
    for level in range(2, params.k + 1):
        e = n * e + (n - 1) ** level + comb(n - 1, 2)
    return e


def size_closed(params: Params) -> int:
    s = size_sum_form(params)
    if s != size_closed_form(params):
        raise ArithmeticError(f"size forms disagree for {params}")
    return s


def metric_closed(params: Params) -> dict[str, int]:
    k = params.k
    return {"radius": k, "diameter": 2 * k - 1, "root_eccentricity": k}


# ---------------------------------------------------------------------------
# degree / clustering table


def _geometric(n: int, terms: int) -> int:
    """sum_{j=1..terms} (n-1)^j; the n=2-safe form of ((n-1)^{terms+1}-(n-1))/(n-2)."""
    return sum((n - 1) ** j for j in range(1, terms + 1))


def class_degree(cls: VertexClass, params: Params) -> int:
    n, k = params.n, params.k
    if cls.kind is Kind.GLOBAL_ROOT:
        return _geometric(n, k)
    if cls.kind is Kind.SUB_ROOT:
        return _geometric(n, k - cls.level) + n - 2
    if cls.kind is Kind.GLOBAL_PERIPHERAL:
        return n + k - 2
    return n + k - cls.level - 2


def class_count(cls: VertexClass, params: Params) -> int:
    n, k, i = params.n, params.k, cls.level
    if cls.kind is Kind.GLOBAL_ROOT:
        return 1
    if cls.kind is Kind.SUB_ROOT:
        return (n - 1) * n ** (i - 1)
    if cls.kind is Kind.GLOBAL_PERIPHERAL:
        return (n - 1) ** k
    return (n - 1) ** (k - i) * n ** (i - 1)


def class_clustering(cls: VertexClass, params: Params) -> Fraction:
    """Table value of c(v); zero whenever degree < 2 or n = 2 (where the
    table's denominators vanish and the graph is a tree)."""
    n, k = params.n, params.k
    if n == 2 or class_degree(cls, params) < 2:
        return Fraction(0)
    if cls.kind is Kind.GLOBAL_ROOT:
        return Fraction((n - 2) ** 2, (n - 1) ** (k + 1) - 2 * n + 3)
    if cls.kind is Kind.SUB_ROOT:
        m = k - cls.level
        return Fraction((n - 2) ** 2, (n - 1) ** (m + 1) + (n - 1) ** 2 - 3 * n + 4)
    i = 0 if cls.kind is Kind.GLOBAL_PERIPHERAL else cls.level
    num = (n - 1) ** 2 + (2 * k - 2 * i - 3) * (n - 1) + 2 + 2 * i - 2 * k
    return Fraction(num, (n + k - i - 2) * (n + k - i - 3))


def vertex_classes(params: Params) -> list[VertexClass]:
    k = params.k
    out = [VertexClass(Kind.GLOBAL_ROOT)]
    out += [VertexClass(Kind.SUB_ROOT, i) for i in range(1, k)]
    out.append(VertexClass(Kind.GLOBAL_PERIPHERAL))
    out += [VertexClass(Kind.SUB_PERIPHERAL, i) for i in range(1, k)]
    return out


def class_census(params: Params) -> list[ClassStat]:
    return [
        ClassStat(c, class_count(c, params), class_degree(c, params), class_clustering(c, params))
        for c in vertex_classes(params)
    ]


def degree_histogram(params: Params) -> dict[int, int]:
    hist: dict[int, int] = {}
    for s in class_census(params):
        hist[s.degree] = hist.get(s.degree, 0) + s.count
    return dict(sorted(hist.items()))


def average_degree(params: Params) -> dict[str, Fraction | int]:
    return {
        "exact": Fraction(2 * size_closed(params), params.order),
        "asymptotic": params.n + 2 * params.k - 2,
    }


def clustering_coefficient_closed(params: Params) -> Fraction:
    total = sum(s.count * s.clustering for s in class_census(params))
    return Fraction(total) / params.order


# ---------------------------------------------------------------------------
# triangles, triples, transitivity


def triangles_closed_form(params: Params) -> int:
    n, k = params.n, params.k
    inner = 1 - Fraction(n, 3) - (n - 1) ** (k + 1) + Fraction(2, 3) * n**k * (2 * n - 3)
    value = Fraction(n - 2, 2) * inner
    assert value.denominator == 1
    return int(value)


def triangles_recurrence(params: Params) -> int:
    n = params.n
    t = comb(n, 3)
    for level in range(2, params.k + 1):
        t = n * t + (n - 1) ** (level - 1) * comb(n - 1, 2) + comb(n - 1, 3)
    return t


def triangles_closed(params: Params) -> int:
    t = triangles_closed_form(params)
    if t != triangles_recurrence(params):
        raise ArithmeticError(f"triangle forms disagree for {params}")
    return t


def triples_closed(params: Params) -> int:
    return sum(s.count * comb(s.degree, 2) for s in class_census(params))


def transitivity_closed(params: Params) -> Fraction:
    triples = triples_closed(params)
    if triples == 0:
        return Fraction(0)
    return Fraction(3 * triangles_closed(params), triples)


# ---------------------------------------------------------------------------
# scale-free exponent


def gamma_theory(params: Params) -> float:
    if params.n < 3:
        raise GammaUndefined(f"gamma undefined for n={params.n}")
    return 1 + math.log(params.n) / math.log(params.n - 1)


def cumulative_degree(params: Params, z: int) -> Fraction:
    """Fraction of vertices with degree >= z."""
    hits = sum(s.count for s in class_census(params) if s.degree >= z)
    return Fraction(hits, params.order)


def root_class_points(params: Params) -> list[tuple[int, Fraction, Fraction]]:
    """``(degree, cumulative fraction, clustering)`` for the root classes.

    The cumulative fraction counts root-class vertices only: at the level-i
    sub-root degree it is n^i / n^k, the count used when deriving the
    exponent from the table.
    """
    roots = [s for s in class_census(params) if s.cls.kind in (Kind.GLOBAL_ROOT, Kind.SUB_ROOT)]
    out = []
    for s in roots:
        hits = sum(r.count for r in roots if r.degree >= s.degree)
        out.append((s.degree, Fraction(hits, params.order), s.clustering))
    return sorted(out)


# ---------------------------------------------------------------------------


def distance_upper_bound(x: Sequence[int], y: Sequence[int], params: Params) -> int:
    x = check_label(x, params)
    y = check_label(y, params)
    if x == y:
        raise ValueError("distance bound needs two distinct vertices")
    i = next(j for j in range(params.k) if x[j] != y[j])
    return 2 * (params.k - i) - 1


def analytic_report(params: Params) -> AnalyticReport:
    metric = metric_closed(params)
    avg = average_degree(params)
    try:
        gamma = gamma_theory(params)
    except GammaUndefined:
        gamma = None
    return AnalyticReport(
        params=params,
        order=params.order,
        size=size_closed(params),
        radius=metric["radius"],
        diameter=metric["diameter"],
        root_eccentricity=metric["root_eccentricity"],
        avg_degree=avg["exact"],
        avg_degree_asymptotic=avg["asymptotic"],
        clustering_coefficient=clustering_coefficient_closed(params),
        triangles=triangles_closed(params),
        triples=triples_closed(params),
        transitivity=transitivity_closed(params),
        gamma_theory=gamma,
        class_stats=class_census(params),
    )
