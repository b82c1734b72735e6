"""Vertex labels, adjacency rules and graph materialization for H(n, k).

Vertices are k-digit base-n strings ``x1 x2 ... xk`` with ``x1`` the most
significant digit (the index of the outermost copy).  Internally a label is a
plain tuple of ints and a vertex id is its positional value.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

import numpy as np

Label = tuple[int, ...]

DEFAULT_CAP = 2**20


class ParamError(ValueError):
    pass


class LabelError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """Raised when a graph would have more vertices than the materialization cap."""


@dataclass(frozen=True)
class Params:
    n: int
    k: int

    @property
    def order(self) -> int:
        return self.n**self.k

    def __str__(self) -> str:
        return f"H({self.n},{self.k})"


def validate_params(n: int, k: int) -> Params:
    if isinstance(n, bool) or not isinstance(n, int):
        raise ParamError(f"n must be an integer, got {n!r}")
    if isinstance(k, bool) or not isinstance(k, int):
        raise ParamError(f"k must be an integer, got {k!r}")
    if n < 2:
        raise ParamError("n must be ≥ 2")
    if k < 1:
        raise ParamError("k must be ≥ 1")
    return Params(n, k)


def order_exceeds(params: Params, cap: int) -> bool:
    """``n**k > cap`` without computing n**k for absurd k."""
    total = 1
    for _ in range(params.k):
        total *= params.n
        if total > cap:
            return True
    return False


def check_budget(params: Params, cap: int = DEFAULT_CAP) -> None:
    if order_exceeds(params, cap):
        raise BudgetExceeded(
            f"{params} has {params.n}^{params.k} vertices, above the materialization "
            f"cap of {cap}; use the analytic operations instead"
        )


# ---------------------------------------------------------------------------
# labels


def check_label(x: Sequence[int], params: Params) -> Label:
    x = tuple(x)
    if len(x) != params.k:
        raise LabelError(f"label {x!r} has length {len(x)}, expected k={params.k}")
    for d in x:
        if not 0 <= d < params.n:
            raise LabelError(f"digit {d} of label {x!r} outside [0, {params.n - 1}]")
    return x


def decode(vid: int, params: Params) -> Label:
    """Integer id -> label."""
    n, k = params.n, params.k
    if not 0 <= vid < params.order:
        raise LabelError(f"id {vid} outside [0, {n}^{k})")
    digits = [0] * k
    for pos in range(k - 1, -1, -1):
        vid, digits[pos] = divmod(vid, n)
    return tuple(digits)


def encode(x: Sequence[int], params: Params) -> int:
    """Label -> integer id."""
    x = check_label(x, params)
    vid = 0
    for d in x:
        vid = vid * params.n + d
    return vid


def format_label(x: Sequence[int], n: int) -> str:
    if n <= 10:
        return "".join(str(d) for d in x)
    return ",".join(str(d) for d in x)


def parse_label(text: str, params: Params) -> Label:
    """Bare digit string for n <= 10, comma-separated digits otherwise."""
    text = text.strip()
    try:
        if "," in text:
            digits = tuple(int(t) for t in text.split(","))
        elif params.n <= 10:
            digits = tuple(int(c) for c in text)
        else:
            raise LabelError(f"labels for n={params.n} > 10 must be comma-separated")
    except ValueError as exc:
        if isinstance(exc, LabelError):
            raise
        raise LabelError(f"cannot parse label {text!r}") from None
    return check_label(digits, params)


def labels(params: Params) -> Iterator[Label]:
    """All labels in id order."""
    return product(range(params.n), repeat=params.k)


# ---------------------------------------------------------------------------
# adjacency


def _nonzero_suffix(x: Label) -> int:
    s = 0
    for d in reversed(x):
        if d == 0:
            break
        s += 1
    return s


def _zero_suffix(x: Label) -> int:
    t = 0
    for d in reversed(x):
        if d != 0:
            break
        t += 1
    return t


def matching_rule(x: Label, y: Label) -> int | None:
    """Which direct adjacency rule joins ``x`` and ``y``: 3 (same block),
    4 (root to peripheral), 5 (sibling sub-roots), or None."""
    k = len(x)
    if x == y:
        return None
    if x[:-1] == y[:-1]:
        return 3
    # first differing position, 0-based
    i = next(j for j in range(k) if x[j] != y[j])
    # rule 4: one side is prefix + zeros (>= 2 of them), the other has an
    # all-nonzero suffix after the same prefix
    for a, b in ((x, y), (y, x)):
        if i <= k - 2 and all(d == 0 for d in a[i:]) and all(d != 0 for d in b[i:]):
            return 4
    # rule 5: same prefix, distinct nonzero digit at i, zeros after
    if (
        i <= k - 2
        and x[i] != 0
        and y[i] != 0
        and all(d == 0 for d in x[i + 1 :])
        and all(d == 0 for d in y[i + 1 :])
    ):
        return 5
    return None


def is_adjacent(x: Sequence[int], y: Sequence[int], params: Params) -> bool:
    x = check_label(x, params)
    y = check_label(y, params)
    return matching_rule(x, y) is not None


def neighbors(x: Sequence[int], params: Params) -> list[Label]:
    """Sorted neighbor labels of ``x``, generated from the rules directly."""
    x = check_label(x, params)
    n, k = params.n, params.k
    out: list[Label] = []
    head = x[:-1]
    out.extend(head + (d,) for d in range(n) if d != x[-1])

    zeros = _zero_suffix(x)
    nonzero = _nonzero_suffix(x)
    nz_digits = range(1, n)
    # x as a (sub)root: prefix of length i followed by k-i >= 2 zeros
    for i in range(k - zeros, k - 1):
        prefix = x[:i]
        out.extend(prefix + tail for tail in product(nz_digits, repeat=k - i))
    # x as a peripheral: all-nonzero suffix of length k-i >= 2
    for i in range(k - nonzero, k - 1):
        out.append(x[:i] + (0,) * (k - i))
    # x as a sub-root among its siblings
    if 0 < zeros < k:
        i = k - zeros - 1  # 0-based position of the last nonzero digit
        out.extend(
            x[:i] + (d,) + (0,) * zeros for d in nz_digits if d != x[i]
        )
    out.sort()
    return out


# ---------------------------------------------------------------------------
# classification


class Kind(enum.Enum):
    GLOBAL_ROOT = "root"
    SUB_ROOT = "sub-root"
    GLOBAL_PERIPHERAL = "peripheral"
    SUB_PERIPHERAL = "sub-peripheral"


_RANK = {Kind.GLOBAL_ROOT: 0, Kind.SUB_ROOT: 1, Kind.GLOBAL_PERIPHERAL: 2, Kind.SUB_PERIPHERAL: 3}


@dataclass(frozen=True)
class VertexClass:
    """One row family of the degree/clustering table.  ``level`` is the prefix
    length i for sub-roots and sub-peripherals, 0 for the global classes."""

    kind: Kind
    level: int = 0

    @property
    def sort_key(self) -> tuple[int, int]:
        return _RANK[self.kind], self.level

    def __str__(self) -> str:
        if self.kind in (Kind.SUB_ROOT, Kind.SUB_PERIPHERAL):
            return f"{self.kind.value}({self.level})"
        return self.kind.value


def classify(x: Sequence[int], params: Params) -> VertexClass:
    x = check_label(x, params)
    k = params.k
    if x[-1] == 0:
        zeros = _zero_suffix(x)
        if zeros == k:
            return VertexClass(Kind.GLOBAL_ROOT)
        return VertexClass(Kind.SUB_ROOT, k - zeros)
    nonzero = _nonzero_suffix(x)
    if nonzero == k:
        return VertexClass(Kind.GLOBAL_PERIPHERAL)
    return VertexClass(Kind.SUB_PERIPHERAL, k - nonzero)


def subgraph_vertices(prefix: Sequence[int], params: Params) -> list[Label]:
    """Labels of the copy of H(n, k-i) addressed by a length-i prefix."""
    prefix = tuple(prefix)
    i = len(prefix)
    if not 1 <= i <= params.k - 1:
        raise LabelError(f"prefix length {i} outside [1, {params.k - 1}]")
    if any(not 0 <= d < params.n for d in prefix):
        raise LabelError(f"prefix {prefix!r} has digits outside [0, {params.n - 1}]")
    return [prefix + tail for tail in product(range(params.n), repeat=params.k - i)]


# ---------------------------------------------------------------------------
# materialized graphs


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class GraphView:
    """Immutable materialized graph: sorted ``(u, v)`` edge array with u < v
    plus CSR adjacency (``indptr``, ``indices``) with sorted neighbor rows."""

    params: Params
    edges: np.ndarray
    indptr: np.ndarray
    indices: np.ndarray

    @property
    def num_vertices(self) -> int:
        return len(self.indptr) - 1

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def edge_set(self) -> set[tuple[int, int]]:
        return {(int(u), int(v)) for u, v in self.edges}

    def adjacency_lists(self) -> list[list[int]]:
        return [self.neighbors(v).tolist() for v in range(self.num_vertices)]


def from_edges(params: Params, edges: Iterable[tuple[int, int]] | np.ndarray) -> GraphView:
    """Build a GraphView from undirected edges, normalizing to u < v."""
    num = params.order
    e = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    if len(e):
        if e.min() < 0 or e.max() >= num:
            raise ValueError("edge endpoint outside vertex range")
        if np.any(e[:, 0] == e[:, 1]):
            raise ValueError("self-loop in edge list")
    e = np.sort(e, axis=1)
    e = e[np.lexsort((e[:, 1], e[:, 0]))]
    if len(e) > 1 and np.any(np.all(e[1:] == e[:-1], axis=1)):
        raise ValueError("duplicate edge in edge list")
    src = np.concatenate([e[:, 0], e[:, 1]])
    dst = np.concatenate([e[:, 1], e[:, 0]])
    order = np.lexsort((dst, src))
    indices = dst[order]
    counts = np.bincount(src, minlength=num)
    indptr = np.zeros(num + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    return GraphView(params, _frozen(e), _frozen(indptr), _frozen(indices))


def _nonzero_ids(n: int, m: int) -> np.ndarray:
    """Ids (in base n, length m) of all labels with every digit nonzero."""
    ids = np.arange(1, n, dtype=np.int64)
    for _ in range(m - 1):
        ids = (ids[:, None] * n + np.arange(1, n, dtype=np.int64)[None, :]).ravel()
    return ids


def recursive_edges(params: Params) -> np.ndarray:
    """Edge array built by the copy-and-join recursion (unsorted)."""
    n = params.n
    iu, ju = np.triu_indices(n, 1)
    edges = np.stack([iu, ju], axis=1).astype(np.int64)
    for level in range(2, params.k + 1):
        block = n ** (level - 1)
        copies = [edges + alpha * block for alpha in range(n)]
        # root of the new level to every all-nonzero label
        periph = _nonzero_ids(n, level)
        copies.append(np.stack([np.zeros_like(periph), periph], axis=1))
        # roots of the nonzero copies form a clique
        a, b = np.triu_indices(n - 1, 1)
        copies.append(np.stack([(a + 1) * block, (b + 1) * block], axis=1).astype(np.int64))
        edges = np.concatenate(copies)
    return edges


def enumerate_edges(params: Params, cap: int = DEFAULT_CAP) -> GraphView:
    check_budget(params, cap)
    return from_edges(params, recursive_edges(params))


def predicate_edges(params: Params) -> set[tuple[int, int]]:
    """Edge set by testing every pair against the adjacency rules (O(N^2 k))."""
    labs = list(labels(params))
    out = set()
    for u, x in enumerate(labs):
        for v in range(u + 1, len(labs)):
            if matching_rule(x, labs[v]) is not None:
                out.add((u, v))
    return out


def collapse(level: int, params: Params, graph: GraphView) -> GraphView:
    """Quotient by the length-``level`` prefix partition; ids of the result
    are the prefix ids, so it is directly comparable with H(n, level)."""
    if not 1 <= level <= params.k - 1:
        raise ParamError(f"collapse level {level} outside [1, {params.k - 1}]")
    shift = params.n ** (params.k - level)
    q = graph.edges // shift
    q = q[q[:, 0] != q[:, 1]]
    q = np.unique(np.sort(q, axis=1), axis=0)
    return from_edges(Params(params.n, level), q)
