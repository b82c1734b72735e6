from functools import lru_cache

import pytest

from hiernet.core import Params, enumerate_edges
from hiernet.empirical import empirical_report


def grid(max_order, ns=(2, 3, 4, 5)):
    """All (n, k) with n in ``ns`` and n**k <= max_order."""
    out = []
    for n in ns:
        k = 1
        while n**k <= max_order:
            out.append(Params(n, k))
            k += 1
    return out


@lru_cache(maxsize=None)
def graph(n, k):
    return enumerate_edges(Params(n, k))


@lru_cache(maxsize=None)
def report(n, k):
    return empirical_report(graph(n, k))


@pytest.fixture
def h32():
    return graph(3, 2)
