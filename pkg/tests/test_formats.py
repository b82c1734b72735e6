import csv
import io
import json
from fractions import Fraction

import pytest

from conftest import graph, report
from hiernet import analytic
from hiernet.analytic import analytic_report
from hiernet.core import Params
from hiernet.formats import (
    FormatError,
    SweepSpec,
    read_edgelist,
    run_sweep,
    sweep_value,
    write_dot,
    write_edgelist,
    write_report,
)


def dump(fn, *args):
    buf = io.StringIO()
    fn(*args, buf)
    return buf.getvalue()


class TestEdgeList:
    def test_h21(self):
        assert dump(write_edgelist, graph(2, 1)) == "# hiernet n=2 k=1 vertices=2 edges=1\n0 1\n"

    def test_h32(self):
        lines = dump(write_edgelist, graph(3, 2)).splitlines()
        assert lines[0] == "# hiernet n=3 k=2 vertices=9 edges=14"
        assert len(lines) == 15 and lines[1] == "0 1"

    @pytest.mark.parametrize("n,k", [(4, 2), (3, 3), (2, 5), (5, 2)])
    def test_round_trip_bytes(self, n, k):
        text = dump(write_edgelist, graph(n, k))
        back = read_edgelist(io.StringIO(text))
        assert back.edge_set() == graph(n, k).edge_set()
        assert dump(write_edgelist, back) == text

    @pytest.mark.parametrize(
        "text",
        [
            "hiernet n=2 k=1 vertices=2 edges=1\n0 1\n",
            "# hiernet n=2 k=1 vertices=3 edges=1\n0 1\n",
            "# hiernet n=2 k=1 vertices=2 edges=2\n0 1\n",
            "# hiernet n=3 k=1 vertices=3 edges=2\n0 1\n0 1\n",
            "# hiernet n=2 k=1 vertices=2 edges=1\n0 2\n",
            "# hiernet n=2 k=1 vertices=2 edges=1\n1 0\n",
            "# hiernet n=2 k=1 vertices=2 edges=1\n0 x\n",
            "# hiernet n=1 k=1 vertices=1 edges=0\n",
        ],
    )
    def test_rejects(self, text):
        with pytest.raises(FormatError):
            read_edgelist(io.StringIO(text))


class TestDot:
    def test_h21(self):
        assert dump(write_dot, graph(2, 1)) == 'graph "H(2,1)" {\n  "0";\n  "1";\n  "0" -- "1";\n}\n'

    def test_k4(self):
        assert dump(write_dot, graph(4, 1)).count(" -- ") == 6

    def test_h32(self):
        text = dump(write_dot, graph(3, 2))
        assert text.count(" -- ") == 14
        for a in "012":
            for b in "012":
                assert f'  "{a}{b}";\n' in text

    def test_deterministic(self):
        assert dump(write_dot, graph(3, 3)) == dump(write_dot, graph(3, 3))


class TestReport:
    def test_analytic_only(self):
        doc = json.loads(dump(write_report, analytic_report(Params(3, 2)), None))
        assert doc["size"] == 14
        assert doc["transitivity"] == {"exact": "3/7", "float": pytest.approx(3 / 7)}
        assert "empirical" not in doc
        keys = list(doc)
        assert keys == [
            "params", "order", "size", "radius", "diameter", "root_eccentricity", "avg_degree",
            "clustering", "triangles", "triples", "transitivity", "gamma_theory", "class_stats",
        ]

    def test_with_empirical(self):
        doc = json.loads(dump(write_report, analytic_report(Params(3, 2)), report(3, 2)))
        assert doc["empirical"]["triangles"] == 5
        assert doc["match"] and all(doc["match"].values())

    @pytest.mark.parametrize("n", [3, 5, 9])
    def test_complete_graph(self, n):
        doc = json.loads(dump(write_report, analytic_report(Params(n, 1)), None))
        assert doc["clustering"]["exact"] == "1"

    def test_binary_gamma_is_null(self):
        doc = json.loads(dump(write_report, analytic_report(Params(2, 3)), None))
        assert doc["gamma_theory"] is None

    def test_params_mismatch(self):
        with pytest.raises(ValueError):
            dump(write_report, analytic_report(Params(3, 3)), report(3, 2))

    def test_byte_deterministic(self):
        a = dump(write_report, analytic_report(Params(4, 2)), report(4, 2))
        b = dump(write_report, analytic_report(Params(4, 2)), report(4, 2))
        assert a == b


def sweep_rows(spec):
    buf = io.StringIO()
    run_sweep(spec, buf)
    assert "\r" not in buf.getvalue()
    return list(csv.reader(io.StringIO(buf.getvalue())))


class TestSweep:
    def test_clustering_grid(self):
        rows = sweep_rows(SweepSpec((4, 20, 2), (1, 6), "clustering"))
        assert rows[0] == ["n", "k", "clustering"]
        assert len(rows) == 55
        assert all(r[2] == "1" for r in rows[1:] if r[1] == "1")

    def test_transitivity_decreasing(self):
        rows = sweep_rows(SweepSpec((4, 4, 1), (1, 5), "transitivity"))
        values = [float(r[2]) for r in rows[1:]]
        assert len(values) == 5
        assert all(a > b for a, b in zip(values, values[1:]))

    def test_clustering_increasing_in_n(self):
        rows = sweep_rows(SweepSpec((4, 20, 2), (3, 3), "clustering"))
        values = [float(r[2]) for r in rows[1:]]
        assert all(a < b for a, b in zip(values, values[1:]))

    def test_gamma_error_marker(self):
        rows = sweep_rows(SweepSpec((2, 3, 1), (1, 1), "gamma_theory"))
        assert rows[1] == ["2", "1", "error"]
        assert float(rows[2][2]) == pytest.approx(2.58496250072, rel=1e-11)

    def test_twelve_significant_digits(self):
        rows = sweep_rows(SweepSpec((3, 3, 1), (2, 2), "clustering"))
        assert rows[1][2] == f"{83 / 135:.12g}" == "0.614814814815"

    def test_integers_stay_integers(self):
        rows = sweep_rows(SweepSpec((4, 4, 1), (3, 3), "size"))
        assert rows[1] == ["4", "3", "174"]

    def test_values_equal_single_point(self):
        spec = SweepSpec((3, 9, 3), (1, 4), "transitivity")
        for p in spec.grid():
            assert sweep_value(p, "transitivity") == analytic.transitivity_closed(p)
        assert sweep_value(Params(5, 3), "diameter") == 5
        assert sweep_value(Params(5, 3), "clustering") == Fraction(analytic.clustering_coefficient_closed(Params(5, 3)))

    @pytest.mark.parametrize(
        "args",
        [((4, 2, 1), (1, 2), "size"), ((4, 6, 0), (1, 2), "size"), ((1, 4, 1), (1, 2), "size"), ((4, 6, 1), (1, 2), "bogus")],
    )
    def test_invalid_spec(self, args):
        with pytest.raises(ValueError):
            SweepSpec(*args)
