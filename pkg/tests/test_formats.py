import json
import random

import pytest

from mcsearch.formats import ParseError, emit_results, parse_mol, parse_native, serialize_native
from mcsearch.solver import SolveConfig, solve

from conftest import k2, random_graph

from test_solver import check_edge_witness, check_vertex_witness


class TestNative:
    def test_minimal_k2(self):
        text = "graph pair 2\nv 0 C\nv 1 N\ne 0 1 2\n"
        (g,) = parse_native(text)
        assert g.name == "pair"
        assert g.n == 2
        assert g.edge_label(0, 1) == "2"

    def test_comments_ignored(self):
        text = "# header\ngraph g 1\n# mid\nv 0 C\n"
        (g,) = parse_native(text)
        assert g.n == 1

    def test_unknown_vertex_reports_line(self):
        text = "graph g 2\nv 0 C\nv 1 C\ne 0 7 1\n"
        with pytest.raises(ParseError) as info:
            parse_native(text)
        assert info.value.lineno == 4

    def test_duplicate_edge_rejected(self):
        text = "graph g 2\nv 0 C\nv 1 C\ne 0 1 1\ne 1 0 1\n"
        with pytest.raises(ParseError):
            parse_native(text)

    def test_vertex_count_mismatch(self):
        text = "graph g 3\nv 0 C\nv 1 C\n"
        with pytest.raises(ParseError):
            parse_native(text)

    def test_two_graphs_blank_separated(self):
        text = "graph a 1\nv 0 C\n\ngraph b 2\nv 0 C\nv 1 C\ne 0 1 1\n"
        graphs = parse_native(text)
        assert [g.name for g in graphs] == ["a", "b"]

    def test_round_trip_model_identity(self, rng):
        for _ in range(200):
            g = random_graph(rng, max_n=8)
            (back,) = parse_native(serialize_native([g]))
            assert back.n == g.n
            assert back.vertex_labels == g.vertex_labels
            assert back.edge_labels == g.edge_labels

    def test_serialize_is_stable(self, rng):
        graphs = [random_graph(rng, max_n=6) for _ in range(3)]
        once = serialize_native(graphs)
        assert serialize_native(parse_native(once)) == once


MOL = """\
mol1
  test

  3  2  0  0  0  0  0  0  0  0999 V2000
    0.0000    0.0000    0.0000 C   0  0  0  0  0  0  0  0  0  0  0  0
    0.0000    0.0000    0.0000 C   0  0  0  0  0  0  0  0  0  0  0  0
    0.0000    0.0000    0.0000 O   0  0  0  0  0  0  0  0  0  0  0  0
  1  2  1  0  0  0  0
  2  3  1  0  0  0  0
M  END
"""

MOL_WITH_H = """\
mol2
  test

  4  3  0  0  0  0  0  0  0  0999 V2000
    0.0000    0.0000    0.0000 C   0  0  0  0  0  0  0  0  0  0  0  0
    0.0000    0.0000    0.0000 C   0  0  0  0  0  0  0  0  0  0  0  0
    0.0000    0.0000    0.0000 O   0  0  0  0  0  0  0  0  0  0  0  0
    0.0000    0.0000    0.0000 H   0  0  0  0  0  0  0  0  0  0  0  0
  1  2  1  0  0  0  0
  2  3  1  0  0  0  0
  1  4  1  0  0  0  0
M  END
"""


class TestMol:
    def test_basic_path(self):
        g = parse_mol(MOL)
        assert g.n == 3
        assert g.vertex_labels == ("C", "C", "O")
        assert g.edge_label(0, 1) == "1"
        assert g.edge_label(1, 2) == "1"

    def test_hydrogen_stripping(self):
        g = parse_mol(MOL_WITH_H, strip_hydrogens=True)
        ref = parse_mol(MOL)
        assert g.n == ref.n
        assert g.vertex_labels == ref.vertex_labels
        assert g.edge_labels == ref.edge_labels

    def test_out_of_range_bond(self):
        bad = MOL.replace("  2  3  1", "  2  9  1")
        with pytest.raises(ParseError):
            parse_mol(bad)

    def test_bad_counts_line(self):
        bad = MOL.replace("  3  2  0", "  x  2  0")
        with pytest.raises(ParseError):
            parse_mol(bad)


class TestEmitResults:
    def test_empty_results(self):
        doc = json.loads(emit_results([], "json", mode="mvcs",
                                      connected=False, labeled=True))
        assert doc["size"] == 0
        assert doc["classes"] == []

    def test_witness_maps_present_and_revalidate(self, rng):
        graphs = [random_graph(rng, max_n=5) for _ in range(2)]
        cfg = SolveConfig(mode="mvcs", ordering="input")
        results = solve(graphs, cfg)
        doc = json.loads(emit_results(results, "json", mode="mvcs",
                                      connected=False, labeled=True))
        assert doc["size"] == results[0].size
        for cls in doc["classes"]:
            (rep,) = parse_native(cls["subgraph"])
            assert len(cls["witnesses"]) == 2
            for g, wit in zip(graphs, cls["witnesses"]):
                mapping = {int(k): v for k, v in wit.items()}
                check_vertex_witness(rep, g, mapping)

    def test_mecs_witnesses_revalidate(self, rng):
        graphs = [random_graph(rng, max_n=5, max_edges=6) for _ in range(2)]
        cfg = SolveConfig(mode="mecs", ordering="input")
        results = solve(graphs, cfg)
        doc = json.loads(emit_results(results, "json", mode="mecs",
                                      connected=False, labeled=True))
        for cls in doc["classes"]:
            (rep,) = parse_native(cls["subgraph"])
            for g, wit in zip(graphs, cls["witnesses"]):
                emap = {}
                for key, val in wit.items():
                    a, b = (int(x) for x in key.split("-"))
                    x, y = (int(x) for x in val.split("-"))
                    emap[(a, b)] = (x, y)
                check_edge_witness(rep, g, emap)

    def test_text_mode_summary(self):
        results = solve([k2(), k2()], SolveConfig(mode="mvcs",
                                                  ordering="input",
                                                  labeled=False))
        text = emit_results(results, "text", mode="mvcs", connected=False,
                            labeled=False)
        assert "maximum size: 2" in text
        assert "class 1:" in text

    def test_stable_field_order(self, rng):
        graphs = [random_graph(rng, max_n=4) for _ in range(2)]
        results = solve(graphs, SolveConfig(mode="mvcs", ordering="input"))
        a = emit_results(results, "json", mode="mvcs", connected=False,
                         labeled=True)
        b = emit_results(results, "json", mode="mvcs", connected=False,
                         labeled=True)
        assert a == b
        assert a.index('"mode"') < a.index('"size"') < a.index('"classes"')
