import json

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boolcomb.cli import main
from boolcomb.errors import MalformedInput
from boolcomb.gformats import (
    edgelist_text_to_graph,
    emit_graph,
    graph6_to_graph,
    graph_to_edgelist_text,
    graph_to_graph6,
    parse_graph,
)
from boolcomb.graphs import Graph

from conftest import random_graph


class TestGraph6:
    def test_k1_and_k2(self):
        assert graph_to_graph6(Graph.complete(1)) == "@"
        assert graph_to_graph6(Graph.complete(2)) == "A_"

    def test_against_reference_encoder(self, rng):
        for _ in range(150):
            n = rng.randint(0, 20)
            g = random_graph(n, rng.random(), rng)
            mine = graph_to_graph6(g)
            ref_graph = nx.Graph()
            ref_graph.add_nodes_from(range(n))
            ref_graph.add_edges_from(g.edges())
            ref = nx.to_graph6_bytes(ref_graph, header=False).decode().strip()
            assert mine == ref

    @settings(max_examples=150, deadline=None)
    @given(st.integers(0, 20), st.randoms())
    def test_roundtrip_property(self, n, rnd):
        mask = rnd.getrandbits(n * (n - 1) // 2) if n > 1 else 0
        g = Graph.from_edge_mask(n, mask)
        assert graph6_to_graph(graph_to_graph6(g)).rows == g.rows

    def test_roundtrip_1000_random_graphs(self, rng):
        for _ in range(1000):
            g = random_graph(rng.randint(0, 20), rng.random(), rng)
            assert graph6_to_graph(graph_to_graph6(g)).rows == g.rows

    def test_malformed_inputs_carry_offsets(self):
        with pytest.raises(MalformedInput) as exc:
            graph6_to_graph("")
        assert exc.value.offset == 0
        with pytest.raises(MalformedInput):
            graph6_to_graph("~??")  # long form marker
        with pytest.raises(MalformedInput) as exc:
            graph6_to_graph("D" + chr(200) + "?")
        assert exc.value.offset == 1
        with pytest.raises(MalformedInput):
            graph6_to_graph("D?")  # too short for n = 5


class TestEdgeList:
    def test_roundtrip_and_sorted_output(self, rng):
        g = random_graph(9, 0.5, rng)
        text = graph_to_edgelist_text(g)
        lines = text.strip().splitlines()
        assert lines[0] == f"9 {g.edge_count}"
        pairs = [tuple(map(int, ln.split())) for ln in lines[1:]]
        assert pairs == sorted(pairs)
        assert edgelist_text_to_graph(text).rows == g.rows

    def test_header_mismatch(self):
        with pytest.raises(MalformedInput):
            edgelist_text_to_graph("2 5\n0 1\n")

    def test_parse_emit_dispatch(self):
        g = Graph.cycle(5)
        assert parse_graph(emit_graph(g, "graph6"), "graph6").rows == g.rows
        assert parse_graph(emit_graph(g, "edgelist"), "edgelist").rows == g.rows


class TestCli:
    def test_params_k5(self, capsys):
        code = main(["params", graph_to_graph6(Graph.complete(5))])
        assert code == 0
        data = json.loads(capsys.readouterr().out)
        assert data["omega"] == 5 and data["chi"] == 5 and data["alpha"] == 1

    def test_hnk_22_is_c4(self, capsys):
        assert main(["hnk", "2", "2"]) == 0
        out = capsys.readouterr().out.strip()
        from boolcomb.graphs import is_isomorphic

        assert is_isomorphic(graph6_to_graph(out), Graph.cycle(4))

    def test_combine_fn(self, capsys):
        g6 = graph_to_graph6(Graph.cycle(5))
        k6 = graph_to_graph6(Graph.complete(5))
        assert main(["combine", "--op", "xor", g6, k6]) == 0
        out = capsys.readouterr().out.strip()
        from boolcomb.graphs import complement

        assert graph6_to_graph(out).rows == complement(Graph.cycle(5)).rows

    def test_verify_single_check(self, capsys):
        assert main(["verify", "empty-characterization", "--seed", "7"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload[0]["passed"] is True
        assert payload[0]["seed"] == 7

    def test_verify_unknown_exits_2(self, capsys):
        assert main(["verify", "bogus"]) == 2

    def test_booldim_subcommand(self, capsys):
        target = graph_to_graph6(Graph.cycle(5))
        assert main(["booldim", "--target", target, "--class", "equiv", "--kmax", "2"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data == {"found": False, "exhausted_k": 2}
        assert (
            main(["booldim", "--target", target, "--class", "equiv", "--kmax", "3", "--mode", "xor"])
            == 0
        )
        data = json.loads(capsys.readouterr().out)
        assert data["found"] is True and data["k"] == 3

    def test_decompose_vizing(self, capsys):
        g6 = graph_to_graph6(Graph.cycle(6))
        assert main(["decompose", "--method", "vizing", g6]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["certified"] is True
        assert all(tag == "d1" for _, tag in data["parts"])

    def test_decompose_xornf(self, capsys):
        h1 = graph_to_graph6(Graph.from_edges(4, [(0, 1), (2, 3)]))
        h2 = graph_to_graph6(Graph.from_edges(4, [(1, 2)]))
        assert main(["decompose", "--method", "xornf", "--fn", "2:0xe", "--class", "d1", h1, h2]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["alpha"] == 0
        assert len(data["parts"]) == 3

    def test_decompose_pcseq(self, capsys):
        h1 = graph_to_graph6(Graph.from_edges(4, [(0, 1), (2, 3)]))
        h2 = graph_to_graph6(Graph.from_edges(4, [(1, 2), (0, 3)]))
        assert main(["decompose", "--method", "pcseq", h1, h2]) == 0
        blocks = json.loads(capsys.readouterr().out)
        assert blocks == [[[0, 1], [2, 3]], [[0, 3], [1, 2]]]

    def test_hnk_report(self, capsys):
        assert main(["hnk", "2", "2", "--report"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["omega"] == 2 and data["chi"] == 2
        assert data["chi_is_exact"] is True

    def test_enumerate(self, capsys):
        assert main(["enumerate", "--class", "equiv", "--n", "4"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 15
        assert len(set(lines)) == 15

    def test_label_subcommand(self, capsys):
        g6 = graph_to_graph6(parse_graph("E???", "graph6"))  # empty graph on 6 vertices
        assert main(["label", "--fn", "2:0x6", g6, g6]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["scheme"]["label_bits"] == 8 + 4 + 2 * 3
        assert len(data["labels"]) == 6

    def test_usage_error_exit_2(self):
        assert main(["params"]) == 2

    def test_malformed_graph_exit_2(self, capsys):
        assert main(["params", "~~~~"]) == 2


SCHEMA_DIR = __import__("pathlib").Path(__file__).resolve().parent.parent / "docs" / "schemas"


def _validate(payload, schema_name):
    import jsonschema

    schema = json.loads((SCHEMA_DIR / schema_name).read_text())
    jsonschema.validate(payload, schema)


class TestJsonSchemas:
    def test_params_output_validates(self, capsys):
        main(["params", graph_to_graph6(Graph.cycle(5))])
        _validate(json.loads(capsys.readouterr().out), "params.schema.json")

    def test_verify_output_validates(self, capsys):
        main(["verify", "speed-bound"])
        _validate(json.loads(capsys.readouterr().out), "theorem_check.schema.json")

    def test_booldim_output_validates(self, capsys):
        target = graph_to_graph6(Graph.cycle(5))
        main(["booldim", "--target", target, "--class", "equiv", "--kmax", "2"])
        _validate(json.loads(capsys.readouterr().out), "booldim.schema.json")
        main(["booldim", "--target", target, "--class", "equiv", "--kmax", "3", "--mode", "xor"])
        _validate(json.loads(capsys.readouterr().out), "booldim.schema.json")

    def test_decompose_output_validates(self, capsys):
        main(["decompose", "--method", "twin", graph_to_graph6(Graph.complete_multipartite([2, 2]))])
        _validate(json.loads(capsys.readouterr().out), "decomposition.schema.json")

    def test_label_output_validates(self, capsys):
        g6 = graph_to_graph6(Graph.empty(6))
        main(["label", "--fn", "2:0x6", g6, g6])
        _validate(json.loads(capsys.readouterr().out), "labels.schema.json")


class TestCliContracts:
    def test_failed_check_exits_1(self, capsys, monkeypatch):
        import boolcomb.cli as cli_mod
        from boolcomb.extremal import TheoremCheck

        def fake(theorem_id, seed):
            return TheoremCheck(theorem_id, "forced failure", False, seed, counterexample={})

        monkeypatch.setattr(cli_mod, "verify_theorem", fake)
        assert main(["verify", "speed-bound"]) == 1

    def test_budget_env_override(self, capsys, monkeypatch):
        monkeypatch.setenv("BOOLCOMB_BUDGET", "1")
        target = graph_to_graph6(Graph.cycle(5))
        code = main(["booldim", "--target", target, "--class", "equiv", "--kmax", "2"])
        assert code == 2  # budget of 1 tuple is exceeded immediately
        assert "budget" in capsys.readouterr().err

    def test_verify_deterministic_output(self, capsys):
        main(["verify", "chain-sandwich", "--seed", "3"])
        first = capsys.readouterr().out
        main(["verify", "chain-sandwich", "--seed", "3"])
        assert capsys.readouterr().out == first
