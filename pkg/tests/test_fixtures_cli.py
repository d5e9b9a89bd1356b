"""Built-in corpus files and the command line surface."""

import json

import pytest

from pcgraph import classify, fixtures, parse_graph, serialize_graph
from pcgraph.cli import (
    EXIT_CAPACITY,
    EXIT_INFEASIBLE,
    EXIT_INPUT,
    EXIT_OK,
    main,
)


@pytest.fixture(scope="module")
def corpus_dir(tmp_path_factory):
    outdir = tmp_path_factory.mktemp("corpus")
    fixtures.write_corpus(outdir)
    return outdir


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestFixtures:
    def test_names_and_levels(self):
        names = fixtures.fixture_names()
        assert len(names) == 9
        for name in names:
            f = fixtures.fixture(name)
            assert classify(f.graph).level == f.level

    def test_unknown_name(self):
        with pytest.raises(KeyError):
            fixtures.fixture("no-such-graph")

    def test_corpus_files_round_trip(self, corpus_dir):
        manifest = json.loads((corpus_dir / "manifest.json").read_text())
        entries = manifest["fixtures"]
        assert len(entries) == 9
        for entry in entries:
            f = fixtures.fixture(entry["name"])
            G = parse_graph((corpus_dir / entry["file"]).read_text())
            assert serialize_graph(G) == serialize_graph(f.graph)
            assert entry["level"] == f.level
            assert entry["n"] == G.n and entry["m"] == G.m and entry["c"] == G.c
            if f.terminals:
                assert tuple(entry["terminals"]) == f.terminals


class TestClassifyCommand:
    def test_single_file(self, capsys, corpus_dir):
        code, doc = run_cli(capsys, "classify", str(corpus_dir / "k3k3.ecg"))
        assert code == EXIT_OK
        assert doc["result"]["level"] == 1
        assert doc["result"]["orderings"]["1"] == [3, 1, 2, 4, 5]
        assert doc["detections"] == {
            "pc_cycle": False,
            "pc_closed_trail": True,
            "pc_closed_walk": True,
        }
        assert doc["input"]["sha256"]
        assert doc["mode"] == "fast"

    def test_batch_is_a_list(self, capsys, corpus_dir):
        code, doc = run_cli(
            capsys,
            "classify",
            str(corpus_dir / "path-br.ecg"),
            str(corpus_dir / "c4-alt.ecg"),
        )
        assert code == EXIT_OK
        assert [d["result"]["level"] for d in doc] == [5, 0]

    def test_oracle_mode(self, capsys, corpus_dir):
        code, doc = run_cli(
            capsys, "classify", "--oracle", str(corpus_dir / "triangle-2b1r.ecg")
        )
        assert code == EXIT_OK
        assert doc["mode"] == "oracle"
        assert doc["result"]["level"] == 3

    def test_oracle_mode_bounded(self, capsys, tmp_path):
        from pcgraph import build_graph

        big = build_graph(9, [(i, i + 1, 1 + i % 2) for i in range(1, 9)], c=2)
        p = tmp_path / "big.ecg"
        p.write_text(serialize_graph(big))
        code, doc = run_cli(capsys, "classify", "--oracle", str(p))
        assert code == EXIT_CAPACITY
        assert doc["error"]["kind"] == "capacity"

    def test_skipped_level4_exits_capacity(self, capsys, tmp_path):
        from pcgraph import build_graph

        n = 27
        odd = build_graph(n, [(i, i % n + 1, 1) for i in range(1, n + 1)], c=1)
        p = tmp_path / "odd.ecg"
        p.write_text(serialize_graph(odd))
        code, doc = run_cli(capsys, "classify", "--type4-bound", "10", str(p))
        assert code == EXIT_CAPACITY
        assert doc["result"]["level"] is None
        assert doc["result"]["type4_skipped"]

    def test_missing_file(self, capsys):
        code, doc = run_cli(capsys, "classify", "/no/such/file.ecg")
        assert code == EXIT_INPUT
        assert doc["error"]["kind"] == "input"

    def test_malformed_file(self, capsys, tmp_path):
        p = tmp_path / "bad.ecg"
        p.write_text("p ecg 2 1 2\ne 1 2 9\n")
        code, doc = run_cli(capsys, "classify", str(p))
        assert code == EXIT_INPUT
        assert doc["error"]["kind"] == "parse"

    def test_batch_keeps_worst_code(self, capsys, corpus_dir):
        code, doc = run_cli(
            capsys, "classify", str(corpus_dir / "k3k3.ecg"), "/no/such.ecg"
        )
        assert code == EXIT_INPUT
        assert doc[0]["result"]["level"] == 1
        assert doc[1]["error"]["kind"] == "input"


class TestDetectCommand:
    def test_cycle_with_certificate(self, capsys, corpus_dir):
        code, doc = run_cli(capsys, "detect", "cycle", str(corpus_dir / "c4-alt.ecg"))
        assert code == EXIT_OK
        assert doc["found"] is True
        assert len(doc["certificate"]["edges"]) == 4
        assert not doc["certificate_capped"]

    def test_absent_structure(self, capsys, corpus_dir):
        code, doc = run_cli(capsys, "detect", "walk", str(corpus_dir / "fig3.ecg"))
        assert code == EXIT_OK
        assert doc["found"] is False
        assert doc["certificate"] is None

    def test_oracle_mode_decision_only(self, capsys, corpus_dir):
        code, doc = run_cli(
            capsys, "detect", "trail", "--oracle", str(corpus_dir / "k3k3.ecg")
        )
        assert code == EXIT_OK
        assert doc["found"] is True
        assert doc["certificate"] is None
        assert doc["mode"] == "oracle"

    def test_capped_certificate_signals_capacity(self, capsys, tmp_path):
        from pcgraph import build_graph

        n = 18
        G = build_graph(n, [(i, i % n + 1, 1 + (i % 2)) for i in range(1, n + 1)], c=2)
        p = tmp_path / "c18.ecg"
        p.write_text(serialize_graph(G))
        code, doc = run_cli(capsys, "detect", "cycle", str(p))
        assert code == EXIT_CAPACITY
        assert doc["found"] is True
        assert doc["certificate"] is None
        assert doc["certificate_capped"] is True


class TestConnectivityCommand:
    def test_type4_instance(self, capsys, corpus_dir):
        code, doc = run_cli(
            capsys, "connectivity", str(corpus_dir / "path-br.ecg"), "1", "3"
        )
        assert code == EXIT_OK
        assert doc["result"]["s"] == doc["result"]["t"] == 1
        assert doc["result"]["method"] == "flow"
        assert doc["result"]["menger_equal"] is True
        assert doc["notes"] == []

    def test_fallback_on_level3_graph(self, capsys, corpus_dir):
        code, doc = run_cli(
            capsys, "connectivity", str(corpus_dir / "fig3.ecg"), "1", "8"
        )
        assert code == EXIT_OK
        assert doc["result"]["s"] == 2
        assert doc["result"]["t"] == 1
        assert doc["result"]["separator"] == [2, 4]
        assert doc["result"]["menger_equal"] is False
        assert doc["result"]["method"] == "brute"
        assert doc["notes"] and "fell back" in doc["notes"][0]

    def test_oracle_mode(self, capsys, corpus_dir):
        code, doc = run_cli(
            capsys, "connectivity", "--oracle", str(corpus_dir / "fig3.ecg"), "1", "8"
        )
        assert code == EXIT_OK
        assert doc["result"]["method"] == "brute"

    def test_adjacent_terminals(self, capsys, corpus_dir):
        code, doc = run_cli(
            capsys, "connectivity", str(corpus_dir / "path-br.ecg"), "1", "2"
        )
        assert code == EXIT_INFEASIBLE
        assert doc["error"]["kind"] == "infeasible"


class TestReduceCommand:
    def test_digraph(self, capsys, tmp_path):
        src = tmp_path / "d.dig"
        src.write_text("p dig 2 2\na 1 2\na 2 1\n")
        out = tmp_path / "image"
        code, doc = run_cli(capsys, "reduce", "digraph", str(src), "--out", str(out))
        assert code == EXIT_OK
        img = parse_graph((tmp_path / "image.ecg").read_text())
        assert img.n == 4 and img.m == 4
        meta = json.loads((tmp_path / "image.map.json").read_text())
        assert meta["kind"] == "digraph"
        assert doc["image"] == {"n": 4, "m": 4, "c": 2}

    def test_extend_needs_sizes(self, capsys, tmp_path, corpus_dir):
        out = tmp_path / "img"
        code, doc = run_cli(
            capsys, "reduce", "extend", str(corpus_dir / "path-br.ecg"),
            "--out", str(out),
        )
        assert code == EXIT_INPUT
        code, doc = run_cli(
            capsys, "reduce", "extend", str(corpus_dir / "path-br.ecg"),
            "--out", str(out), "--sizes", "2",
        )
        assert code == EXIT_OK
        assert doc["image"]["n"] == 6

    def test_split_with_keep(self, capsys, tmp_path, corpus_dir):
        out = tmp_path / "split"
        code, doc = run_cli(
            capsys, "reduce", "split", str(corpus_dir / "path-br.ecg"),
            "--out", str(out), "--keep", "1,3",
        )
        assert code == EXIT_OK
        meta = json.loads((tmp_path / "split.map.json").read_text())
        assert meta["kept"] == {"1": 1, "3": 5}

    def test_rbpm_and_betweenness(self, capsys, tmp_path):
        src = tmp_path / "m.rbpm"
        src.write_text("p rbpm 2 2 1\ne 1 1\ne 2 2\ns 1 2\n")
        code, doc = run_cli(
            capsys, "reduce", "rbpm", str(src), "--out", str(tmp_path / "r")
        )
        assert code == EXIT_OK
        assert doc["image"]["n"] == 8

        src = tmp_path / "b.btw"
        src.write_text("p btw 3 1\nt 1 2 3\n")
        code, doc = run_cli(
            capsys, "reduce", "betweenness", str(src), "--out", str(tmp_path / "bt")
        )
        assert code == EXIT_OK
        assert doc["image"]["n"] == 7

    def test_fvs_and_bipartization(self, capsys, tmp_path):
        src = tmp_path / "d.dig"
        src.write_text("p dig 2 2\na 1 2\na 2 1\n")
        code, doc = run_cli(
            capsys, "reduce", "fvs", str(src), "--out", str(tmp_path / "f")
        )
        assert code == EXIT_OK
        assert doc["image"]["n"] == 4

        src = tmp_path / "g.graph"
        src.write_text("p graph 3 3\ne 1 2\ne 2 3\ne 1 3\n")
        code, doc = run_cli(
            capsys, "reduce", "bipartization", str(src), "--out", str(tmp_path / "bp")
        )
        assert code == EXIT_OK
        assert doc["image"] == {"n": 3, "m": 3, "c": 2}

    def test_vertex_cover(self, capsys, tmp_path):
        src = tmp_path / "g.graph"
        src.write_text("p graph 2 1\ne 1 2\n")
        code, doc = run_cli(
            capsys, "reduce", "vertex-cover", str(src), "--out", str(tmp_path / "vc")
        )
        assert code == EXIT_OK
        assert doc["image"]["n"] == 4


class TestOtherCommands:
    def test_fixtures_command(self, capsys, tmp_path):
        code, doc = run_cli(capsys, "fixtures", str(tmp_path / "corpus"))
        assert code == EXIT_OK
        assert len(doc["written"]) == 9
        assert (tmp_path / "corpus" / "manifest.json").exists()

    def test_oracle_check(self, capsys):
        code, doc = run_cli(
            capsys, "oracle-check", "--random", "15", "--seed", "7", "--n-max", "5"
        )
        assert code == EXIT_OK
        assert doc["ok"] is True
        assert doc["disagreements"] == []
        assert doc["instances"] == 15

    def test_json_out_duplicate(self, capsys, tmp_path, corpus_dir):
        dup = tmp_path / "report.json"
        code, doc = run_cli(
            capsys,
            "--json-out",
            str(dup),
            "classify",
            str(corpus_dir / "k3k3.ecg"),
        )
        assert code == EXIT_OK
        assert json.loads(dup.read_text()) == doc
