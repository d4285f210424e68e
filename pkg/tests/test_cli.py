import io
import json

import pytest

from dslpm.cli import fmt, main
from dslpm.graph_core import build_gamma, cycle, parse_graph6, to_edge_list, to_graph6
from dslpm.thresholds import kappa


def run(monkeypatch, capsys, argv, stdin=""):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


class TestSpectrum:
    def test_k4(self, monkeypatch, capsys):
        code, out, _ = run(monkeypatch, capsys, ["spectrum"], "C~\n")
        assert code == 0
        assert out.splitlines()[0] == "eta1 = 6.0"

    def test_star_edgelist_json(self, monkeypatch, capsys):
        code, out, _ = run(monkeypatch, capsys, ["spectrum", "--json"], "4\n0 1\n0 2\n0 3\n")
        data = json.loads(out)
        assert code == 0
        assert fmt(data["eta1"]) == "9.464101615"
        assert len(data["spectrum"]) == 4

    def test_matrix_dump(self, monkeypatch, capsys):
        code, out, _ = run(monkeypatch, capsys, ["spectrum", "--json", "--matrix"], "3\n0 1\n1 2\n")
        assert json.loads(out)["matrix"] == [[3, 1, 2], [1, 2, 1], [2, 1, 3]]

    def test_disconnected(self, monkeypatch, capsys):
        code, _, err = run(monkeypatch, capsys, ["spectrum"], "4\n0 1\n2 3\n")
        assert code == 3
        assert "disconnected" in err

    def test_parse_error(self, monkeypatch, capsys):
        code, _, err = run(monkeypatch, capsys, ["spectrum"], "C~~\n")
        assert code == 2 and "parse error" in err

    def test_file_input(self, tmp_path, monkeypatch, capsys):
        f = tmp_path / "g.txt"
        f.write_text(to_edge_list(cycle(4)))
        code, out, _ = run(monkeypatch, capsys, ["spectrum", "--file", str(f)])
        assert code == 0 and out.startswith("eta1 = 8.0")


class TestThreshold:
    def test_split_branch(self, monkeypatch, capsys):
        code, out, _ = run(monkeypatch, capsys, ["threshold", "--theorem", "1", "--n", "6", "--json"])
        data = json.loads(out)
        assert fmt(data["threshold"]) == "14.89897949"
        assert data["branch"] == "split"

    def test_theta_branch(self, monkeypatch, capsys):
        code, out, _ = run(monkeypatch, capsys, ["threshold", "--n", "4"])
        assert code == 0 and "9.464101615" in out and "theta" in out

    def test_theorem2(self, monkeypatch, capsys):
        code, out, _ = run(monkeypatch, capsys, ["threshold", "--theorem", "2", "--n", "3", "--json"])
        data = json.loads(out)
        assert data["threshold"] == pytest.approx(kappa(3))
        assert data["threshold"] == pytest.approx(21.51, abs=5e-3)
        assert data["extremal_eta1"] < data["threshold"]

    @pytest.mark.parametrize("argv", [["--n", "5"], ["--n", "2"], ["--theorem", "2", "--n", "2"]])
    def test_invalid_n(self, monkeypatch, capsys, argv):
        code, _, _ = run(monkeypatch, capsys, ["threshold", *argv])
        assert code == 2

    def test_csv(self, monkeypatch, capsys):
        code, out, _ = run(monkeypatch, capsys, ["threshold", "--n", "8", "--output", "csv"])
        header, row = out.splitlines()
        assert "threshold" in header.split(",")


class TestCheck:
    def test_c6(self, monkeypatch, capsys):
        code, out, _ = run(monkeypatch, capsys, ["check", "--theorem", "1", "--json"], to_graph6(cycle(6)))
        assert code == 0
        assert json.loads(out)["verdict"] == "consistent"

    def test_gamma21_reported_as_counterexample(self, monkeypatch, capsys):
        g6 = to_graph6(build_gamma(3, 2, 1).graph)
        code, out, _ = run(monkeypatch, capsys, ["check", "--theorem", "2", "--json"], g6)
        assert json.loads(out)["verdict"] == "counterexample"
        assert code == 1

    def test_odd_order(self, monkeypatch, capsys):
        code, _, _ = run(monkeypatch, capsys, ["check", "--theorem", "1"], "3\n0 1\n1 2\n")
        assert code == 2

    def test_not_bipartite(self, monkeypatch, capsys):
        code, _, _ = run(monkeypatch, capsys, ["check", "--theorem", "2"], "6\n0 1\n1 2\n2 0\n2 3\n3 4\n4 5\n")
        assert code == 2

    def test_explicit_bipartition(self, monkeypatch, capsys):
        g6 = to_graph6(build_gamma(3, 2, 1).graph)
        code, out, _ = run(monkeypatch, capsys,
                           ["check", "--theorem", "2", "--bipartition", "explicit",
                            "--left", "0,1,2", "--json"], g6)
        assert json.loads(out)["has_pm"] is False
        code, _, _ = run(monkeypatch, capsys,
                         ["check", "--theorem", "2", "--bipartition", "explicit", "--left", "0,3,4"], g6)
        assert code == 2


class TestExtremal:
    def test_g4_pipe(self, monkeypatch, capsys):
        code, out, _ = run(monkeypatch, capsys, ["extremal", "--family", "g4", "--n", "4"])
        assert code == 0
        g6 = out.strip()
        assert parse_graph6(g6).edge_count() == 3
        code, out, _ = run(monkeypatch, capsys, ["spectrum"], g6)
        assert "9.464101615" in out

    def test_gamma_default_k(self, monkeypatch, capsys):
        code, out, _ = run(monkeypatch, capsys, ["extremal", "--family", "gamma", "--n", "3", "--s", "2"])
        assert parse_graph6(out.strip()) == build_gamma(3, 2, 1).graph

    @pytest.mark.parametrize("argv", [["--family", "g4", "--n", "5"], ["--family", "gamma", "--n", "3"],
                                      ["--family", "g5"]])
    def test_invalid(self, monkeypatch, capsys, argv):
        code, _, _ = run(monkeypatch, capsys, ["extremal", *argv])
        assert code == 2


class TestVerify:
    def test_missing_config(self, monkeypatch, capsys):
        assert run(monkeypatch, capsys, ["verify"])[0] == 2
        assert run(monkeypatch, capsys, ["verify", "--config", "/nonexistent.json"])[0] == 2

    def test_enumeration_cap(self, tmp_path, monkeypatch, capsys):
        f = tmp_path / "c.json"
        f.write_text(json.dumps({"theorem1": {"exhaustive": [8]}}))
        code, _, err = run(monkeypatch, capsys, ["verify", "--config", str(f)])
        assert code == 2 and "config error" in err

    def test_key_value_config(self, tmp_path, monkeypatch, capsys):
        f = tmp_path / "c.cfg"
        f.write_text("seed = 3\ntheorem1.exhaustive = 4\nsharpness.theorem1 = 4, 8\n")
        out_path = tmp_path / "summary.json"
        csv_path = tmp_path / "reports.csv"
        code, _, _ = run(monkeypatch, capsys, ["verify", "--config", str(f), "--workers", "1",
                                               "--out", str(out_path), "--csv", str(csv_path)])
        summary = json.loads(out_path.read_text())
        assert code == 0
        assert summary["graphs_checked"] == 38 and summary["passed"]
        assert len(csv_path.read_text().splitlines()) == 39

    def test_theorem2_campaign_exits_1(self, tmp_path, monkeypatch, capsys):
        f = tmp_path / "c.json"
        f.write_text(json.dumps({"theorem2": {"exhaustive": [3]}}))
        code, out, _ = run(monkeypatch, capsys, ["verify", "--config", str(f), "--workers", "1"])
        assert code == 1
        assert json.loads(out)["counterexamples"]

    def test_bundled_quick(self, monkeypatch, capsys):
        code, out, _ = run(monkeypatch, capsys, ["verify", "--config", "quick.json", "--workers", "1"])
        data = json.loads(out)
        assert data["graphs_checked"] > 0
        assert code == (0 if data["passed"] else 1)


def test_no_subcommand():
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2


@pytest.mark.parametrize("x,s", [(6.0, "6.0"), (9.464101615137754, "9.464101615"), (1e-20, "1e-20")])
def test_fmt(x, s):
    assert fmt(x) == s
