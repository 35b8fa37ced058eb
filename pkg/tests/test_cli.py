import json

import pytest

from chromadisc import parse_graph6
from chromadisc.cli import main

MINI = "Dhc\nIheA@GUAo\nC~\nEFz_\n"


@pytest.fixture
def corpus(tmp_path):
    path = tmp_path / "mini.g6"
    path.write_text(MINI)
    return str(path)


class TestScanCommand:
    def test_exhaustive_ok(self, capsys):
        rc = main(["scan", "--exhaustive", "4", "--checks", "thm1.1,lem5.1"])
        out = capsys.readouterr().out
        assert rc == 0
        assert "graphs: 64" in out
        assert "thm1.1" in out and "lem5.1" in out
        assert "fail=0" in out

    def test_corpus_with_outputs(self, corpus, tmp_path, capsys):
        jpath = tmp_path / "r.json"
        cpath = tmp_path / "r.csv"
        fdir = tmp_path / "figs"
        rc = main(["scan", "--input", corpus, "--checks", "thm1.1,thm1.8",
                   "--out", str(jpath), "--csv", str(cpath),
                   "--figures", str(fdir)])
        assert rc == 0
        blob = json.loads(jpath.read_text())
        assert blob["summary"]["graphs"] == 4
        assert cpath.read_text().count("\n") == 5
        pngs = sorted(p.name for p in fdir.iterdir())
        assert pngs == ["check_verdicts.png", "phi_vs_chi.png"]
        assert "figure:" in capsys.readouterr().out

    def test_unknown_check_is_usage_error(self, corpus, capsys):
        rc = main(["scan", "--input", corpus, "--checks", "noidea"])
        assert rc == 2
        assert "unknown check id" in capsys.readouterr().err

    def test_exhaustive_cap(self, capsys):
        rc = main(["scan", "--exhaustive", "8", "--checks", "thm1.1"])
        assert rc == 2
        assert "between 1 and 7" in capsys.readouterr().err

    def test_missing_file(self, tmp_path, capsys):
        rc = main(["scan", "--input", str(tmp_path / "nope.g6"),
                   "--checks", "thm1.1"])
        assert rc == 2


class TestPhiCommand:
    def test_tsv_columns(self, corpus, capsys):
        rc = main(["phi", "--input", corpus])
        assert rc == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 4
        first = lines[0].split("\t")
        # C5: n=5 chi=3 phi=1 p=3 f=2
        assert first[:6] == ["Dhc", "5", "3", "1", "3", "2"]
        k4 = lines[2].split("\t")
        assert k4[0] == "C~" and k4[3] == "0"

    def test_json_lines(self, corpus, capsys):
        rc = main(["phi", "--input", corpus, "--json"])
        assert rc == 0
        rows = [json.loads(ln) for ln in
                capsys.readouterr().out.strip().splitlines()]
        assert rows[0]["phi"] == 1 and rows[0]["graph6"] == "Dhc"
        assert rows[1]["phi"] == 2  # Petersen
        witness = rows[1]["witness_set"]
        assert rows[1]["p"] - rows[1]["f"] == 2
        assert len(witness) >= 1

    def test_cap_skip_line(self, tmp_path, capsys):
        path = tmp_path / "one.g6"
        path.write_text("IheA@GUAo\n")
        rc = main(["phi", "--input", str(path), "--phi-cap", "9"])
        assert rc == 0
        assert "skipped" in capsys.readouterr().out


class TestBallCommand:
    def test_json_rows_per_center(self, tmp_path, capsys):
        path = tmp_path / "p.g6"
        path.write_text("IheA@GUAo\n")
        rc = main(["ball", "--ell", "3", "--input", str(path)])
        assert rc == 0
        rows = [json.loads(ln) for ln in
                capsys.readouterr().out.strip().splitlines()]
        assert len(rows) == 10
        assert {r["center"] for r in rows} == set(range(10))
        for r in rows:
            assert sum(1 for c in r["colors"] if c is not None) == 4

    def test_single_center_and_out_file(self, tmp_path):
        path = tmp_path / "p.g6"
        path.write_text("IheA@GUAo\n")
        sink = tmp_path / "balls.jsonl"
        rc = main(["ball", "--ell", "3", "--input", str(path),
                   "--center", "2", "--out", str(sink)])
        assert rc == 0
        rows = [json.loads(ln) for ln in sink.read_text().splitlines()]
        assert len(rows) == 1 and rows[0]["center"] == 2

    def test_forbidden_cycle_reported_not_fatal(self, tmp_path, capsys):
        path = tmp_path / "sq.g6"
        path.write_text("Cl\nDhc\n")  # C4 then C5
        rc = main(["ball", "--ell", "3", "--input", str(path)])
        assert rc == 0
        rows = [json.loads(ln) for ln in
                capsys.readouterr().out.strip().splitlines()]
        assert "error" in rows[0] and rows[0]["cycle"]
        # the C4 refusal is one row; C5 then yields one row per centre
        assert len(rows) == 6


class TestGenCommand:
    def test_mycielski_stdout(self, capsys):
        rc = main(["gen", "mycielski", "--k", "4"])
        assert rc == 0
        line = capsys.readouterr().out.strip()
        assert line == "JkLTAQGK?N_"
        assert parse_graph6(line).n == 11

    def test_mycielski_json(self, capsys):
        rc = main(["gen", "mycielski", "--k", "3", "--json"])
        assert rc == 0
        blob = json.loads(capsys.readouterr().out)
        assert blob["n"] == 5 and len(blob["classes"]) == 3

    def test_generalized_with_files(self, tmp_path, capsys):
        gpath = tmp_path / "g.g6"
        cpath = tmp_path / "c.json"
        rc = main(["gen", "generalized", "--k", "4", "--s", "3",
                   "--out", str(gpath), "--colors", str(cpath)])
        assert rc == 0
        assert gpath.read_text().strip() == "Fzj?w"
        classes = json.loads(cpath.read_text())["classes"]
        assert classes == [[0], [1], [2, 6], [3, 4, 5]]

    def test_bad_parameters_are_usage_errors(self, capsys):
        assert main(["gen", "mycielski", "--k", "1"]) == 2
        assert main(["gen", "generalized", "--k", "2", "--s", "3"]) == 2


class TestHuntCommand:
    def test_hunt_with_outputs(self, tmp_path, capsys):
        jpath = tmp_path / "h.json"
        fdir = tmp_path / "figs"
        rc = main(["hunt", "--ell", "4", "--budget", "10", "--seed", "5",
                   "--out", str(jpath), "--figures", str(fdir)])
        assert rc == 0
        blob = json.loads(jpath.read_text())
        assert blob["accepted"] == 10
        assert (fdir / "hunt_margins.png").exists()
        assert "accepted 10/" in capsys.readouterr().out

    def test_bad_ell_usage_error(self, capsys):
        assert main(["hunt", "--ell", "2"]) == 2
