import io
import json
import subprocess
import sys

import pytest

from kosnet.cli import main
from kosnet.pipeline import OUTPUT_FILES

from helpers import KOS, PAPER, author


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


@pytest.fixture
def inputs(f1_paths):
    return ["--data", str(f1_paths["data"]), "--kos", str(f1_paths["kos"])]


def test_pipeline_writes_files(inputs, tmp_path):
    code, _ = run(["pipeline", *inputs, "--output-dir", str(tmp_path)])
    assert code == 0
    for name in OUTPUT_FILES:
        assert (tmp_path / name).is_file()
    report = json.loads((tmp_path / "report.json").read_text())
    assert report["catalog"]["papers"] == 8
    assert report["warnings"] == {"countries.author_without_org": 1, "data.unknown_predicate": 1,
                                  "orgs.author_without_org": 1}
    assert report["resolution"] == {"keywords": 15, "resolved": 14, "unresolved": 1, "ambiguous": 0}


def test_pipeline_output_dir_from_env(inputs, tmp_path, monkeypatch):
    monkeypatch.setenv("KOSNET_OUTPUT_DIR", str(tmp_path / "env"))
    assert run(["pipeline", *inputs])[0] == 0
    assert (tmp_path / "env" / "report.json").is_file()


def test_pipeline_without_output_dir(inputs, monkeypatch, capsys):
    monkeypatch.delenv("KOSNET_OUTPUT_DIR", raising=False)
    assert run(["pipeline", *inputs])[0] == 1
    assert "output directory" in capsys.readouterr().err


def test_missing_data_flag(f1_paths, capsys):
    code, _ = run(["pipeline", "--kos", str(f1_paths["kos"])])
    assert code == 1
    err = capsys.readouterr().err
    assert "usage:" in err and "--data is required" in err


def test_no_subcommand_and_bad_choice(capsys):
    assert run([])[0] == 1
    assert run(["graph", "--level", "galaxy"])[0] == 1
    assert "usage:" in capsys.readouterr().err


def test_malformed_data_exit_2(tmp_path, f1_paths, capsys):
    bad = tmp_path / "bad.nt"
    bad.write_text('<urn:p1> <urn:q> "x"\n', encoding="utf-8")
    code, _ = run(["validate", "--data", str(bad), "--kos", str(f1_paths["kos"])])
    assert code == 2
    err = capsys.readouterr().err.strip().splitlines()
    assert len(err) == 1 and "line 1" in err[0]


def test_integrity_error_exit_3(tmp_path, f1_paths, capsys):
    bad = tmp_path / "dangling.nt"
    bad.write_text("<urn:p1> <http://kosnet.dev/s#type> <http://kosnet.dev/s#Paper> .\n"
                   "<urn:p1> <http://kosnet.dev/s#hasAuthor> <urn:a9> .\n", encoding="utf-8")
    code, _ = run(["validate", "--data", str(bad), "--kos", str(f1_paths["kos"])])
    assert code == 3
    assert "urn:a9" in capsys.readouterr().err


def test_unknown_topic_exit_3(inputs):
    assert run(["communities", *inputs, "--topic", KOS + "Nope"])[0] == 3


def test_unreadable_config_exit_1(inputs, tmp_path):
    assert run(["validate", *inputs, "--config", str(tmp_path / "none.cfg")])[0] == 1


def test_invalid_weights_exit_1(inputs):
    assert run(["recommend", *inputs, "--w-related", "5"])[0] == 1


def test_validate(inputs):
    code, out = run(["validate", *inputs])
    assert code == 0
    assert out.startswith("ok: 8 papers, 10 authors, 3 orgs, 11 concepts\n")
    assert "warning: data.unknown_predicate x1" in out


def test_graph_levels(inputs):
    code, out = run(["graph", *inputs, "--level", "country", "--format", "json"])
    assert code == 0 and json.loads(out) == {"edges": [{"a": "EC", "b": "ES", "w": 3}], "nodes": ["EC", "ES"]}
    code, out = run(["graph", *inputs, "--level", "org"])
    assert code == 0 and out.startswith("graph G {")


def test_communities_variants(inputs):
    _, out = run(["communities", *inputs])
    comps = json.loads(out)["communities"]
    assert len(comps) == 2
    _, out = run(["communities", *inputs, "--algorithm", "labelprop"])
    lp = json.loads(out)
    assert lp["converged"] is True
    _, out = run(["communities", *inputs, "--topic", KOS + "Education"])
    assert author(5) in json.loads(out)["members"]


def test_recommend_flags(inputs):
    _, out = run(["recommend", *inputs, "--top", "3", "--min-score", "0.1"])
    recs = json.loads(out)
    assert len(recs) == 3 and all(r["score"] >= 0.1 for r in recs)
    assert run(["recommend", *inputs, "--top", "0"])[1] == "[]\n"


def test_config_file_overridden_by_flags(inputs, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("top_k = 2\nmin_score = 0.0\n", encoding="utf-8")
    _, out = run(["recommend", *inputs, "--config", str(cfg)])
    assert len(json.loads(out)) == 2
    _, out = run(["recommend", *inputs, "--config", str(cfg), "--top", "4"])
    assert len(json.loads(out)) == 4


def test_query_subcommands(inputs):
    _, out = run(["query", "area", KOS + "Education", *inputs])
    assert PAPER + "p3" in json.loads(out)["papers"]
    _, out = run(["query", "authors", PAPER + "p3", "--data", inputs[1]])
    assert json.loads(out) == [{"author": author(4), "keywords": ["OCW"]},
                               {"author": author(5), "keywords": ["OCW"]}]
    _, out = run(["query", "tops", "OCW", "blockchain", "--kos", inputs[3]])
    assert json.loads(out) == [{"keyword": "OCW", "tops": [KOS + "Education"]},
                               {"keyword": "blockchain", "tops": []}]
    assert run(["query", "authors", PAPER + "p99", "--data", inputs[1]])[0] == 3
    _, out = run(["query", "area", KOS + "Education", "--compose", *inputs])
    assert len(json.loads(out)["authors"]) == 10


def test_console_entry_point(inputs):
    proc = subprocess.run([sys.executable, "-m", "kosnet.cli", "validate", *inputs],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("ok:")
