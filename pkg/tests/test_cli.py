import json

import pytest

from hyperpart.cli import main


@pytest.fixture
def run(capsys, tmp_path):
    def _run(*argv, cache=True):
        argv = list(argv)
        if cache and argv[0] == "count":
            argv += ["--cache-dir", str(tmp_path / "cache")]
        code = main(argv)
        out, err = capsys.readouterr()
        return code, out.strip(), err

    return _run


def test_count_examples(run):
    assert run("count", "--family", "p", "--d", "3", "--n", "6")[:2] == (0, "140")
    assert run("count", "--family", "a", "--d", "1", "--k", "4")[:2] == (0, "14")
    assert run("count", "--family", "b", "--d", "1", "--k", "4")[:2] == (0, "12")
    assert run("count", "--family", "chv", "--d", "3", "--n", "6")[:2] == (0, "141")
    assert run("count", "--family", "cvec", "--d", "2", "--target", "2,2")[:2] == (0, "2")


def test_count_range_csv(run):
    code, out, _ = run("count", "--family", "ptilde", "--d", "1", "--n", "0..4", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "family,d,index,value"
    assert lines[-1] == "ptilde,1,4,12"


def test_series_examples(run):
    assert run("series", "--kind", "macmahon", "--d", "3", "--order", "6")[1] == "1,1,4,10,26,59,141"
    assert run("series", "--kind", "macmahon", "--d", "1", "--order", "6")[1] == "1,1,2,3,5,7,11"
    assert run("series", "--kind", "macmahon", "--d", "2", "--order", "0")[1] == "1"
    code, out, _ = run("series", "--kind", "partitions", "--order", "10", "--format", "json")
    assert json.loads(out)["coefficients"][-1] == "42"


def test_vector_examples(run):
    assert run("vector", "--d", "2", "--diagonal", "2")[1] == "2"
    assert run("vector", "--d", "1", "--diagonal", "5")[1] == "7"
    code, out, _ = run("vector", "--d", "2", "--caps", "2,2")
    grid = [line.split(",") for line in out.splitlines()]
    assert len(grid) == 3 and all(len(r) == 3 for r in grid)
    assert grid[-1][-1] == "2"
    code, out, _ = run("vector", "--d", "2", "--caps", "2,2", "--format", "csv")
    assert out.splitlines()[0] == "n1,n2,value"


def test_bounds_examples(run):
    code, out, _ = run("bounds", "--d", "7")
    assert code == 0 and "1.458311" in out
    code, out, _ = run("bounds", "--d", "3", "--format", "json")
    row = json.loads(out)[0]
    assert round(row["beta"], 4) == 4.0799
    assert abs(row["alpha"] - 1.2797) < 2e-3
    code, out, _ = run("bounds", "--d-range", "1..10", "--format", "csv")
    flags = [line.split(",")[-1] for line in out.splitlines()[1:]]
    assert flags == ["false"] * 6 + ["true"] * 4


def test_verify_exit_codes(run, monkeypatch):
    code, out, _ = run("verify", "--d", "3", "--n-max", "6", "--k-max", "5")
    assert code == 0
    assert out.splitlines()[-1].endswith("0 fail, 0 skipped")

    from hyperpart import bounds

    monkeypatch.setattr(bounds, "b_lower_bound", lambda d, k: 10**9)
    code, out, _ = run("verify", "--d", "2", "--n-max", "3", "--k-max", "3")
    assert code == 1


def test_usage_and_budget_exit_codes(run):
    assert run("count", "--family", "p", "--d", "3")[0] == 64
    assert run("count", "--family", "q", "--d", "3", "--n", "1")[0] == 64
    assert run("count", "--family", "p", "--d", "3", "--n", "x")[0] == 64
    assert run("vector", "--d", "2")[0] == 64
    assert run("count", "--family", "p", "--d", "4", "--n", "12", "--budget", "500",
               "--no-cache", cache=False)[0] == 2


def test_json_output_deterministic(run):
    a = run("count", "--family", "p", "--d", "2", "--n", "0..6", "--format", "json")[1]
    b = run("count", "--family", "p", "--d", "2", "--n", "0..6", "--format", "json")[1]
    assert a == b
    assert json.loads(a)[-1] == {"d": 2, "family": "p", "index": 6, "value": "48"}


def test_cache_warm_equals_cold_and_detects_conflicts(capsys, tmp_path):
    cache = tmp_path / "c"
    args = ["count", "--family", "a", "--d", "2", "--k", "3..7", "--format", "json",
            "--cache-dir", str(cache)]
    assert main(args) == 0
    cold = capsys.readouterr().out
    assert main(args) == 0
    warm = capsys.readouterr().out
    assert cold == warm
    records = [json.loads(x) for x in (cache / "a.jsonl").read_text().splitlines()]
    assert len(records) == 5
    assert set(records[0]) == {"kind", "d", "index", "value", "engine_version", "created_at"}

    # corrupt one record: a recomputation must refuse to overwrite it
    lines = (cache / "a.jsonl").read_text().splitlines()
    bad = json.loads(lines[-1])
    bad["value"] = "1"
    lines[-1] = json.dumps(bad)
    (cache / "a.jsonl").write_text("\n".join(lines) + "\n")
    assert main(args + ["--recompute"]) == 1
    assert "cache conflict" in capsys.readouterr().err


def test_env_cache_dir(monkeypatch, tmp_path, capsys):
    monkeypatch.setenv("HYPERPART_CACHE_DIR", str(tmp_path / "env"))
    assert main(["count", "--family", "b", "--d", "2", "--k", "5"]) == 0
    assert (tmp_path / "env" / "b.jsonl").exists()
