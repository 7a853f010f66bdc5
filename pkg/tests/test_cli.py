import io
import json
import os
import subprocess
import sys

import pytest

from gcluster.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_roots_listing():
    code, out = run("roots", "--type", "A2")
    assert code == 0 and sorted(out.split()) == ["a1", "a1+a2", "a2"]
    code, out = run("roots", "--type", "A2", "--d", "2")
    assert code == 0 and len(out.split()) == 8
    code, out = run("roots", "--type", "A2", "--almost-positive", "--format", "json")
    assert len(json.loads(out)) == 5


def test_parse_errors_exit_2():
    assert run("roots", "--type", "Q9")[0] == 2
    assert run("compat", "--type", "A2", "--d", "2", "a1:3", "a1:1")[0] == 2
    assert run("complex", "--type", "A3", "--orientation", "1>5")[0] == 2
    assert run("complex", "--type", "B2", "--predicate", "categorical")[0] == 2
    assert run("verify", "--type", "A2", "--d", "0")[0] == 2
    assert run()[0] == 2


def test_compat_reports():
    code, out = run("compat", "--type", "A2", "--d", "2", "a1:1", "a1:2", "--oracle", "--categorical")
    assert code == 0
    assert "reduction: incompatible" in out and "all methods agree" in out
    code, out = run("compat", "--type", "A2", "--d", "2", "-a1:1", "a2:2", "--oracle", "--categorical")
    assert code == 0 and "reduction: compatible" in out and "degree: 0" in out
    code, out = run("compat", "--type", "A2", "--d", "1", "a1:1", "a1:1")
    assert code == 0 and "reduction: compatible" in out
    code, out = run("compat", "--type", "G2", "--d", "2", "a1", "a2:2", "--categorical")
    assert code == 0 and "skipped" in out


def test_compat_mismatch_exit_3(monkeypatch):
    import gcluster.cli as cli
    monkeypatch.setattr(cli, "is_compatible_colored_oracle", lambda *a: False)
    code, out = run("compat", "--type", "A2", "--d", "1", "a1", "a1", "--oracle")
    assert code == 3 and "MISMATCH" in out


def test_complex_outputs():
    code, out = run("complex", "--type", "A2", "--d", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["facet_count"] == 12 and data["fuss_catalan"] == 12
    code, out = run("complex", "--type", "D4", "--d", "1", "--format", "text")
    assert "facet_count: 50" in out and "fuss_catalan: 50" in out
    code, out = run("complex", "--type", "A3", "--d", "2", "--predicate", "categorical",
                    "--orientation", "alternating", "--format", "json")
    assert json.loads(out)["facet_count"] == 55
    code, out = run("complex", "--type", "A3", "--d", "1", "--predicate", "categorical",
                    "--orientation", "1>2,2>3", "--format", "dot")
    assert code == 0 and out.startswith("graph")


def test_vertex_cap_exit_4():
    assert run("complex", "--type", "E8", "--d", "4")[0] == 4
    assert run("complex", "--type", "A3", "--d", "2", "--vertex-cap", "10")[0] == 4


def test_complex_to_file(tmp_path):
    target = tmp_path / "a2.json"
    code, out = run("complex", "--type", "A2", "--format", "json", "-o", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["facet_count"] == 5


def test_verify():
    code, out = run("verify", "--type", "A2", "--d", "2")
    assert code == 0 and "FAIL" not in out
    code, out = run("verify", "--type", "B2", "--d", "2")
    assert code == 0 and "SKIP  indecomposable count" in out and "PASS  purity" in out
    code, out = run("verify", "--type", "A3", "--d", "1")
    assert code == 0 and "all 2" in out
    code, out = run("verify", "--type", "A2", "--d", "2", "--all")
    assert code == 0 and "d=1" in out and "d=2" in out


def test_verify_failure_exit_1(monkeypatch):
    import gcluster.cli as cli
    from gcluster.verify import Check
    monkeypatch.setattr(cli, "run_verify", lambda *a, **k: [(1, Check("x", "fail", "boom"))])
    assert run("verify", "--type", "A2")[0] == 1


def test_hom_table():
    code, out = run("hom-table", "--type", "A2", "--d", "1")
    data = json.loads(out)
    assert code == 0 and len(data["objects"]) == 5
    assert all(data["matrix"][i][i] == 1 for i in range(5))


@pytest.mark.parametrize("argv", [
    ["complex", "--type", "A3", "--d", "2", "--format", "json"],
    ["verify", "--type", "A2", "--d", "2"],
    ["roots", "--type", "D4", "--d", "3"],
])
def test_output_is_deterministic_across_processes(argv):
    outs = {subprocess.run([sys.executable, "-m", "gcluster", *argv], capture_output=True,
                           text=True, check=True,
                           env={**os.environ, "PYTHONHASHSEED": seed}).stdout
            for seed in ("1", "2")}
    assert len(outs) == 1
