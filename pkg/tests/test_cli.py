import json
import subprocess
import sys

import networkx as nx
import pytest

from hermsym.cli import cache_key, main
from hermsym.rootsys import setting


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("HERMSYM_CACHE", str(tmp_path / "cache"))
    return tmp_path / "cache"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate_b3(capsys):
    code, out, _ = run(capsys, "enumerate", "--type", "B", "--rank", "3")
    assert code == 0
    data = json.loads(out)
    assert len(data["elements"]) == 24


def test_enumerate_gorder(capsys):
    code, out, _ = run(capsys, "enumerate", "--type", "C", "--rank", "3", "--order", "gorder")
    assert code == 0 and len(json.loads(out)["elements"]) == 88


def test_enumerate_a2(capsys):
    code, out, _ = run(capsys, "enumerate", "--type", "A", "--rank", "2", "--node", "1")
    assert code == 0
    # W^P has 1 + 1 + 1 elements; the orbit count is 1 + 2 + 3
    elements = json.loads(out)["elements"]
    assert len({tuple(e["v"]) for e in elements}) == 3
    assert len(elements) == 6


def test_bad_node(capsys):
    code, _, err = run(capsys, "enumerate", "--type", "B", "--rank", "3", "--node", "2")
    assert code == 2 and "error" in err


def test_bad_type(capsys):
    code, _, err = run(capsys, "order", "--type", "G", "--rank", "2")
    assert code == 2 and err


def test_gorder_both_agrees_b3(capsys):
    code, out, _ = run(capsys, "order", "--type", "B", "--rank", "3", "--order", "gorder",
                       "--method", "both", "--no-cache")
    data = json.loads(out)
    assert code == 0 and data["agree"] is True and data["diffs"] == []


def test_bruhat_both_agrees(capsys):
    for t, r, n in [("A", 3, 2), ("D", 4, 1), ("C", 3, 3)]:
        code, out, _ = run(capsys, "order", "--type", t, "--rank", str(r), "--node", str(n),
                           "--method", "both")
        assert code == 0 and json.loads(out)["agree"]


def test_hasse_dot_is_acyclic(capsys, tmp_path):
    target = tmp_path / "b3.dot"
    code, _, _ = run(capsys, "hasse", "--type", "B", "--rank", "3", "--order", "gorder",
                     "--method", "oracle", "--format", "dot", "--out", str(target))
    assert code == 0
    text = target.read_text()
    assert text.startswith("digraph")
    g = nx.DiGraph()
    for line in text.splitlines():
        if "->" in line:
            a, b = line.split("->")
            g.add_edge(a.strip(), b.split("[")[0].strip().rstrip(";"))
    assert g.number_of_edges() > 0 and nx.is_directed_acyclic_graph(g)


def test_hasse_json_matches_order(capsys):
    _, out, _ = run(capsys, "hasse", "--type", "A", "--rank", "3", "--node", "2")
    edges = {tuple(e) for e in json.loads(out)["hasse_edges"]}
    _, out, _ = run(capsys, "order", "--type", "A", "--rank", "3", "--node", "2")
    data = json.loads(out)
    assert {tuple(e) for e in data["hasse_edges"]} == edges
    leq = {tuple(e) for e in data["leq"]}
    assert edges <= leq


def test_type_c_closed_gorder_errors(capsys, tmp_path):
    out = tmp_path / "c3.json"
    code, _, err = run(capsys, "order", "--type", "C", "--rank", "3", "--order", "gorder",
                       "--out", str(out))
    assert code == 2 and "no closed form; use oracle" in err
    comps = json.loads((tmp_path / "c3.json.components.json").read_text())
    assert sum(len(c) for c in comps["reduced_form_classes"]) == 88


def test_type_c_oracle_works(capsys):
    code, out, _ = run(capsys, "order", "--type", "C", "--rank", "2", "--order", "gorder",
                       "--method", "oracle")
    assert code == 0 and len(json.loads(out)["elements"]) == 18


def test_locsys_count(capsys):
    code, out, _ = run(capsys, "locsys-count", "--type", "C", "--rank", "3")
    data = json.loads(out)
    assert code == 0 and data["agree"] and data["total"] == 88


def test_check_suites(capsys):
    code, out, _ = run(capsys, "check", "sequences")
    assert code == 0 and out.count("[PASS]") == 2
    code, _, err = run(capsys, "check", "nonsense")
    assert code == 2 and "unknown suite" in err


def test_output_is_byte_stable(capsys):
    argv = ["order", "--type", "B", "--rank", "3", "--order", "gorder", "--no-cache"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_cache_roundtrip(capsys, isolated_cache, monkeypatch):
    argv = ["order", "--type", "D", "--rank", "4", "--node", "1"]
    _, fresh, _ = run(capsys, *argv)
    files = list(isolated_cache.glob("*.json"))
    assert len(files) == 1
    _, cached, _ = run(capsys, *argv)
    assert cached == fresh
    monkeypatch.setenv("HERMSYM_CACHE", "")
    _, uncached, _ = run(capsys, *argv)
    assert uncached == fresh


def test_cache_key_distinguishes_settings():
    a = cache_key(setting("B", 3), "bruhat", "closed")
    b = cache_key(setting("B", 3), "gorder", "closed")
    c = cache_key(setting("C", 3), "bruhat", "closed")
    assert len({a, b, c}) == 3


def test_module_entry_point(tmp_path):
    env = {"HERMSYM_CACHE": "", "PATH": ""}
    proc = subprocess.run([sys.executable, "-m", "hermsym", "enumerate", "--type", "A",
                           "--rank", "3", "--node", "2"], capture_output=True, text=True, env=env)
    assert proc.returncode == 0
    assert len(json.loads(proc.stdout)["elements"]) == 21
