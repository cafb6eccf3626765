"""End-to-end checks of the command-line tool and its JSON reports."""

import json
import os
import subprocess
from pathlib import Path

import jsonschema
import pytest

CLI = os.environ.get("LEAFPOW_CLI", "leafpow")
SCHEMA = json.loads(Path(os.environ["LEAFPOW_SCHEMA"]).read_text())

P3 = "n 3\na\nb\nc\na b\nb c\n"


def run(*args, expect=0):
    proc = subprocess.run([CLI, *map(str, args)], capture_output=True, text=True)
    assert proc.returncode == expect, proc.stderr + proc.stdout
    return proc


def report(*args, expect=0):
    proc = run(*args, "--json", expect=expect)
    data = json.loads(proc.stdout)
    jsonschema.validate(data, SCHEMA)
    assert data["schema"] == "v1"
    assert data["exit_code"] == expect
    return data


@pytest.fixture
def p3(tmp_path):
    path = tmp_path / "p3.g"
    path.write_text(P3)
    return path


def test_p3_is_not_a_2_leaf_power(p3):
    data = report("recognize", "--graph", p3, "--k", 2, expect=1)
    assert data["verdict"] == "NoRoot"
    assert "witness_tree" not in data
    assert data["inputs"][0]["digest"] == run_digest(P3)


def edge_list(path):
    lines = path.read_text().splitlines()
    n = int(lines[0].split()[1])
    return set(lines[1 : n + 1]), {frozenset(line.split()) for line in lines[n + 1 :]}


def run_digest(text):
    h = 0xCBF29CE484222325
    for byte in text.encode():
        h ^= byte
        h = (h * 0x100000001B3) % (1 << 64)
    return f"{h:016x}"


def test_p3_is_a_3_leaf_power_with_emitted_root(p3, tmp_path):
    out = tmp_path / "root.t"
    data = report("recognize", "--graph", p3, "--k", 3, "--emit-root", out)
    assert data["verdict"] == "Root"
    assert out.read_text().strip() == data["witness_tree"]
    assert data["artifacts"] == [{"role": "root", "path": str(out)}]
    verify = report("tree", "verify", "--graph", p3, "--tree", out, "--k", 3)
    assert verify["verdict"] == "Verified"


def test_top_gadget_emits_seven_vertices(tmp_path):
    g = tmp_path / "top5.g"
    t = tmp_path / "ttop5.t"
    data = report("gadget", "--kind", "top", "--k", 5, "--graph-out", g, "--tree-out", t)
    assert data["vertices"] == 7 and data["edges"] == 15
    assert data["anchors"]["t"] == "v3"
    assert data["root_verified"] is True
    assert g.read_text().startswith("n 7\n")
    run("tree", "verify", "--graph", g, "--tree", t, "--k", 5)
    run("tree", "verify", "--graph", g, "--tree", t, "--k", 4, expect=1)


def test_emitted_files_round_trip(tmp_path):
    g = tmp_path / "h.g"
    t = tmp_path / "h.t"
    run("assemble", "--k", 5, "--n", 1, "--minus", "bot", "--root", "--graph-out", g, "--tree-out", t)
    power = tmp_path / "power.g"
    run("tree", "power", "--tree", t, "--k", 5, "--graph-out", power)
    assert edge_list(power) == edge_list(g)
    text = run("gadget", "--kind", "interior", "--k", 6, "--root", "R").stdout
    assert "z1" in text and text.rstrip().endswith(")")


def test_dot_input_is_detected(tmp_path):
    dot = tmp_path / "h0.dot"
    run("assemble", "--k", 5, "--n", 0, "--dot", "--graph-out", dot)
    assert dot.read_text().startswith("graph G {")
    data = report("check", "--strongly-chordal", dot)
    assert data["verdict"] == "strongly-chordal"
    assert len(data["ordering"]) == 10


def test_check_reports_non_chordal(tmp_path):
    c4 = tmp_path / "c4.g"
    c4.write_text("n 4\na\nb\nc\nd\na b\nb c\nc d\na d\n")
    assert report("check", "--chordal", c4, expect=1)["verdict"] == "not-chordal"


def test_constraints_and_linear_mode(tmp_path):
    g = tmp_path / "bot.g"
    run("gadget", "--kind", "bot", "--k", 5, "--graph-out", g)
    data = report("recognize", "--graph", g, "--k", 5, "--pin", "b,v2=5", expect=1)
    assert data["verdict"] == "NoRoot"
    data = report("recognize", "--graph", g, "--k", 5, "--min-dist", "b>=4", "--linear")
    assert data["verdict"] == "Root" and data["linear"] is True


def test_extract_min_certificate(tmp_path):
    h0 = tmp_path / "h0.g"
    out = tmp_path / "sub.g"
    run("assemble", "--k", 5, "--n", 0, "--graph-out", h0)
    data = report("extract-min", "--graph", h0, "--k", 5, "--out", out)
    cert = data["certificate"]
    assert data["verdict"] == "Certificate" and cert["verified"]
    assert cert["self_check"] == "NoRoot"
    assert len(cert["deletions"]) == len(cert["vertices"])
    assert all(row["verdict"] == "Root" for row in cert["deletions"])
    assert any(v.startswith("Top.") for v in cert["vertices"])
    assert any(v.startswith("Bot.") for v in cert["vertices"])
    assert out.read_text() == cert["subgraph"]


def test_extract_min_on_a_leaf_power(p3):
    assert report("extract-min", "--graph", p3, "--k", 3, expect=1)["verdict"] == "InputIsLeafPower"


def test_budget_exhaustion_exit_code(tmp_path):
    h0 = tmp_path / "h0.g"
    run("assemble", "--k", 5, "--n", 0, "--graph-out", h0)
    data = report("recognize", "--graph", h0, "--k", 5, "--node-budget", 3, expect=3)
    assert data["verdict"] == "BudgetExceeded"
    data = report("extract-min", "--graph", h0, "--k", 5, "--node-budget", 3, expect=3)
    assert data["error"]["code"] == "BudgetExceeded"


def test_tree_dist(tmp_path):
    t = tmp_path / "bot.t"
    t.write_text("(b:2,v1:3,v2:2,v3:3)\n")
    data = report("tree", "dist", "--tree", t)
    assert data["labels"] == ["b", "v1", "v2", "v3"]
    assert data["matrix"][0] == [0, 5, 4, 5]
    assert data["four_point"] is True and data["parity"] is True
    assert run("tree", "dist", "--tree", t, "--pair", "v1,v3").stdout.strip() == "6"


@pytest.mark.parametrize(
    "args",
    [
        [],
        ["gadget", "--kind", "nope", "--k", 5],
        ["gadget", "--kind", "bot", "--k", 5, "--root", "R"],
        ["assemble", "--k", 5, "--n", 1, "--root"],
        ["recognize", "--k", 3],
        ["recognize", "--graph", "/nonexistent.g", "--k", 3],
        ["gadget", "--kind", "top", "--k", 3],
    ],
)
def test_usage_and_input_errors_exit_2(args):
    proc = run(*args, expect=2)
    assert proc.stderr


def test_errors_still_produce_valid_reports(p3):
    data = report("recognize", "--graph", p3, "--k", 1, expect=2)
    assert data["verdict"] == "Error"
    assert data["error"]["code"] == "KTooSmall"
