import json
import re

import pytest

import gkcrystal
from src.cli import EXIT_MISMATCH, EXIT_OK, EXIT_PARSE, EXIT_USAGE
from src.cli import commands as commands_mod
from src.crystal.strings import bzl_path
from src.crystal.tableaux import parse_tableau
from src.models.series import MatchReport, Mismatch, UPoly, VerificationReport
from src.crystal.libs.graph_helpers import coefficient_label
from tests.support import RANK2_TOP_EDGES, RANK2_TOP_SEG, RANK2_TOP_TABLEAUX

NODE = re.compile(r'^\s*n(\d+) \[label="([^"]*)"(.*)\];$')
EDGE = re.compile(r'^\s*n(\d+) -> n(\d+) \[label="(\d+)"\];$')


def run(capsys, *argv):
    code = gkcrystal.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_dot(text):
    nodes, edges = {}, []
    for line in text.splitlines():
        node = NODE.match(line)
        if node:
            nodes[int(node.group(1))] = (node.group(2), node.group(3))
            continue
        edge = EDGE.match(line)
        if edge:
            edges.append((int(edge.group(1)), int(edge.group(2)), int(edge.group(3))))
    return nodes, edges


def string_label(reduced_text):
    return "".join(str(x) for x in bzl_path(parse_tableau(reduced_text)).flat())


# --- enumerate ---------------------------------------------------------------

def test_enumerate_json_records(capsys):
    code, out, _ = run(capsys, "enumerate", "-r", "2", "-d", "2")
    assert code == EXIT_OK
    records = json.loads(out)
    assert len(records) == 7
    assert records[0] == {
        "tableau": "*/*", "weight": [0, 0], "seg": 0,
        "string": "((0);(0),(0))", "lusztig": "(0;0,0)", "nc": 0, "nz": 0,
    }


def test_enumerate_trivial_rank(capsys):
    code, out, _ = run(capsys, "enumerate", "--rank", "1", "--depth", "0")
    assert code == EXIT_OK
    assert json.loads(out) == [{"tableau": "*", "weight": [0], "seg": 0, "string": "((0))", "lusztig": "(0)", "nc": 0, "nz": 0}]


def test_enumerate_tsv_contains_example_element(capsys):
    code, out, _ = run(capsys, "enumerate", "-r", "2", "-d", "4", "--format", "tsv")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "tableau\tweight\tseg\tstring\tlusztig\tnc\tnz"
    assert len(lines) == 23
    assert "2,3/3\t2,2\t3\t(1;2,1)\t(1;1,1)\t3\t3" in lines


def test_enumerate_is_deterministic(capsys):
    first = run(capsys, "enumerate", "-r", "3", "-d", "3")
    second = run(capsys, "enumerate", "-r", "3", "-d", "3", "--strategy", "direct")
    assert first == second


# --- verify ------------------------------------------------------------------

@pytest.mark.parametrize("rank, depth", [("1", "6"), ("2", "6")])
def test_verify_matches(capsys, rank, depth):
    code, out, _ = run(capsys, "verify", "-r", rank, "-d", depth)
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["status"] == "MATCH"
    assert report["kostant"]["status"] == "MATCH"
    assert set(report["sides"]) == {"tableau", "string", "lusztig", "polytope", "quiver"}


@pytest.mark.slow
def test_verify_rank_three(capsys):
    code, out, _ = run(capsys, "verify", "-r", "3", "-d", "5", "--format", "tsv")
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "MATCH"


def test_verify_mismatch_exit_code(capsys, monkeypatch):
    broken = VerificationReport(
        rank=1, depth=1, strategy="bfs", elements=2,
        sides={"tableau": MatchReport(cap=1, terms_checked=2, mismatches=[
            Mismatch(exponent=(1,), lhs=UPoly(coeffs=(1, -1)), rhs=UPoly()),
        ])},
    )
    monkeypatch.setattr(commands_mod, "verify_all", lambda r, D, strategy: broken)
    code, out, _ = run(capsys, "verify", "-r", "1", "-d", "1", "--format", "tsv")
    assert code == EXIT_MISMATCH
    assert "tableau\t1\t1,-1\t0" in out.splitlines()
    assert out.splitlines()[-1] == "MISMATCH"


def test_verify_writes_ledger(capsys, fresh_settings, tmp_path):
    ledger = tmp_path / "runs.jsonl"
    fresh_settings.setenv("GKCRYSTAL_AUDIT_LOG", str(ledger))
    code, _, _ = run(capsys, "verify", "-r", "2", "-d", "3")
    assert code == EXIT_OK
    entry = json.loads(ledger.read_text(encoding="utf-8").splitlines()[0])
    assert entry["command"] == "verify"
    assert entry["params"] == {"rank": 2, "depth": 3, "strategy": "bfs"}
    assert entry["outcome"]["status"] == "MATCH"
    assert entry["outcome"]["mismatches"] == 0


def test_verify_keeps_exit_code_when_ledger_is_unwritable(capsys, fresh_settings, tmp_path):
    blocker = tmp_path / "blocker"
    blocker.write_text("not a directory", encoding="utf-8")
    fresh_settings.setenv("GKCRYSTAL_AUDIT_LOG", str(blocker / "runs.jsonl"))
    code, out, _ = run(capsys, "verify", "-r", "1", "-d", "2")
    assert code == EXIT_OK
    assert json.loads(out)["status"] == "MATCH"


def test_invalid_environment_is_a_usage_error(capsys, fresh_settings):
    fresh_settings.setenv("GKCRYSTAL_VERIFY_DEPTH", "deep")
    code, out, err = run(capsys, "param", "2,3/3")
    assert code == EXIT_USAGE
    assert out == ""
    assert "engine.verify_depth" in err


# --- graph -------------------------------------------------------------------

def test_graph_reproduces_rank_two_top(capsys):
    code, out, _ = run(capsys, "graph", "-r", "2", "-d", "4")
    assert code == EXIT_OK
    assert out.startswith("digraph")
    nodes, edges = parse_dot(out)
    assert len(nodes) == 22
    assert len(edges) == 26
    labelled = {(string_label(nodes[s][0]), string_label(nodes[t][0]), i) for s, t, i in edges}
    assert labelled == set(RANK2_TOP_EDGES)


def test_graph_coefficients(capsys):
    code, out, _ = run(capsys, "graph", "-r", "2", "-d", "4", "--coefficients")
    assert code == EXIT_OK
    nodes, _ = parse_dot(out)
    labels = {label: extra for label, extra in nodes.values()}
    assert labels["2,3/3\\n(1-u)^3"] == ", seg=3"
    assert labels["*/*\\n1"] == ", seg=0"
    assert labels["3/*\\n(1-u)"] == ", seg=1"


def test_graph_coefficients_cover_every_top_node(capsys):
    code, out, _ = run(capsys, "graph", "-r", "2", "-d", "4", "--coefficients")
    assert code == EXIT_OK
    nodes, _ = parse_dot(out)
    found = {}
    for label, extra in nodes.values():
        tableau, coefficient = label.split("\\n")
        found[tableau] = (coefficient, extra)
    expected = {
        RANK2_TOP_TABLEAUX[node]: (coefficient_label(k), f", seg={k}")
        for node, k in RANK2_TOP_SEG.items()
    }
    assert found == expected


def test_graph_depth_zero(capsys):
    code, out, _ = run(capsys, "graph", "-r", "3", "-d", "0")
    nodes, edges = parse_dot(out)
    assert code == EXIT_OK
    assert len(nodes) == 1 and edges == []


def test_graph_writes_output_file(capsys, tmp_path):
    target = tmp_path / "t.dot"
    code, out, _ = run(capsys, "graph", "-r", "2", "-d", "1", "--output", str(target))
    assert code == EXIT_OK
    assert out == ""
    assert target.read_text(encoding="utf-8").count("->") == 2


# --- param / convert ---------------------------------------------------------

def test_param_example_element(capsys):
    code, out, _ = run(capsys, "param", "2,3/3")
    assert code == EXIT_OK
    record = json.loads(out)
    assert record["string"] == "(1;2,1)"
    assert record["lusztig"] == "(1;1,1)"
    assert record["seg"] == 3
    assert record["quiver"] == "[1,1]×1 [1,2]×1 [2,2]×1"
    assert record["path"] == [[0, 0], [1, 0], [2, 1], [2, 2]]
    assert record["full"] == "1,1,1,2,3/2,3"


def test_param_highest_and_circles(capsys):
    _, out, _ = run(capsys, "param", "*/*")
    record = json.loads(out)
    assert (record["seg"], record["nc"], record["nz"], record["quiver"]) == (0, 0, 0, "")
    _, out, _ = run(capsys, "param", "3/*", "--format", "tsv")
    lines = dict(line.split("\t", 1) for line in out.splitlines())
    assert lines["string"] == "((0);(1),1)"
    assert lines["nc"] == "1"


def test_convert_both_kinds(capsys):
    _, out, _ = run(capsys, "convert", "(1;1,1)")
    assert json.loads(out)["tableau"] == "2,3/3"
    _, out, _ = run(capsys, "convert", "--kind", "string", "(1;2,1)")
    record = json.loads(out)
    assert record["tableau"] == "2,3/3"
    assert record["kind"] == "string"


# --- errors ------------------------------------------------------------------

def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "param", "2,a/3")
    assert code == EXIT_PARSE
    assert "position 2" in err


def test_cone_violation_is_usage_error(capsys):
    code, _, err = run(capsys, "convert", "--kind", "string", "(0;1,2)")
    assert code == EXIT_USAGE
    assert "string cone" in err


@pytest.mark.parametrize("argv", [
    ["verify"],
    ["verify", "-r", "7"],
    ["graph", "-r", "2", "--format", "json"],
    ["enumerate", "-r", "2", "--format", "dot"],
    ["enumerate", "-r", "2", "-d", "-1"],
    ["explore", "-r", "2"],
    [],
])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == EXIT_USAGE
