import json
import subprocess
import sys

import pytest

from pathsmt.cli import main

PI1 = '{"chain":["21","1"],"a":["1/2"]}'
PI2 = '{"chain":["121",""],"a":["1/2"]}'


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_paths_enum_json(capsys):
    code, out, _ = run(capsys, "paths", "enum", "--type", "A2", "--weight", "2,2", "--json")
    assert code == 0
    paths = json.loads(out)
    assert len(paths) == 27
    assert {"lambda": [2, 2], "chain": ["21", "1"], "a": ["1/2"]} in paths


def test_paths_weight(capsys):
    assert run(capsys, "paths", "weight", "--type", "A2", "--weight", "2,2", "--path", PI1)[:2] == (0, "0,0")


def test_paths_validate(capsys):
    code, out, _ = run(capsys, "paths", "validate", "--type", "A2", "--weight", "2,2", "--path", PI1)
    assert code == 0 and out.startswith("valid")
    bad = '{"chain":["121",""],"a":["1/3"]}'
    code, _, err = run(capsys, "paths", "validate", "--type", "A2", "--weight", "1,1", "--path", bad)
    assert code == 2 and "segment 1" in err


def test_paths_rootop_and_string(capsys):
    top = '{"chain":[""]}'
    code, out, _ = run(capsys, "paths", "rootop", "--type", "A2", "--weight", "2,2", "--path", top,
                       "--ops", "2,2,1,1")
    assert (code, out) == (0, "(21, 1; 1/2)")
    code, out, _ = run(capsys, "paths", "rootop", "--type", "A2", "--weight", "2,2", "--path", top,
                       "--op", "e", "--index", "1")
    assert (code, out) == (0, "none")
    code, out, _ = run(capsys, "paths", "string", "--type", "A2", "--weight", "2,2", "--path", PI1,
                       "--directions", "2,1,2")
    assert (code, out) == (0, "2,2,0")


def test_char_commands(capsys):
    code, out, _ = run(capsys, "char", "compare", "--type", "A2", "--weight", "2,2")
    assert code == 0 and out.splitlines()[-1].startswith("MATCH, dimension 27")
    code, out, _ = run(capsys, "char", "compare", "--type", "A2", "--weight", "0,0")
    assert code == 0 and "MATCH, dimension 1" in out
    code, out, _ = run(capsys, "char", "demazure", "--type", "A2", "--weight", "1,0", "--tau", "1", "--json")
    data = json.loads(out)
    assert code == 0 and data["verdict"] == "MATCH" and data["weights"] == 2


def test_smt_commands(capsys):
    assert run(capsys, "smt", "count", "--type", "A2", "--shapes", "1,0:1,0")[:2] == (0, "6")
    code, out, _ = run(capsys, "smt", "compatible", "--type", "A2", "--weight", "2,2", "--path", PI2)
    assert code == 0 and json.loads(out)["word"] == "121"
    code, out, _ = run(capsys, "smt", "compatible", "--type", "A3", "--weight", "1,0,1",
                       "--path", '{"chain":["231","31"],"a":["1/2"]}', "--json")
    assert (code, out) == (0, "null")
    code, out, _ = run(capsys, "smt", "compatible", "--type", "A2", "--weight", "2,2", "--path", PI1,
                       "--word", "212")
    assert (code, out) == (0, "false")


def test_smt_tuple_commands(capsys):
    good = '[{"lambda":[1,0],"chain":["21"]},{"lambda":[0,1],"chain":[""]}]'
    bad = '[{"lambda":[1,0],"chain":[""]},{"lambda":[0,1],"chain":["12"]}]'
    assert run(capsys, "smt", "standard", "--type", "A2", "--tuple", good)[:2] == (0, "true")
    assert run(capsys, "smt", "standard", "--type", "A2", "--tuple", bad)[:2] == (0, "false")
    code, out, _ = run(capsys, "smt", "chain", "--type", "A2", "--tuple", good, "--json")
    assert (code, json.loads(out)) == (0, ["21", ""])


def test_a2_commands(capsys):
    assert run(capsys, "a2", "pathvector", "--m", "2", "--path", PI1)[:2] == (0, "c^2 + c d")
    code, out, _ = run(capsys, "a2", "transition", "--m", "1", "--json")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 8 and all(len(r["entries"]) == 1 for r in rows)
    code, out, _ = run(capsys, "a2", "example11", "--l", "1", "--m", "1", "--n", "1", "--json")
    data = json.loads(out)
    assert data["product"] == "a c" and data["shapes"] == [[1, 0], [1, 0]]


def test_a2_transition_table_m2(capsys):
    code, out, _ = run(capsys, "a2", "transition", "--m", "2")
    lines = [" ".join(line.split()) for line in out.splitlines()]
    assert "p[(21, 1; 1/2)] = b[(121, id; 1/2)] + b[(21, 1; 1/2)]" in lines
    assert "p[(121, id; 1/2)] = b[(121, id; 1/2)]" in lines
    assert "p[(12, 2; 1/2)] = b[(12, 2; 1/2)] + b[(121, id; 1/2)]" in lines


@pytest.mark.parametrize("argv", [
    ["a2", "pathvector", "--type", "B2", "--m", "2", "--path", PI1],
    ["paths", "weight", "--type", "A2", "--weight", "2,2", "--path", "{not json"],
    ["paths", "weight", "--type", "A2", "--weight", "-1,2", "--path", PI1],
    ["paths", "enum", "--type", "Q7", "--weight", "1"],
    ["smt", "count", "--type", "A2"],
    ["smt", "compatible", "--type", "A2", "--weight", "2,2", "--path", PI2, "--word", "12"],
])
def test_malformed_input_exits_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_unknown_flag_rejected(capsys):
    assert main(["paths", "enum", "--bogus"]) == 2
    assert main(["paths", "weight", "--type", "A2", "--weight=-1,2", "--path", PI1]) == 2


def test_output_is_deterministic(capsys):
    first = run(capsys, "paths", "enum", "--type", "B2", "--weight", "1,1", "--json")
    second = run(capsys, "paths", "enum", "--type", "B2", "--weight", "1,1", "--json")
    assert first == second


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pathsmt", "smt", "count", "--type", "A2",
                           "--shapes", "1,0:0,1"], capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == "8"
