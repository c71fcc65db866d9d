import json

import pytest

from chaingraphs.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_word_bounds(capsys):
    code, out, _ = run(capsys, "word", "bounds", "periodic:01", "--max-len", "4", "--window", "40")
    assert code == 0 and out.split() == ["00", "11"]


def test_graph_prime(capsys):
    code, out, _ = run(capsys, "graph", "prime", "--word", "101")
    assert code == 0 and out.strip() == "prime"
    code, out, _ = run(capsys, "graph", "prime", "--word", "011")
    assert code == 0 and out.strip() == "not prime"


def test_json_is_one_document(capsys):
    code, out, _ = run(capsys, "--json", "graph", "modules", "--word", "100", "--classify")
    doc = json.loads(out)
    assert code == 0
    assert [m["labels"] for m in doc["modules"]] == [[0, 2], [0, 1, 2]]


def test_graph_file_round_trip(capsys, tmp_path):
    run(capsys, "graph", "build", "--word", "1101")
    _, text, _ = run(capsys, "graph", "build", "--word", "1101")
    f = tmp_path / "g.txt"
    f.write_text(text)
    _, key_file, _ = run(capsys, "graph", "canon", "--file", str(f))
    _, key_word, _ = run(capsys, "graph", "canon", "--word", "1101")
    assert key_file == key_word
    _, js, _ = run(capsys, "--json", "graph", "build", "--word", "1101")
    f.write_text(js)
    _, key_json, _ = run(capsys, "graph", "canon", "--file", str(f))
    assert key_json == key_word


def test_embed_count(capsys):
    code, out, _ = run(capsys, "graph", "embed", "--pattern-word", "1", "--host-word", "101", "--all")
    assert code == 0 and out.splitlines()[-1] == "6 embeddings"


def test_realizer_commands(capsys, tmp_path):
    _, text, _ = run(capsys, "realizer", "build", "--word", "10110")
    f = tmp_path / "r.txt"
    f.write_text(text)
    assert run(capsys, "realizer", "verify", "--word", "10110", "--realizer", str(f))[0] == 0
    f.write_text("L: -1 0 1 2 3 4\nM: -1 0 1 2 3 4\n")
    code, out, _ = run(capsys, "realizer", "verify", "--word", "10110", "--realizer", str(f))
    assert code == 1 and "not a realizer" in out
    code, out, _ = run(capsys, "realizer", "perm", "--word", "101")
    assert code == 0 and sorted(out.split()) == ["1", "2", "3", "4"]


def test_age_members(capsys):
    code, out, _ = run(capsys, "age", "members", "periodic:1", "--max-order", "4", "--window", "12")
    assert code == 0 and out.splitlines()[-1] == "11 classes"


def test_age_bounds_json(capsys):
    code, out, _ = run(capsys, "--json", "age", "bounds", "periodic:1", "--max-order", "5", "--window", "30")
    doc = json.loads(out)
    assert code == 0
    assert sorted(b["order"] for b in doc["bounds"]) == [3, 4, 4, 5]
    assert doc["complete_up_to"] == 5


def test_precondition_exit_code(capsys):
    code, _, err = run(capsys, "age", "transfer", "periodic:01", "00", "--window", "40")
    assert code == 2 and "l(mu) + 7" in err


def test_violation_exit_code(capsys):
    code, out, _ = run(capsys, "family", "sweep", "--n-max", "3")
    assert code == 1 and "half_split" in out


def test_budget_exit_code(capsys):
    code, _, err = run(capsys, "graph", "modules", "--word", "0" * 24)
    assert code == 3 and "budget" in err


@pytest.mark.parametrize("argv", [
    ["graph", "prime"],
    ["word", "period", "012"],
    ["nonsense"],
    ["--threads", "0", "word", "runs", "01"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_output_is_deterministic(capsys):
    argv = ["age", "members", "fibonacci", "--max-order", "4", "--window", "60"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_verify_modules(capsys):
    code, out, _ = run(capsys, "verify", "modules", "--max-len", "7")
    assert code == 0
    assert out.splitlines()[0].split()[:3] == ["criterion", "1", "PASS"]
