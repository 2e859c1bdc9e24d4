from __future__ import annotations

import json

import pytest

from yblab import yb
from yblab.cli import main
from yblab.verdict import failed


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    return str(p)


def test_verify_catalog_group(capsys):
    code, out, _ = run(capsys, "verify", "catalog:S3")
    doc = json.loads(out)
    assert code == 0 and doc["ok"] and doc["schema"] == 1
    assert {"ybe", "com", "ide", "mul", "mur"} <= set(doc["checks"])


def test_verify_and_monoid_fails_at_covering(capsys, tmp_path):
    path = write(tmp_path, "and.json", {"table": [[0, 1], [1, 1]]})
    code, out, _ = run(capsys, "verify", path)
    doc = json.loads(out)
    assert code == 1 and not doc["ok"]
    assert doc["checks"]["covering"]["counterexample"] == "({1},{2})"


def test_derive_swap_on_z2(capsys):
    code, out, _ = run(capsys, "derive", "catalog:Z/2")
    doc = json.loads(out)
    assert code == 0 and doc["ok"]
    assert doc["R"]["table"] == [[0, 0], [1, 0], [0, 1], [1, 1]]


def test_derive_names_failing_covering(capsys, tmp_path):
    path = write(tmp_path, "and.json", {"table": [[0, 1], [1, 1]]})
    code, out, _ = run(capsys, "derive", path)
    doc = json.loads(out)
    assert code == 1
    assert doc["error"] == "CoveringNotInvertible" and doc["covering"] == "({1},{2})"


@pytest.mark.parametrize("text", ["{not json", "[1, 2]", '{"table": [[0, 1]]}'])
def test_malformed_input_exits_two(capsys, tmp_path, text):
    code, _, err = run(capsys, "verify", write(tmp_path, "bad.json", text))
    assert code == 2 and err.startswith("error")


def test_missing_file_and_unknown_catalog(capsys, tmp_path):
    assert run(capsys, "verify", str(tmp_path / "nope.json"))[0] == 2
    assert run(capsys, "verify", "catalog:Z/99")[0] == 2


def test_classify_with_oracle(capsys):
    code, out, _ = run(capsys, "classify", "catalog:Z/3", "--oracle")
    doc = json.loads(out)
    assert code == 0 and doc["oracle"]["equal"]
    assert len(doc["entries"]) == 1


def test_classify_nearly(capsys):
    code, out, _ = run(capsys, "classify", "catalog:Z/4", "--nearly")
    doc = json.loads(out)
    assert code == 0 and all(e["nearly_commutative"] for e in doc["entries"])


def test_classify_output_is_byte_identical_across_threads(capsys):
    _, a, _ = run(capsys, "classify", "catalog:S3", "--threads", "1")
    _, b, _ = run(capsys, "classify", "catalog:S3", "--threads", "4")
    _, c, _ = run(capsys, "classify", "catalog:S3", "--threads", "1")
    assert a == b == c


def test_classify_table_format(capsys):
    code, out, _ = run(capsys, "classify", "catalog:Z/4", "--format", "table")
    assert code == 0 and out.startswith("group Z/4")


def test_trees_factor_merge_swap(capsys, tmp_path):
    f = {"src": {"inner": 2, "t": [0, 1]}, "dst": {"inner": 1, "t": [0, 0]}, "f2": [1, 0], "f1": [0, 0]}
    code, out, _ = run(capsys, "trees", "factor", write(tmp_path, "f.json", f))
    doc = json.loads(out)
    assert code == 0 and doc["recomposes"]
    assert [[g["gen"] for g in layer] for layer in doc["layers"]] == [["MergeSwap"]]


def test_trees_compose_mismatch_exits_two(capsys, tmp_path):
    one = {"inner": 1, "t": [0]}
    two = {"inner": 1, "t": [0, 0]}
    f = {"src": one, "dst": one, "f2": [0], "f1": [0]}
    g = {"src": two, "dst": two, "f2": [0, 1], "f1": [0]}
    assert run(capsys, "trees", "compose", write(tmp_path, "fg.json", {"f": f, "g": g}))[0] == 2


def test_vines_equal_stabilising_pair(capsys, tmp_path):
    doc = {"a": {"braid": [1], "delta": [0, 0], "n": 1}, "b": {"braid": [], "delta": [0, 0], "n": 1}}
    code, out, _ = run(capsys, "trees", "vines-equal", write(tmp_path, "v.json", doc))
    assert code == 0 and json.loads(out)["equal"] is True


def test_hopf_input_passes_all_suites(capsys, tmp_path):
    from yblab import algebras as al
    from yblab import groups as gp

    path = write(tmp_path, "h.json", al.hopf_to_json(al.group_algebra(gp.catalog_group("Z/2"))))
    for suite in ("hopf", "yb", "cosimp"):
        code, out, _ = run(capsys, "verify", path, "--suite", suite)
        assert code == 0 and json.loads(out)["ok"], suite


def test_selftest_quick(capsys):
    code, out, err = run(capsys, "selftest", "--quick")
    doc = json.loads(out)
    assert code == 0 and doc["ok"]
    assert len(doc["criteria"]) == 10
    assert len([line for line in err.splitlines() if line.strip()]) == 10


def test_selftest_catches_broken_braid_check(capsys, monkeypatch):
    monkeypatch.setattr(yb, "check_ybe", lambda R: failed("ybe", detail="mutant"))
    code, out, _ = run(capsys, "selftest", "--quick")
    assert code == 1 and not json.loads(out)["ok"]
