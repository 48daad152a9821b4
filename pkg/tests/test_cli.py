import json
import os
import subprocess
import sys

import pytest

from alexspace.cli import main
from alexspace.files import map_from_doc, space_from_doc, ParseError

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
SAMPLES = os.path.join(ROOT, "samples")
Z4 = os.path.join(ROOT, "src", "alexspace", "data", "groups", "z4.json")


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_sierpinski(capsys, tmp_path):
    f = write(tmp_path, "s.json", {"n": 2, "basis": [[0], [0, 1]]})
    code, out, _ = run(capsys, "analyze", f, "--json")
    rep = json.loads(out)
    assert code == 0
    assert rep["uniformizable"] is False and rep["counterexample"] == [1, 0] and rep["witness"] is None


def test_analyze_discrete(capsys, tmp_path):
    f = write(tmp_path, "d.json", {"n": 3, "basis": [[0], [1], [2]]})
    rep = json.loads(run(capsys, "analyze", f, "--json")[1])
    assert rep["uniformizable"] and rep["generating_map"] == [0, 1, 2]


def test_analyze_blocks_from_opens(capsys):
    code, out, _ = run(capsys, "analyze", os.path.join(SAMPLES, "blocks.json"), "--json")
    rep = json.loads(out)
    assert code == 0 and rep["uniformizable"] and rep["generating_map"] == [1, 0, 2]
    assert rep["witness"] == [[0, 1], [2]] and rep["quotient"]["discrete"]


def test_analyze_oracle_bound(capsys, tmp_path):
    f = write(tmp_path, "d.json", {"n": 3, "basis": [[0], [1], [2]]})
    rep = json.loads(run(capsys, "analyze", f, "--json", "--oracle-bound", "2")[1])
    assert rep["pseudometric"] is None


def test_analyze_human_output(capsys, tmp_path):
    f = write(tmp_path, "s.json", {"n": 2, "basis": [[0], [0, 1]]})
    code, out, _ = run(capsys, "analyze", f)
    assert code == 0 and "counterexample: [1, 0]" in out


def test_fmap_identity(capsys, tmp_path):
    f = write(tmp_path, "m.json", {"n": 4, "f": [0, 1, 2, 3]})
    code, out, _ = run(capsys, "fmap", f, "--json")
    rep = json.loads(out)
    assert code == 0 and rep["per_equals_X"] and rep["uniformizable"] and rep["periodic"] == [0, 1, 2, 3]


def test_fmap_tail(capsys):
    code, out, _ = run(capsys, "fmap", os.path.join(SAMPLES, "chain3_map.json"), "--json")
    rep = json.loads(out)
    assert rep["periodic"] == [2] and rep["uniformizable"] is False and rep["theorem80_agree"]


def test_fmap_family(capsys):
    code, out, _ = run(capsys, "fmap", os.path.join(SAMPLES, "kprimal2.json"), "--json")
    rep = json.loads(out)
    assert code == 0 and rep["k"] == 2 and rep["basis"] == [[0, 1], [1]] and rep["uniformizable"] is False


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--n", "3")
    assert code == 0 and "29" in out and "uniformizable               5" in out
    rep = json.loads(run(capsys, "count", "--n", "3", "--json")[1])
    assert rep["uniformizable_count"] == 5 and rep["total_topologies"] == 29


def test_count_needs_long_run(capsys):
    code, _, err = run(capsys, "count", "--n", "6")
    assert code == 2 and "long_run" in err
    code, out, _ = run(capsys, "count", "--n", "6", "--long-run", "--json")
    assert code == 0 and json.loads(out)["uniformizable_count"] == 203


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "salam80", "--n", "4")
    assert code == 0 and "pass" in out
    rep = json.loads(run(capsys, "verify", "--theorem", "salam30", "--n", "3", "--json")[1])
    assert rep == {"theorem": "salam30", "n": 3, "passed": True, "instances": 29, "counterexample": None}


def test_verify_usage_errors(capsys):
    with pytest.raises(SystemExit) as e:
        main(["verify", "--theorem", "bogus", "--n", "3"])
    assert e.value.code == 2
    assert run(capsys, "verify", "--theorem", "salam80", "--n", "9")[0] == 2


def test_group(capsys):
    code, out, _ = run(capsys, "group", "--cayley", Z4, "--subgroup", "0,2", "--json")
    rep = json.loads(out)
    assert code == 0
    assert rep["zahra10"]["agree"] and rep["zahra20"]["functional_alexandroff"]
    assert rep["decomposition"]["block_reps"] == [0, 1]


def test_group_bad_subgroup(capsys):
    code, _, err = run(capsys, "group", "--cayley", Z4, "--subgroup", "0,1")
    assert code == 2 and "not a subgroup" in err


def test_dot(capsys):
    code, out, _ = run(capsys, "dot", os.path.join(SAMPLES, "sierpinski.json"))
    assert code == 0 and "0 -> 1;" in out


def test_parse_errors_name_location(capsys, tmp_path):
    p = tmp_path / "broken.json"
    p.write_text('{"n": 2,\n "basis": [[0], [0 1]]}')
    code, _, err = run(capsys, "analyze", str(p))
    assert code == 2 and "line 2" in err
    f = write(tmp_path, "b.json", {"n": 2, "basis": [[0], [0, 5]]})
    assert "basis[1][1]" in run(capsys, "analyze", f)[2]
    f = write(tmp_path, "c.json", {"n": 2, "basis": [[0], [1]], "opens": []})
    assert "exactly one" in run(capsys, "analyze", f)[2]
    f = write(tmp_path, "m.json", {"n": 2, "f": [0, 3]})
    code, _, err = run(capsys, "fmap", f)
    assert code == 2 and "outside" in err


def test_schema_round_trip():
    sp, labels = space_from_doc({"n": 3, "basis": [[0], [0, 1], [2]], "labels": ["a", "b", "c"]})
    assert space_from_doc(sp.to_json())[0] == sp and labels[1] == "b"
    m = map_from_doc({"n": 3, "f": [1, 2, 2]})
    assert map_from_doc(m.to_json()) == m
    with pytest.raises(ParseError):
        map_from_doc({"n": 2, "f": [0, 1], "maps": []})


def test_json_identical_across_thread_counts():
    outs = []
    for threads in ("1", "4"):
        env = dict(os.environ, ALEX_THREADS=threads)
        outs.append(subprocess.run(
            [sys.executable, "-m", "alexspace", "count", "--n", "5", "--json"],
            capture_output=True, env=env, check=True).stdout)
    assert outs[0] == outs[1]


def test_verify_counterexample_exit_code(capsys, monkeypatch):
    from alexspace import enumeration
    from alexspace.enumeration import TheoremReport

    def failing(n, long_run, workers):
        return TheoremReport("salam70", n, False, 1, {"partition": [[0]]})

    monkeypatch.setitem(enumeration.THEOREMS, "salam70", (failing, 6, 10))
    code, out, _ = run(capsys, "verify", "--theorem", "salam70", "--n", "1")
    assert code == 1 and "FAIL" in out
