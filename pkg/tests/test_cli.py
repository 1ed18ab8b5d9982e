import json
import subprocess
import sys

from quivergrass.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


def test_classify(capsys):
    assert run(capsys, "classify", "K2") == (0, "Affine Ã1, delta=(1,1)", "")
    assert run(capsys, "classify", "A2")[1] == "Dynkin A2"
    assert run(capsys, "classify", "E~8")[1] == "Affine Ẽ8, delta=(1,2,3,4,5,6,4,2;3)"
    code, out, _ = run(capsys, "classify", "E~8", "--format", "json")
    assert json.loads(out)["delta"] == [1, 2, 3, 4, 5, 6, 4, 2, 3]


def test_classify_from_file(capsys, tmp_path):
    f = tmp_path / "q.json"
    f.write_text(json.dumps({"vertices": [1, 2], "arrows": [{"id": "a", "from": 1, "to": 2}]}))
    assert run(capsys, "classify", str(f))[1] == "Dynkin A2"
    assert run(capsys, "classify", str(tmp_path / "missing.json"))[0] == 4
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"vertices": [1], "arrows": [{"id": "a", "from": 1, "to": 1}]}))
    assert run(capsys, "classify", str(bad))[0] == 2


def test_catalog_hom_ext_tau(capsys):
    code, out, _ = run(capsys, "catalog", "A2", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 3
    assert run(capsys, "hom", "A2", "preproj:k=0,i=1", "preproj:k=0,i=1")[1] == "1"
    assert run(capsys, "ext", "A2", "simple:i=1", "simple:i=2")[1] == "1"
    code, out, _ = run(capsys, "tau", "A2", "simple:i=1", "--format", "json")
    assert json.loads(out)["dims"] == {"1": 0, "2": 1}
    assert run(capsys, "tau", "A2", "preproj:k=0,i=1")[0] == 2


def test_count(capsys):
    assert run(capsys, "count", "K2", "preproj:k=0,i=1", "--e", "0,1", "--mode", "both")[1] == \
        "q + 1; verified at 2,3,5"
    assert run(capsys, "count", "K2", "preproj:k=0,i=1", "--e", "3,1")[:2] == (0, "0; verified at 2,3,5")
    code, _, err = run(capsys, "count", "K2", "preproj:k=3,i=1", "--e", "3,3", "--mode", "brute",
                       "--budget", "10")
    assert code == 3 and "BudgetExceeded" in err
    code, out, _ = run(capsys, "count", "K2", "preproj:k=1,i=2", "--e", "1,2", "--format", "json")
    res = json.loads(out)
    assert set(res) >= {"module", "e", "polynomial", "plan", "checks"}
    assert res["checks"]["bruteforce"] == {"2": 3, "3": 4, "5": 6}


def test_count_inline_rep(capsys):
    rep = json.dumps({"dims": {"1": 1, "2": 1}, "matrices": {"a": [[1]], "b": [[1]]}})
    assert run(capsys, "count", "K2", rep, "--e", "1,1")[:2] == (0, "1; verified at 2,3,5")


def test_cluster_and_cc(capsys):
    code, out, _ = run(capsys, "cluster", "A2", "simple:i=2", "simple:i=1")
    assert code == 0 and out.endswith("multiplication formula VERIFIED")
    code, out, _ = run(capsys, "cc", "A2", "preproj:k=0,i=1", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 3
    assert run(capsys, "cluster", "K2", "simple:i=2", "simple:i=1")[0] == 2


def test_determinism(capsys):
    a = run(capsys, "count", "A~2", "preproj:k=1,i=1", "--e", "1,1,1", "--format", "json", "--seed", "4")
    b = run(capsys, "count", "A~2", "preproj:k=1,i=1", "--e", "1,1,1", "--format", "json", "--seed", "4")
    assert a == b and a[0] == 0


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "quivergrass.cli", "classify", "K2"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip() == "Affine Ã1, delta=(1,1)"
