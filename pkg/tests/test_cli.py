import io
import json
import random
import subprocess
import sys
from fractions import Fraction

import pytest

from neutralgraph.assortativity import stats
from neutralgraph.cli import main
from neutralgraph.formats import edge_list_emit, graph6_decode, graph6_encode
from neutralgraph.generators import cycle, random_connected


def run(argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdout, sys.stderr, sys.stdin
    sys.stdout, sys.stderr = out, err
    if stdin is not None:
        sys.stdin = io.StringIO(stdin)
    try:
        code = main(argv)
    finally:
        sys.stdout, sys.stderr, sys.stdin = old
    return code, out.getvalue(), err.getvalue()


def _fields(text):
    return dict(line.split(" ", 1) for line in text.strip().splitlines())


def test_gen_family():
    code, out, _ = run(["gen", "--family", "cycle", "4"])
    assert code == 0 and out == "4 4\n0 1\n0 3\n1 2\n2 3\n"
    code, out, _ = run(["gen", "--family", "spider", "2", "2", "2", "--format", "g6"])
    assert graph6_decode(out).order == 7


def test_gen_neutral():
    code, out, _ = run(["gen", "--neutral-tree", "9", "--json"])
    doc = json.loads(out)
    assert code == 0 and doc["classification"] == "neutral" and doc["graph"]["order"] == 9
    code, out, _ = run(["gen", "--neutral-nontree", "13", "--format", "g6"])
    g = graph6_decode(out)
    assert code == 0 and g.order == 13 and g.size >= 13 and stats(g).N == 0


@pytest.mark.parametrize("argv", [["gen", "--neutral-tree", "6"], ["gen", "--neutral-nontree", "12"], ["gen", "--family", "cycle", "2"]])
def test_gen_errors(argv):
    code, out, err = run(argv)
    assert code == 2 and out == "" and err.startswith("error:")


def test_check_text():
    code, out, _ = run(["check", "-"], stdin="Bw\n")
    f = _fields(out)
    assert code == 0
    assert f["graph6"] == "Bw" and f["N"] == "0" and f["D"] == "0"
    assert f["r"] == "undefined" and f["classification"] == "undefined-regular"
    code, out, _ = run(["check"], stdin="4 3\n0 1\n1 2\n2 3\n")
    assert _fields(out)["r"].startswith("-1/2 ")


def test_check_file_json(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("Ez]?\nCF\n")
    code, out, _ = run(["check", str(p), "--json"])
    docs = json.loads(out)
    assert code == 0 and [d["classification"] for d in docs] == ["neutral", "disassortative"]


def test_check_errors(tmp_path):
    assert run(["check", str(tmp_path / "missing")])[0] == 2
    code, _, err = run(["check"], stdin="3 2\n0 1\n0 1\n")
    assert code == 2 and "line 3" in err


def test_check_random_agrees_with_fraction():
    rng = random.Random(11)
    for _ in range(500):
        g = random_connected(rng.randint(2, 10), rng)
        code, out, _ = run(["check"], stdin=edge_list_emit(g))
        f = _fields(out)
        st = stats(g)
        assert code == 0 and int(f["N"]) == st.N and int(f["D"]) == st.D
        if st.D:
            assert Fraction(f["r"].split()[0]) == Fraction(st.N, st.D)


@pytest.mark.parametrize(
    "op,extra,order,size",
    [("subdivide", ["--s", "2"], 9, 9), ("sed", ["--edge", "1", "2"], 4, 4), ("triangle", [], 6, 9), ("leafconnect", [], 9, 12), ("ominus", [], 6, 12)],
)
def test_transform(op, extra, order, size):
    code, out, _ = run(["transform", "--op", op, *extra, "--format", "g6", "-"], stdin="Bw\n")
    g = graph6_decode(out)
    assert code == 0 and (g.order, g.size) == (order, size)


def test_transform_json_and_error():
    code, out, _ = run(["transform", "--op", "leafconnect", "--json"], stdin="Bw\n")
    assert json.loads(out)["classification"] == "neutral"
    assert run(["transform", "--op", "sed", "--edge", "0", "5"], stdin="Bw\n")[0] == 2


def test_enumerate():
    code, out, _ = run(["enumerate", "--order", "6"])
    assert code == 0 and out.splitlines() == ["180 neutral graphs (1 up to isomorphism)", "Ez]?"]
    code, out, _ = run(["enumerate", "--order", "5", "--report", "count", "--json"])
    doc = json.loads(out)
    assert doc["count"] == 728 and sum(doc["classification"].values()) == 728
    code, out, _ = run(["enumerate", "--order", "7", "--family", "trees", "--report", "count"])
    assert out.startswith("16807 trees")
    assert run(["enumerate", "--order", "11"])[0] == 2


def test_verify_claims(tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run(["verify-claims", "--claims", "L5,T1", "--out", str(report)])
    assert code == 0 and "L5" in out and "VERIFIED_ON_FAMILY" in out
    assert json.loads(report.read_text())["claims"][0]["claim_id"] == "L5"
    code, out, _ = run(["verify-claims", "--claims", "L6", "--json"])
    assert code == 1 and json.loads(out)["claims"][0]["verdict"] == "COUNTEREXAMPLE_FOUND"
    assert run(["verify-claims", "--claims", "X1"])[0] == 2
    assert run(["verify-claims", "--budget", "0"])[0] == 2


def test_coverage():
    code, out, _ = run(["coverage", "--max-order", "15", "--min-order", "12"])
    lines = out.splitlines()
    assert code == 0 and len(lines) == 4
    assert "BELOW_THRESHOLD" in lines[0] and lines[3].count("CERTIFIED") == 2
    code, out, _ = run(["coverage", "--max-order", "14", "--min-order", "14", "--json"])
    row = json.loads(out)[0]
    assert graph6_decode(row["nontree"]["graph6"]).order == 14


def test_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["gen"])
    assert info.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "neutralgraph", "check", "-"], input=graph6_encode(cycle(5)), capture_output=True, text=True
    )
    assert proc.returncode == 0 and "classification undefined-regular" in proc.stdout
