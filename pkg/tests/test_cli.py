import io
import json
import subprocess
import sys
from importlib.resources import files

import pytest

from cubehom.cli import run


def data(name):
    return str(files("cubehom").joinpath("data", f"{name}.pcs.json"))


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_homology_hsq():
    code, out, _ = call("homology", "--input", data("hsq"))
    assert code == 0 and "H_0 = Z^2" in out


def test_chains_hc3():
    code, out, _ = call("chains", "--input", data("hc3"))
    assert code == 0
    assert out.splitlines()[0].startswith("12 cube chains")
    assert "type [1, 1, 1]: 6" in out and "type [1, 2]: 3" in out and "type [2, 1]: 3" in out


def test_chains_json():
    code, out, _ = call("chains", "--input", data("sq"), "--json")
    groups = json.loads(out)
    assert code == 0 and [g["type"] for g in groups] == [[1, 1], [2]]


def test_validate_corrupted():
    code, out, _ = call("validate", "--input", data("sq_corrupted"))
    assert code == 1 and "FAIL" in out and "0,0|0,1" in out


def test_validate_ok():
    code, out, _ = call("validate", "--input", data("annulus"), "--json")
    doc = json.loads(out)
    assert code == 0 and doc["grading"] == [16, 24, 8] and doc["covering_proper"]


def test_generate_round_trip(tmp_path):
    code, out, _ = call("generate", "--grid", '{"extents": [1, 1], "forbidden": []}')
    assert code == 0
    with open(data("sq")) as fh:
        assert out == fh.read()
    spec = tmp_path / "spec.json"
    spec.write_text('{"extents": [3, 3], "forbidden": [[1, 1]]}')
    code, out2, _ = call("generate", "--grid", str(spec))
    with open(data("annulus")) as fh:
        assert out2 == fh.read()


def test_endpoint_override():
    code, out, _ = call("chains", "--input", data("sq"), "--from", "0,0", "--to", "1,0")
    assert code == 0 and out.startswith("1 cube chains")
    code, _, err = call("chains", "--input", data("sq"), "--to", "nowhere")
    assert code == 1 and "not a vertex" in err


def test_invalid_inputs(tmp_path):
    assert call("homology")[0] == 1
    assert call("homology", "--input", str(tmp_path / "missing.json"))[0] == 1
    bad = tmp_path / "bad.json"
    bad.write_text("{\n  oops")
    code, _, err = call("validate", "--input", str(bad))
    assert code == 1 and "line 2" in err
    assert call("homology", "--input", data("sq_corrupted"))[0] == 1
    assert call("generate", "--input", data("sq"))[0] == 1
    assert call("chains", "--input", data("circle"))[0] == 1


def test_budget_exit():
    code, _, err = call("chains", "--input", data("annulus"), "--limit", "10")
    assert code == 2 and "budget" in err


def test_oracle_fixtures():
    for name in ("sq", "hsq", "hc3", "annulus"):
        assert call("oracle", "--input", data(name))[0] == 0
    code, out, _ = call("oracle", "--input", data("circle"), "--max-length", "4")
    assert code == 0


def test_oracle_campaign_json():
    code, out, _ = call("oracle", "--json", "--seed", "7", "--random", "4")
    doc = json.loads(out)
    assert code == 0 and doc["match"] and len(doc["instances"]) == 4


def test_oracle_mismatch_exit(monkeypatch):
    import cubehom.cli as cli
    from cubehom.pipeline import OracleResult

    monkeypatch.setattr(cli, "oracle", lambda *a, **k: OracleResult(False, {}, [], True))
    assert call("oracle", "--input", data("sq"))[0] == 3


def test_dump_complex(tmp_path):
    target = tmp_path / "cx.json"
    code, _, _ = call("homology", "--input", data("hc3"), "--dump-complex", str(target))
    doc = json.loads(target.read_text())
    assert code == 0 and doc["boundary"]["1"]["shape"] == [6, 6]


@pytest.mark.parametrize("argv", [
    ("homology", "--input", "annulus", "--json"),
    ("chains", "--input", "hc3"),
    ("oracle",),
    ("validate", "--input", "sq_corrupted"),
])
def test_deterministic(argv):
    argv = [data(a) if a in ("annulus", "hc3", "sq_corrupted") else a for a in argv]
    assert call(*argv) == call(*argv)


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "cubehom.cli", "homology", "--input", data("hc3")],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "H_0 = Z\n" in proc.stdout and "H_1 = Z\n" in proc.stdout
