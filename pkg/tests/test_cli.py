import json
import os
import subprocess
import sys

import pytest

from orbinv import catalog
from orbinv.cli import main
from orbinv.modelfile import InputError, load_model_dict

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_catalog_listing(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) >= 9
    names = [ln.split()[0] for ln in lines]
    for required in ("A1", "C3-Z3-111", "P2-Z3", "P1-Z2", "S3-perm", "Q8-2d"):
        assert required in names


@pytest.mark.parametrize("name", catalog.names())
def test_catalog_entries_analyze(capsys, name):
    code, out, _ = run(capsys, "analyze", name)
    assert code == 0
    report = json.loads(out)
    assert report["format_version"] == 1
    if report["model"]["kind"] != "gset":
        assert report["checks"]["gorenstein"]["ok"] == catalog.entry(name).gorenstein


def test_analyze_values(capsys):
    _, out, _ = run(capsys, "analyze", "C3-Z3-111")
    r = json.loads(out)
    assert r["invariants"]["stringy_euler"]["value"] == "3"
    assert r["invariants"]["orbifold_E"]["terms"] == [
        {"p": "1", "q": "1", "coeff": "1"},
        {"p": "2", "q": "2", "coeff": "1"},
        {"p": "3", "q": "3", "coeff": "1"},
    ]
    _, out, _ = run(capsys, "analyze", "P2-Z3")
    r = json.loads(out)
    inv = r["invariants"]
    assert inv["stringy_euler"]["value"] == "9"
    assert {"p": "1", "q": "1", "h": 7} in inv["cr_hodge"]["integral"]
    assert (inv["trace"]["lhs"], inv["trace"]["rhs"]) == ("2", "2")


def test_text_format(capsys):
    code, out, _ = run(capsys, "analyze", "P2-Z3", "--format", "text")
    assert code == 0 and "1 + 7*uv + (uv)^2" in out


def test_round_trip_and_determinism(capsys):
    _, a, _ = run(capsys, "analyze", "P1-Z2")
    _, b, _ = run(capsys, "analyze", "P1-Z2")
    assert a == b
    assert json.dumps(json.loads(a), sort_keys=True, indent=2, ensure_ascii=False) + "\n" == a


def test_file_hash_matches_catalog(tmp_path, capsys):
    catalog.export(str(tmp_path))
    _, a, _ = run(capsys, "analyze", str(tmp_path / "A1.json"))
    _, b, _ = run(capsys, "analyze", "A1")
    assert a == b


def test_malformed_literal(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"name": "bad", "kind": "affine", "root_order": 3, "dimension": 1,
                             "generators": [[["z^"]]]}))
    code, out, err = run(capsys, "analyze", str(p))
    assert code == 2 and out == ""
    assert "generators[0][0][0]" in err and "'z^'" in err


@pytest.mark.parametrize("doc,where", [
    ({"name": "x", "kind": "torus"}, "kind"),
    ({"name": "x", "kind": "affine", "dimension": 1, "generators": []}, "<root>"),
    ({"name": "x", "kind": "gset", "group": "Z2", "points": 2, "actions": [[0, 0]]}, "actions[0]"),
    ({"name": "x", "kind": "gset", "group": "Z9", "points": 1, "actions": [[0]]}, "group"),
])
def test_schema_errors(doc, where):
    with pytest.raises(InputError) as info:
        load_model_dict(doc)
    assert info.value.where == where


def test_invalid_json(tmp_path, capsys):
    p = tmp_path / "broken.json"
    p.write_text('{"name": "x",\n  "kind": }')
    code, _, err = run(capsys, "analyze", str(p))
    assert code == 2 and "line 2" in err


def test_verify_exit_codes(capsys):
    assert run(capsys, "verify", "P2-Z3", "--checks", "all")[0] == 0
    code, out, _ = run(capsys, "verify", "P1-Z2", "--checks", "trace")
    assert code == 2
    assert json.loads(out)["checks"]["trace"]["status"] == "not_applicable"
    assert run(capsys, "verify", "C2-Z2-refl", "--checks", "trace")[0] == 2
    assert run(capsys, "verify", "A1", "--checks", "bogus")[0] == 2
    assert run(capsys, "verify", "gset-S3-points", "--checks", "confun")[0] == 0


def test_verify_reports_both_sides(capsys):
    _, out, _ = run(capsys, "verify", "P2-Z3", "--checks", "trace,evidence,euler")
    checks = json.loads(out)["checks"]
    assert checks["trace"] == {"status": "pass", "lhs": "2", "rhs": "2"}
    assert checks["euler"]["commuting_pairs"] == {"lhs": 9, "rhs": 9}


def test_failed_check_exit_code(monkeypatch, capsys):
    # force a failing identity to confirm failures map to exit 1, not 2
    from orbinv import report
    from orbinv.invariants import IdentityCheck

    monkeypatch.setitem(report._RUNNERS, "trace",
                        report._run_identity(lambda m: IdentityCheck(1, 2)))
    assert run(capsys, "verify", "P2-Z3", "--checks", "trace")[0] == 1


def test_output_file(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert run(capsys, "analyze", "A1", "-o", str(out))[0] == 0
    assert json.loads(out.read_text())["model"]["name"] == "A1"


def test_shipped_model_files():
    folder = os.path.join(ROOT, "models")
    for name in catalog.names():
        with open(os.path.join(folder, f"{name}.json")) as fh:
            assert json.load(fh) == catalog.entry(name).data


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "orbinv.cli", "catalog"], capture_output=True, text=True)
    assert proc.returncode == 0 and "P2-Z3" in proc.stdout
