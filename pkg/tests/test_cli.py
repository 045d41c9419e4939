"""The webpolar command: subcommands, exit statuses and deterministic output."""

import json
import shutil
import subprocess
import sys

import pytest

from webpolar.cli import parse_point, run
from webpolar.webparse import ParseError


def call(capsys, *argv):
    rc = run(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def write_spec(tmp_path, name="web.json", **doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_polar_of_the_cusp_fixture(capsys):
    rc, out, _ = call(capsys, "polar", "--fixture", "example2")
    assert rc == 0
    doc = json.loads(out)
    assert doc["polar"]["polynomial"] in ("y^2 - x^3", "x^3 - y^2")
    assert doc["polar"]["degree"] == 3 and doc["polar"]["degree_bound"] == 3


def test_polar_of_the_triple_line(capsys):
    rc, out, _ = call(capsys, "polar", "--fixture", "example3")
    assert rc == 0
    assert json.loads(out)["polar"]["polynomial"] == "x^3"


def test_contact_at_the_cusp(capsys):
    rc, out, _ = call(capsys, "contact", "--fixture", "example2", "--at", "0,0")
    assert rc == 0
    doc = json.loads(out)
    assert doc["contact"]["order"] == "3"
    assert doc["verdict"]["status"] == "holds"


def test_contact_off_the_polar_curve_has_no_verdict(capsys):
    rc, out, _ = call(capsys, "contact", "--fixture", "example1", "--at", "1,1")
    assert rc == 0
    doc = json.loads(out)
    assert doc["contact"]["order"] == "0" and doc["verdict"] is None


def test_verify_passes_on_the_circle_fixture(capsys):
    rc, out, _ = call(capsys, "verify", "--fixture", "example1")
    assert rc == 0
    doc = json.loads(out)
    assert doc["all_pass"] is True
    assert all(doc["identities"].values())


def test_verify_on_seeded_random_webs(capsys):
    rc, out, _ = call(capsys, "verify", "--random", "3", "--seed", "5")
    assert rc == 0
    doc = json.loads(out)
    assert doc["seed"] == 5 and doc["count"] == 3
    assert [w["label"] for w in doc["webs"]] == ["random-5-0", "random-5-1", "random-5-2"]
    assert all(w["all_pass"] for w in doc["webs"])


def test_analyze_of_the_integrating_factor_fixture(capsys):
    rc, out, _ = call(capsys, "analyze", "--fixture", "example4")
    assert rc == 0
    doc = json.loads(out)
    assert doc["polar"]["polynomial"] == "x*y"
    assert doc["exact_polar"]["polynomial"] == "y"
    assert doc["exact_polar"]["excluded"] == "x"
    assert doc["integrating_factors"]["omega"] == {"factor": "1/x^2", "valid": True}
    assert doc["common_leaf_suspected"]
    assert all(p[0] == "0" for p in doc["common_leaf_suspected"])


def test_analyze_of_the_circle_fixture(capsys):
    rc, out, _ = call(capsys, "analyze", "--fixture", "example1")
    assert rc == 0
    doc = json.loads(out)
    assert doc["polar"]["polynomial"] == "y"
    assert doc["paracomplex"]["entries"] == [["1", "0"], ["-2*x/y", "-1"]]


def test_analyze_of_the_coordinate_web(capsys, tmp_path):
    spec = write_spec(tmp_path, omega="dx", eta="dy")
    rc, out, _ = call(capsys, "analyze", "--spec", spec)
    assert rc == 0
    doc = json.loads(out)
    assert doc["polar"]["empty"] is True
    assert doc["paracomplex"]["entries"] == [["-1", "0"], ["0", "1"]]
    assert doc["contacts"] == []


def test_singular_and_paracomplex_commands(capsys):
    rc, out, _ = call(capsys, "singular", "--fixture", "example3")
    assert rc == 0
    sing = json.loads(out)["singular"]
    assert sing["curve_components"] == "x" and sing["detected_via"] == "gcd"
    rc, out, _ = call(capsys, "paracomplex", "--fixture", "example1")
    assert rc == 0
    assert json.loads(out)["paracomplex"]["denominator"] == "-y"


def test_leaf_command(capsys):
    rc, out, _ = call(capsys, "leaf", "--fixture", "example1", "--at", "1,0")
    assert rc == 0
    leaves = json.loads(out)["leaves"]
    assert leaves["omega"]["closed"] is True
    assert leaves["eta"]["arc_length"] == pytest.approx(4.0)


def test_out_writes_a_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    rc, out, _ = call(capsys, "polar", "--fixture", "example2", "--out", str(target))
    assert rc == 0 and out == ""
    assert json.loads(target.read_text())["label"] == "example2"


# -- exit statuses --------------------------------------------------------------------

def test_parse_error_exits_with_two(capsys, tmp_path):
    spec = write_spec(tmp_path, omega="2x*dx", eta="dy")
    rc, _, err = call(capsys, "polar", "--spec", spec)
    assert rc == 2
    assert "omega" in err and "offset 1" in err


def test_malformed_json_and_bad_points_exit_with_two(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert call(capsys, "polar", "--spec", str(bad))[0] == 2
    assert call(capsys, "contact", "--fixture", "example2", "--at", "0;0")[0] == 2
    spec = write_spec(tmp_path, omega="dx", eta="dy", options={"tol": -1})
    assert call(capsys, "polar", "--spec", spec)[0] == 2


def test_missing_arguments_exit_with_two(capsys):
    with pytest.raises(SystemExit) as info:
        run(["contact", "--fixture", "example2"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        run(["polar"])
    assert info.value.code == 2
    capsys.readouterr()


def test_coincident_foliations_exit_with_three(capsys, tmp_path):
    spec = write_spec(tmp_path, omega="x*dx + y*dy", eta="2*x*dx + 2*y*dy")
    rc, out, err = call(capsys, "polar", "--spec", spec)
    assert rc == 3 and out == ""
    assert "coincident foliations" in err


def test_singular_query_point_exits_with_three(capsys, tmp_path):
    spec = write_spec(tmp_path, omega="x*dx + y*dy", eta="dy")
    rc, _, _ = call(capsys, "contact", "--spec", spec, "--at", "0,0")
    assert rc == 3


def test_unwritable_output_exits_with_one(capsys, tmp_path):
    target = tmp_path / "missing" / "out.json"
    rc, _, err = call(capsys, "polar", "--fixture", "example2", "--out", str(target))
    assert rc == 1
    assert "cannot write" in err


def test_parse_point():
    assert parse_point("1/2, -3") == (0.5, -3)
    assert parse_point("0.25,1") == (0.25, 1)
    with pytest.raises(ParseError):
        parse_point("1,2,3")
    with pytest.raises(ParseError):
        parse_point("a,1")


# -- tolerance and determinism ------------------------------------------------------------

def test_environment_tolerance_is_used_unless_the_spec_sets_one(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("WEBPOLAR_TOL", "1e-6")
    plain = write_spec(tmp_path, "plain.json", omega="dx", eta="dy")
    rc, out, _ = call(capsys, "polar", "--spec", plain)
    assert rc == 0 and json.loads(out)["options"]["tol"] == 1e-6
    pinned = write_spec(tmp_path, "pinned.json", omega="dx", eta="dy", options={"tol": 1e-8})
    rc, out, _ = call(capsys, "polar", "--spec", pinned)
    assert json.loads(out)["options"]["tol"] == 1e-8


def test_bad_environment_tolerance_is_a_parse_error(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("WEBPOLAR_TOL", "-3")
    plain = write_spec(tmp_path, omega="dx", eta="dy")
    assert call(capsys, "polar", "--spec", plain)[0] == 2


@pytest.mark.parametrize("command", ["analyze", "verify"])
def test_reports_are_byte_identical_across_runs(capsys, tmp_path, command):
    outs = []
    for k in range(2):
        target = tmp_path / f"{command}{k}.json"
        assert call(capsys, command, "--fixture", "example4", "--out", str(target))[0] == 0
        outs.append(target.read_bytes())
    assert outs[0] == outs[1]


def test_svg_is_byte_identical_across_runs(capsys, tmp_path):
    outs = []
    for k in range(2):
        target = tmp_path / f"plot{k}.svg"
        assert call(capsys, "plot", "--fixture", "example2", "--out", str(target))[0] == 0
        outs.append(target.read_bytes())
    assert outs[0] == outs[1]
    text = outs[0].decode()
    assert text.startswith("<?xml") and 'version="1.1"' in text
    assert "#d62728" in text  # the polar curve stroke


def test_installed_console_script():
    exe = shutil.which("webpolar")
    cmd = [exe] if exe else [sys.executable, "-m", "webpolar"]
    proc = subprocess.run(cmd + ["contact", "--fixture", "example2", "--at", "0,0"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["contact"]["order"] == "3"
