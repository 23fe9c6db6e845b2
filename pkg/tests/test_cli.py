import json
import subprocess
import sys

import jsonschema
import pytest

from kloospath.cli import (
    CLASSIFY_SCHEMA,
    GALLERY_SCHEMA,
    MC_SCHEMA,
    VERDICT_SCHEMA,
    RunConfig,
    UsageError,
    main,
)


def run(args, capsys):
    code = main(args)
    return code, capsys.readouterr().out


def test_classify_plain(capsys):
    code, out = run(["classify", "--kind", "plain", "--b", "1", "--p", "5,7,13"], capsys)
    assert code == 0
    assert out == "p,in_s_easy,in_s_hard,not_in_s\n5,4,0,0\n7,6,0,0\n13,9,3,0\n"


def test_classify_swiss_json(capsys):
    _, out = run(["classify", "--kind", "swiss", "--b", "1", "--p", "29", "--format", "json"], capsys)
    doc = json.loads(out)
    jsonschema.validate(doc, CLASSIFY_SCHEMA)
    assert doc["rows"] == [{"p": 29, "in_s_easy": 26, "in_s_hard": 2, "not_in_s": 0}]


@pytest.mark.parametrize("args", [
    ["classify", "--p", "4"], ["classify", "--p", "5,9"], ["check", "--p", "21"],
    ["gallery", "--id", "nope"], ["classify", "--p", "5", "--format", "svg"],
])
def test_usage_errors_exit_2(args, capsys):
    with pytest.raises(SystemExit) as exc:
        main(args)
    assert exc.value.code == 2


@pytest.mark.parametrize("p,a,kind", [(19, 8, "plain"), (17, 8, "swiss")])
def test_check_counterexamples(p, a, kind, capsys):
    _, out = run(["check", "--p", str(p), "--a", str(a), "--b", "1", "--kind", kind], capsys)
    rec = json.loads(out)
    jsonschema.validate(rec, VERDICT_SCHEMA)
    assert rec["status"] == "NotInS"


@pytest.mark.parametrize("kind", ["padded", "birch", "character"])
def test_check_other_kinds(kind, capsys):
    _, out = run(["check", "--p", "13", "--a", "3", "--kind", kind], capsys)
    rec = json.loads(out)
    jsonschema.validate(rec, VERDICT_SCHEMA)
    assert rec["status"].startswith("InS")


def test_mc_reproducible(capsys):
    args = ["mc", "--f", "zero", "--eps", "0.5", "--N", "128", "--trials", "10000", "--seed", "7"]
    _, first = run(args, capsys)
    _, second = run(args, capsys)
    rec = json.loads(first)
    jsonschema.validate(rec, MC_SCHEMA)
    assert first == second and rec["frequency"] > 0 and rec["seed"] == 7


def test_gallery_outputs(capsys):
    _, out = run(["gallery", "--id", "takagi"], capsys)
    rec = json.loads(out)
    jsonschema.validate(rec, GALLERY_SCHEMA)
    assert rec["status"] == "InS_Analytic"
    _, out = run(["gallery", "--id", "hilbert:4"], capsys)
    assert json.loads(out)["status"] == "NotInS"
    _, out = run(["gallery", "--id", "cantor", "--format", "csv", "--grid", "33"], capsys)
    lines = out.splitlines()
    assert lines[0] == "t,re,im" and len(lines) == 34
    _, out = run(["gallery", "--id", "riemann", "--format", "svg", "--grid", "65"], capsys)
    assert out.startswith("<?xml") and out.count("<polyline") == 1


def test_path_formats(tmp_path, capsys):
    target = tmp_path / "k19.svg"
    assert main(["path", "--p", "19", "--a", "8", "--format", "svg", "--out", str(target)]) == 0
    svg = target.read_text()
    assert 'width="1024"' in svg and 'stroke-width="1"' in svg
    points = svg.split('points="')[1].split('"')[0].split()
    assert len(points) == 19
    xs = [float(p.split(",")[0]) for p in points]
    assert min(xs) >= 1024 * 0.05 - 1e-6 and max(xs) <= 1024 * 0.95 + 1e-6
    _, out = run(["path", "--p", "7", "--a", "2"], capsys)
    assert out.splitlines()[0] == "t,re,im" and len(out.splitlines()) == 8


def test_classify_byte_identical_across_threads(tmp_path, monkeypatch):
    outputs = []
    for threads in ("1", "3"):
        target = tmp_path / f"out{threads}.csv"
        main(["classify", "--kind", "swiss", "--p", "17,23", "--threads", threads, "--out", str(target)])
        outputs.append(target.read_bytes())
    monkeypatch.setenv("KLOOSPATH_THREADS", "2")
    target = tmp_path / "env.csv"
    main(["classify", "--kind", "swiss", "--p", "17,23", "--out", str(target)])
    outputs.append(target.read_bytes())
    assert len(set(outputs)) == 1


def test_run_config_validation():
    with pytest.raises(UsageError):
        RunConfig("classify").validate()
    with pytest.raises(UsageError):
        RunConfig("check", p=[13, 17]).validate()
    with pytest.raises(UsageError):
        RunConfig("mc", trials=0).validate()
    RunConfig("gallery", gallery_id="parabola:3").validate()


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "kloospath.cli", "classify", "--p", "5"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.splitlines()[1] == "5,4,0,0"
