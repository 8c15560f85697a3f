import json
import shutil

import pytest

from exactk3.checks import CheckReport, Context, emit_report, run_suite
from exactk3.cli import main
from exactk3.errors import UnknownSuite
from exactk3.fixtures import DEFAULT_DIR, FILES


def test_every_fixture_cites_a_source():
    for name in FILES:
        data = json.loads((DEFAULT_DIR / f"{name}.json").read_text(encoding="utf-8"))
        entries = data.values() if "source" not in data else [data]
        for entry in entries:
            if isinstance(entry, dict):
                assert "source" in entry, name


def test_fixture_json_round_trip():
    for name in FILES:
        text = (DEFAULT_DIR / f"{name}.json").read_text(encoding="utf-8")
        data = json.loads(text)
        assert json.loads(json.dumps(data)) == data


def test_gram_shape(fx):
    assert len(fx.gram) == 18 and all(len(r) == 18 for r in fx.gram)
    assert len(fx.p2) == 18 and len(fx.h) == 18


def test_empty_report():
    assert json.loads(emit_report(CheckReport("x"), "json")) == {"suite": "x", "checks": []}


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("nope")
    assert main(["--suite", "nope"]) == 2


def test_bad_prime_is_configuration_error():
    assert main(["--suite", "salem", "--prime", "91"]) == 2


def test_sanity_suite_json_is_deterministic(ctx, tmp_path):
    a = emit_report(run_suite("sanity", context=ctx), "json")
    b = emit_report(run_suite("sanity", context=ctx), "json")
    assert a == b
    data = json.loads(a)
    assert [c["status"] for c in data["checks"]] == ["pass"] * 6


def test_cli_exit_codes(tmp_path, capsys):
    assert main(["--suite", "projrep", "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert out.count("✓") == 4
    path = tmp_path / "r.json"
    assert main(["--suite", "salem", "--format", "json", "--output", str(path)]) == 0
    assert json.loads(path.read_text())["suite"] == "salem"


def test_failing_fixture_gives_exit_one(tmp_path):
    d = tmp_path / "fx"
    shutil.copytree(DEFAULT_DIR, d, ignore=shutil.ignore_patterns("*.py", "__pycache__"))
    salem = json.loads((d / "salem.json").read_text())
    salem["tau8"]["coeffs"] = [1, 0, -1, -2, -1, 0, 2]
    (d / "salem.json").write_text(json.dumps(salem))
    assert main(["--suite", "salem", "--fixtures", str(d)]) == 1


def test_skip_without_char0(ctx):
    report = run_suite("gram", context=Context(ctx.fx))
    statuses = {c.id: c.status for c in report.checks}
    assert statuses["gram.2-gram-over-K"] == "skip" and report.ok
