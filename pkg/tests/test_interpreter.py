import json

import pytest

from exotica.cli import bundled_scripts, load_bundled_script, main, run_text
from exotica.dsl import parse
from exotica.interpreter import ExecConfig, execute


def run(source, **config):
    return execute(parse(source), ExecConfig(**config))


def test_simple_pass():
    report = run('let G = presentation { gens: a; rels: a^3; }\nassert order(G) == 3')
    assert report.exit_code() == 0
    assert report.assertions[0].status == "pass"


def test_fail_reports_actual_value():
    report = run('let G = presentation { gens: a; rels: a^3; }\nassert order(G) == 5')
    assert report.exit_code() == 1
    failed = report.assertions[0]
    assert failed.status == "fail"
    assert "actual 3" in failed.detail


def test_failure_does_not_halt_following_assertions():
    report = run(
        'let G = presentation { gens: a; rels: a^3; }\n'
        "assert order(G) == 5\n"
        "assert order(G) == 3"
    )
    assert [a.status for a in report.assertions] == ["fail", "pass"]
    assert report.exit_code() == 1


def test_unknown_on_budget_exhaustion():
    surface = "presentation { gens: a1, b1, a2, b2; rels: a1*b1*a1^-1*b1^-1*a2*b2*a2^-1*b2^-1; }"
    report = run(f"let G = {surface}\nassert trivial(G) budget 300")
    assert report.assertions[0].status == "unknown"
    assert report.exit_code() == 2
    report2 = run(f"let G = {surface}\nassert order(G) == 1 budget 300")
    assert report2.assertions[0].status == "unknown"


def test_runtime_error_gives_exit_three():
    report = run(
        'let G = presentation { gens: a; rels: a; }\n'
        "let R = fiber_sum(G, G, 2)\n"
        "assert trivial(G)"
    )
    assert report.exit_code() == 3
    assert report.error is not None
    assert "2:" in report.error  # source location
    assert not report.assertions  # aborted before the assertion ran


def test_unknown_operation_reported_with_location():
    report = run("let G = frobnicate(1)")
    assert report.exit_code() == 3
    assert "frobnicate" in report.error


def test_parse_error_gives_exit_three():
    report = run_text("let = 3", "broken", ExecConfig())
    assert report.exit_code() == 3
    assert "parse error" in report.error
    assert report.assertions == []


def test_citation_surfaced_in_report():
    report = run(
        'let G = presentation { gens: a; rels: a; }\n'
        'assert trivial(G) cite "because"'
    )
    assert report.assertions[0].citation == "because"
    payload = json.loads(report.to_json())
    assert payload["assertions"][0]["citation"] == "because"


def test_json_schema_fields():
    report = run('let G = presentation { gens: a; rels: a; }\nassert trivial(G)')
    payload = json.loads(report.to_json())
    assert set(payload) == {"script", "assertions", "summary", "generated_at"}
    entry = payload["assertions"][0]
    assert set(entry) == {"index", "text", "status", "detail", "citation", "elapsed_ms"}
    assert payload["summary"] == {"pass": 1, "fail": 0, "unknown": 0}


def test_stable_reports_byte_identical():
    source = load_bundled_script("theorem_1_2")
    a = run_text(source, "theorem_1_2", ExecConfig())
    b = run_text(source, "theorem_1_2", ExecConfig())
    assert a.to_json(stable=True) == b.to_json(stable=True)


def test_parallel_asserts_match_sequential():
    source = (
        'let G = presentation { gens: a; rels: a^3; }\n'
        "assert order(G) == 3\n"
        "assert order(G) == 5\n"
        "assert trivial(G) budget 300\n"
    )
    seq = run(source)
    par = run(source, parallel_asserts=True)
    assert [(a.index, a.status, a.detail) for a in seq.assertions] == [
        (a.index, a.status, a.detail) for a in par.assertions
    ]


def test_let_renames_records():
    report = run(
        "let M = invariants { sigma: 0, e: 4, b1: 0 }\n"
        'assert concludes(deduce(M), "nothing(M)") == false'
    )
    assert report.exit_code() == 0


def test_record_literal_validation_is_a_runtime_error():
    report = run("let M = invariants { sigma: 0, e: 4, chi_h: 3 }")
    assert report.exit_code() == 3


def test_with_pi1_requires_certificate():
    report = run(
        "let M = invariants { sigma: 0, e: 4 }\n"
        'let G = presentation { gens: a1, b1, a2, b2; '
        "rels: a1*b1*a1^-1*b1^-1*a2*b2*a2^-1*b2^-1; }\n"
        "let M2 = with_pi1(M, G)"
    )
    assert report.exit_code() == 3
    assert "not certified trivial" in report.error


def test_cli_run_json(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main(["run", "theorem_1_2", "--format", "json", "--out", str(out), "--stable"])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["summary"]["fail"] == 0
    assert payload["summary"]["unknown"] == 0
    assert all(a["elapsed_ms"] == 0.0 for a in payload["assertions"])
    assert "generated_at" not in payload


def test_cli_run_user_script_path(tmp_path):
    script = tmp_path / "tiny.exo"
    script.write_text(
        'let G = presentation { gens: a; rels: a^2; }\nassert order(G) == 2\n'
    )
    assert main(["run", str(script), "--out", str(tmp_path / "r.txt")]) == 0
    from exotica.interpreter import run_file

    report = run_file(script)
    assert report.exit_code() == 0
    assert report.script == "tiny"


def test_cli_bundled_scripts_present():
    assert bundled_scripts() == ["theorem_1_1", "theorem_1_2"]


def test_cli_missing_script_errors():
    with pytest.raises(SystemExit):
        main(["run", "no_such_script"])
