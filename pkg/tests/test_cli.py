import json
import logging

import pytest

from main import EXIT_BAD_INPUT, EXIT_ENGINE_ERROR, EXIT_OK, main

JENSEN_EXTEND = {
    "schema": "1",
    "command": "extend",
    "domain": {"type": "interval", "lo": "0", "hi": "1"},
    "equation": {"alphas": ["1/2", "1/2"]},
    "functions": {"f_closed_form": {"A": [["3"]], "b": ["7"]}},
    "params": {"centers": ["1/2", "9/16"]},
}

CAUCHY_VERIFY = {
    "command": "verify",
    "domain": {"type": "interval", "lo": "0", "hi": "inf"},
    "equation": {"alphas": ["1", "1"]},
    "candidate": {"A": [["3"]], "b": ["7"]},
    "params": {"trials": 50},
}


@pytest.fixture(autouse=True)
def restore_logging():
    """main() points the root logger at the captured stderr; detach it afterwards."""
    yield
    root = logging.getLogger()
    for handler in list(root.handlers):
        if type(handler) is logging.StreamHandler:
            root.removeHandler(handler)
    root.setLevel(logging.WARNING)


@pytest.fixture
def run_cli(write_spec, capsys):
    """Run feqn on a spec document; returns (exit status, parsed stdout)."""

    def run(command, document, *extra):
        path = write_spec(document if isinstance(document, str) else json.dumps(document))
        status = main([command, "--spec", str(path), "--workers", "1", *extra])
        out = capsys.readouterr().out
        return status, (json.loads(out) if "--format" not in extra else out)

    return run


def test_check_invariance_holds(run_cli):
    status, report = run_cli("check-invariance", {
        "domain": {"type": "interval", "lo": "-1", "hi": "2"},
        "equation": {"alphas": ["1/4", "-1/5"]},
    })
    assert status == EXIT_OK
    assert report["schema"] == "1"
    assert report["verdict"] == "holds"
    assert report["result"]["image"] == {"type": "interval", "lo": "-13/20", "hi": "7/10"}
    assert "timing_seconds" not in report


def test_check_invariance_fails_with_a_witness(run_cli):
    status, report = run_cli("check-invariance", {
        "domain": {"type": "interval", "lo": "0", "hi": "1"},
        "equation": {"alphas": ["1", "1"]},
    })
    assert status == EXIT_OK
    assert report["verdict"] == "fails"
    assert len(report["result"]["witness"]) == 2


def test_characterize_jensen(run_cli):
    status, report = run_cli("characterize", {"equation": {"alphas": ["1/2", "1/2"]}})
    assert status == EXIT_OK
    family = report["result"]["family"]
    assert family["offset_free"] is True
    assert family["linear_part_allowed"] is True
    assert report["result"]["homogeneity"]["field"] == "Q"


def test_verify_fails_with_the_first_violation(run_cli):
    status, report = run_cli("verify", CAUCHY_VERIFY)
    assert status == EXIT_OK
    assert report["verdict"] == "fail"
    assert report["result"]["first_violation"]["trial"] == 0
    assert report["result"]["admitted_by_family"] is False


def test_extend_recovers_the_closed_form(run_cli):
    status, report = run_cli("extend", JENSEN_EXTEND)
    assert status == EXIT_OK
    assert report["verdict"] == "computed"
    assert report["result"]["A"] == [["3"]]
    assert report["result"]["b"] == ["7"]


def test_extend_with_an_offset_contradiction_exits_one(run_cli):
    document = dict(JENSEN_EXTEND)
    document.update({
        "domain": {"type": "interval", "lo": "-1", "hi": "1"},
        "equation": {"alphas": ["1/4", "1/4"]},
        "functions": {"f_closed_form": {"A": [["-2"]], "b": ["5"]}},
        "params": {"centers": ["0", "1/16"]},
    })
    status, report = run_cli("extend", document)
    assert status == EXIT_ENGINE_ERROR
    assert report["error"]["error"] == "OFFSET_CONTRADICTION"


def test_shrink(run_cli):
    status, report = run_cli("shrink", {
        "domain": {"type": "interval", "lo": "-1", "hi": "2"},
        "equation": {"alphas": ["1/4", "-1/5"]},
    })
    assert status == EXIT_OK
    assert report["result"]["subdomain"] == {"type": "interval", "lo": "-1", "hi": "1"}


def test_enumerate_finite(run_cli):
    status, report = run_cli("enumerate-finite", {"group": {"moduli": [4]}})
    assert status == EXIT_OK
    assert report["result"]["count"] == 4
    assert report["result"]["homomorphisms"][2] == [0, 2, 0, 2]


def test_solve_finite(run_cli):
    status, report = run_cli("solve-finite", {
        "group": {"moduli": [5]},
        "tables": {"f": [4, 1, 3, 0, 2], "g": [[1, 3, 0, 2, 4], [3, 0, 2, 4, 1]]},
    })
    assert status == EXIT_OK
    assert report["verdict"] == "decomposable"
    assert report["result"]["y_i"] == [1, 3]


def test_weighted_check_without_decomposition(run_cli):
    status, report = run_cli("weighted-check", {
        "group": {"moduli": [4]},
        "alphas": [2, 2],
        "tables": {"f": [0, 1, 0, 3], "g": [[0, 0, 0, 0], [0, 0, 0, 0]]},
    })
    assert status == EXIT_OK
    assert report["verdict"] == "NONE"
    assert report["result"]["decomposition"] == "NONE"
    assert report["result"]["candidates_checked"] == 16


def test_invalid_spec_exits_two(run_cli):
    status, report = run_cli("characterize", {"equation": {"alphas": ["0.1", "1"]}})
    assert status == EXIT_BAD_INPUT
    assert report["error"]["error"] == "INVALID_SPEC"
    assert report["error"]["path"] == "equation.alphas[0]"


def test_weight_count_mismatch_exits_two(run_cli):
    status, report = run_cli("weighted-check", {
        "group": {"moduli": [4]},
        "alphas": [2, 2, 2],
        "tables": {"f": [0, 0, 0, 0], "g": [[0, 0, 0, 0], [0, 0, 0, 0]]},
    })
    assert status == EXIT_BAD_INPUT
    assert report["error"]["error"] == "INVALID_SPEC"
    assert report["error"]["path"] == "alphas"


def test_candidate_of_the_wrong_dimension_exits_two(run_cli):
    document = dict(CAUCHY_VERIFY, domain={"type": "box", "sides": [{"lo": "0", "hi": "inf"}, {"lo": "0", "hi": "inf"}]})
    status, report = run_cli("verify", document)
    assert status == EXIT_BAD_INPUT
    assert report["error"]["path"] == "candidate"
    assert (report["error"]["map_dim"], report["error"]["domain_dim"]) == (1, 2)


def test_malformed_json_exits_two(run_cli):
    status, report = run_cli("characterize", '{"equation": ')
    assert status == EXIT_BAD_INPUT
    assert report["error"]["line"] == 1


def test_missing_field_exits_two(run_cli):
    status, report = run_cli("verify", {"equation": {"alphas": ["1", "1"]}})
    assert status == EXIT_BAD_INPUT
    assert report["error"]["path"] == "domain"


def test_unreadable_spec_exits_two(tmp_path, capsys):
    status = main(["characterize", "--spec", str(tmp_path / "missing.json")])
    assert status == EXIT_BAD_INPUT
    assert json.loads(capsys.readouterr().out)["error"]["error"] == "INVALID_SPEC"


def test_engine_precondition_exits_one(run_cli):
    document = dict(CAUCHY_VERIFY, domain={"type": "interval", "lo": "0", "hi": "1"})
    status, report = run_cli("verify", document)
    assert status == EXIT_ENGINE_ERROR
    assert report["error"]["error"] == "INVARIANCE_FAILED"
    assert report["command"] == "verify"


def test_size_guard_exits_one(run_cli):
    status, report = run_cli("solve-finite", {
        "group": {"moduli": [64]},
        "tables": {"f": [0] * 64, "g": [[0] * 64] * 4},
    })
    assert status == EXIT_ENGINE_ERROR
    assert report["error"]["error"] == "SIZE_GUARD_EXCEEDED"


def test_reports_are_byte_identical_across_runs(write_spec, capsys):
    path = write_spec(json.dumps(CAUCHY_VERIFY))
    outputs = []
    for workers in ("1", "3", "1"):
        assert main(["verify", "--spec", str(path), "--workers", workers]) == EXIT_OK
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1] == outputs[2]


def test_seed_flag_overrides_the_spec(run_cli):
    document = dict(CAUCHY_VERIFY, params={"trials": 5, "seed": 11})
    _, report = run_cli("verify", document)
    assert report["seed"] == 11
    _, report = run_cli("verify", document, "--seed", "12")
    assert report["seed"] == 12


def test_timing_is_opt_in(run_cli):
    _, report = run_cli("characterize", {"equation": {"alphas": ["1", "1"]}}, "--timing")
    assert report["timing_seconds"] >= 0


def test_text_format(run_cli):
    status, out = run_cli("verify", dict(CAUCHY_VERIFY, candidate={"A": [["3"]], "b": ["0"]}), "--format", "text")
    assert status == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "verify: pass"
    assert "  candidate.b: [0]" in lines


def test_text_format_for_errors(run_cli):
    status, out = run_cli("characterize", {"equation": {"alphas": ["1"]}}, "--format", "text")
    assert status == EXIT_BAD_INPUT
    assert out.startswith("characterize: error INVALID_SPEC")


@pytest.mark.parametrize(
    "argv",
    [
        ["transcribe", "--spec", "x.json"],
        ["verify"],
        ["verify", "--spec", "x.json", "--workers", "0"],
        ["verify", "--spec", "x.json", "-v", "-q"],
    ],
)
def test_bad_arguments_exit_two(argv):
    with pytest.raises(SystemExit) as exc_info:
        main(argv)
    assert exc_info.value.code == 2
