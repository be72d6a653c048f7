import json
from fractions import Fraction as F

import pytest

from domains.domain_model import Box, Cone, Interval
from domains.rational import NEG_INF, POS_INF
from errors import SpecError
from run_management.spec_model import (
    build_candidate,
    build_closed_form,
    build_domain,
    build_equation,
    build_f_table,
    build_group_functions,
    build_groups,
    build_weights,
    parse_spec,
    render_spec,
)

INVARIANCE = """{
  "schema": "1",
  "command": "check-invariance",
  "domain": {"type": "interval", "lo": "-1", "hi": "2"},
  "equation": {"alphas": ["1/4", "-1/5"]}
}
"""


def test_parse_interval_spec():
    spec = parse_spec(INVARIANCE)
    assert spec.command == "check-invariance"
    assert spec.schema_version == "1"
    assert build_domain(spec) == Interval(-1, 2)
    equation = build_equation(spec)
    assert equation.alphas == (F(1, 4), F(-1, 5))
    assert equation.betas == equation.alphas


def test_parse_infinite_endpoints_and_boxes():
    spec = parse_spec(json.dumps({
        "domain": {"type": "box", "sides": [{"lo": "-inf", "hi": "inf"}, {"lo": 0, "hi": "inf"}]},
    }))
    assert build_domain(spec) == Box((Interval(NEG_INF, POS_INF), Interval(0, POS_INF)))


def test_parse_cone_defaults_to_open():
    spec = parse_spec(json.dumps({"domain": {"type": "cone", "generators": [["1", "0"], ["0", "1"]]}}))
    cone = build_domain(spec)
    assert cone == Cone(((1, 0), (0, 1)))
    assert cone.open


def test_decimal_literal_is_rejected_with_its_position():
    text = INVARIANCE.replace('"-1/5"', '"0.25"')
    with pytest.raises(SpecError) as exc_info:
        parse_spec(text)
    detail = exc_info.value.detail
    assert detail["error"] == "INVALID_SPEC"
    assert detail["path"] == "equation.alphas[1]"
    assert (detail["line"], detail["column"]) == (5, 34)
    assert "0.25" in detail["message"]


def test_json_floats_are_not_rationals():
    with pytest.raises(SpecError) as exc_info:
        parse_spec('{"equation": {"alphas": [0.5, 0.5]}}')
    assert exc_info.value.context["path"] == "equation.alphas[0]"


def test_syntax_errors_carry_line_and_column():
    with pytest.raises(SpecError) as exc_info:
        parse_spec('{\n  "command": "characterize"\n  "equation": {}\n}')
    assert (exc_info.value.context["line"], exc_info.value.context["column"]) == (3, 3)


@pytest.mark.parametrize(
    "document, path",
    [
        ({"colour": "red"}, "colour"),
        ({"command": "transcribe"}, "command"),
        ({"schema": "2"}, "schema"),
        ({"domain": {"type": "ball", "lo": 0, "hi": 1}}, "domain"),
        ({"params": {"trials": 0}}, "params.trials"),
        ({"params": {"trials": True}}, "params.trials"),
        ({"params": {"centers": [[1, 2]]}}, "params.centers[0]"),
        ({"group": {"moduli": ["4"]}}, "group.moduli[0]"),
    ],
)
def test_schema_violations_name_the_field(document, path):
    with pytest.raises(SpecError) as exc_info:
        parse_spec(json.dumps(document))
    assert exc_info.value.context["path"].startswith(path)


def test_top_level_must_be_an_object():
    with pytest.raises(SpecError):
        parse_spec("[1, 2]")


def test_functions_need_exactly_one_source():
    both = {
        "functions": {
            "f_table": {"1/2": ["1"]},
            "f_closed_form": {"A": [["3"]], "b": ["7"]},
        }
    }
    with pytest.raises(SpecError) as exc_info:
        parse_spec(json.dumps(both))
    assert exc_info.value.context["path"] == "functions"
    with pytest.raises(SpecError):
        parse_spec(json.dumps({"functions": {}}))


def test_f_table_keys_are_point_literals():
    spec = parse_spec(json.dumps({"functions": {"f_table": {"1/2": ["3/2"], "1/4,1": ["0"]}}}))
    assert build_f_table(spec) == {(F(1, 2),): (F(3, 2),), (F(1, 4), F(1)): (F(0),)}
    assert build_closed_form(spec) is None

    bad = parse_spec(json.dumps({"functions": {"f_table": {"0.5": ["1"]}}}))
    with pytest.raises(SpecError) as exc_info:
        build_f_table(bad)
    assert exc_info.value.context["path"] == "functions.f_table.0.5"


def test_empty_interval_is_a_spec_error_at_the_domain():
    spec = parse_spec(json.dumps({"domain": {"type": "interval", "lo": "1", "hi": "1"}}))
    with pytest.raises(SpecError) as exc_info:
        build_domain(spec)
    assert exc_info.value.context["path"] == "domain"


def test_zero_coefficient_is_a_spec_error_at_the_equation():
    spec = parse_spec(json.dumps({"equation": {"alphas": ["1", "0"]}}))
    with pytest.raises(SpecError) as exc_info:
        build_equation(spec)
    assert exc_info.value.context["path"] == "equation"


def test_require_names_the_missing_field():
    spec = parse_spec('{"command": "characterize"}')
    with pytest.raises(SpecError) as exc_info:
        spec.require("characterize")
    assert exc_info.value.context["path"] == "equation"
    with pytest.raises(SpecError) as exc_info:
        parse_spec(INVARIANCE).require("characterize")
    assert exc_info.value.context["path"] == "command"


def test_group_tables():
    spec = parse_spec(json.dumps({
        "group": {"moduli": [2, 2]},
        "tables": {"f": [[0, 0], [0, 1], [1, 0], [1, 1]], "g": [[[0, 0]] * 4, [[0, 0], [0, 1], [1, 0], [1, 1]]]},
    }))
    G, H = build_groups(spec)
    assert G is H
    f, gs = build_group_functions(spec, G, H)
    assert f((1, 0)) == (1, 0)
    assert len(gs) == 2

    short = parse_spec(json.dumps({"group": {"moduli": [3]}, "tables": {"f": [0, 1], "g": [[0, 0, 0], [0, 1, 2]]}}))
    G, H = build_groups(short)
    with pytest.raises(SpecError) as exc_info:
        build_group_functions(short, G, H)
    assert exc_info.value.context["path"] == "tables.f"


def test_render_then_parse_gives_the_same_spec():
    document = {
        "schema": "1",
        "command": "extend",
        "domain": {"type": "box", "sides": [{"lo": "0", "hi": "inf"}, {"lo": "-inf", "hi": "1/3"}]},
        "equation": {"alphas": ["1/2", "1/2"], "betas": ["1/3", "2/3"]},
        "functions": {"f_closed_form": {"A": [["3", "-1/2"]], "b": ["7"]}},
        "params": {"trials": 10, "seed": 4, "radius": "1/64", "centers": ["1/2,1/4"]},
    }
    spec = parse_spec(json.dumps(document))
    rendered = render_spec(spec)
    assert json.loads(rendered) == document
    assert parse_spec(rendered).model_dump() == spec.model_dump()


def test_candidate_dimension_is_checked_against_the_domain():
    spec = parse_spec(json.dumps({
        "domain": {"type": "interval", "lo": "0", "hi": "1"},
        "candidate": {"A": [["1", "2"]], "b": ["0"]},
    }))
    assert build_candidate(spec).k == 2
    with pytest.raises(SpecError) as exc_info:
        build_candidate(spec, build_domain(spec))
    assert exc_info.value.context["path"] == "candidate"


@pytest.mark.parametrize("alphas, path", [([2], "alphas"), ([2, 0], "alphas[1]")])
def test_weights_must_match_the_g_tables(alphas, path):
    spec = parse_spec(json.dumps({
        "group": {"moduli": [3]},
        "alphas": alphas,
        "tables": {"f": [0, 0, 0], "g": [[0, 0, 0], [0, 0, 0]]},
    }))
    with pytest.raises(SpecError) as exc_info:
        build_weights(spec)
    assert exc_info.value.context["path"] == path
    assert build_weights(spec.model_copy(update={"alphas": [2, -1]})) == (2, -1)
