from ltlc.validation import *
from ltlc import _constants as c
import pytest


@pytest.fixture
def example_validator():
    schema = {
        "positive_number": {"is_positive": True},
        "states": {"type": "integer", "bits_with": "atoms"},
        "atoms": {"type": "integer"},
    }
    return OracleValidator(schema)


def test_is_positive_positive_number(example_validator):
    params = {"positive_number": 5}
    validate(params, example_validator)
    assert True


def test_is_positive_zero(example_validator):
    params = {"positive_number": 0}
    with pytest.raises(ValueError):
        validate(params, example_validator)


def test_is_positive_negative_number(example_validator):
    params = {"positive_number": -1}
    with pytest.raises(ValueError):
        validate(params, example_validator)


def test_bits_with_within_guard(example_validator):
    params = {"states": 6, "atoms": 3}
    validate(params, example_validator)
    assert True


def test_bits_with_over_guard(example_validator):
    params = {"states": 6, "atoms": 4}
    with pytest.raises(ValueError):
        validate(params, example_validator)


@pytest.mark.parametrize(
    "params",
    [
        {"n_max": 0, "n_atoms": 1},
        {"n_max": c.MAX_FRAME_STATES + 1, "n_atoms": 1},
        {"n_max": 2, "n_atoms": c.MAX_ATOMS + 1},
        {"n_max": 2.5, "n_atoms": 1},
    ],
)
def test_validate_oracle_bounds_invalid(params):
    with pytest.raises(ValueError):
        validate_oracle_bounds(params)


def test_validate_oracle_bounds_valid():
    params = {"n_max": c.MAX_FRAME_STATES, "n_atoms": c.MAX_ATOMS}
    assert validate_oracle_bounds(params) == params


@pytest.fixture
def verify_params():
    return {
        "formula": None,
        "random": 10,
        "seed": 0,
        "depth": 4,
        "max_states": 3,
        "atoms": 2,
        "suite": c.SUITE_CORRESPONDENCE,
        "n_jobs": None,
    }


def test_validate_verify_params(verify_params):
    assert validate_verify_params(verify_params) == verify_params


def test_validate_verify_params_formula_and_random(verify_params):
    verify_params["formula"] = "!q"
    with pytest.raises(ValueError):
        validate_verify_params(verify_params)


def test_validate_verify_params_neither_formula_nor_random(verify_params):
    verify_params["random"] = None
    with pytest.raises(ValueError):
        validate_verify_params(verify_params)


@pytest.mark.parametrize(
    "field,value", [("random", 0), ("suite", "unknown"), ("depth", 9), ("max_states", 7)]
)
def test_validate_verify_params_invalid_field(verify_params, field, value):
    verify_params[field] = value
    with pytest.raises(ValueError):
        validate_verify_params(verify_params)


def test_load_output_schema_covers_commands():
    schema = load_output_schema()
    assert set(c.COMMANDS) <= set(schema)


def test_validate_output_translate():
    payload = {"formula": "F q", "tau": "Fx[x] q"}
    assert validate_output(c.TRANSLATE, payload) == payload


def test_validate_output_missing_field():
    with pytest.raises(ValueError):
        validate_output(c.TRANSLATE, {"formula": "F q"})


def test_validate_lists_every_offending_field(verify_params):
    verify_params["depth"] = 9
    verify_params["suite"] = "unknown"
    with pytest.raises(ValueError) as excinfo:
        validate_verify_params(verify_params)
    lines = str(excinfo.value).splitlines()
    assert [x.split(":")[0] for x in lines] == ["depth", "suite"]


def test_validate_verify_params_accepts_minimal_predicates(verify_params):
    verify_params["suite"] = c.SUITE_MINIMAL_PREDICATES
    assert validate_verify_params(verify_params)["suite"] == "minimal-predicates"
