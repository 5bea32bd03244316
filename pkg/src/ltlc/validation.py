"""
Validation functions for oracle bounds, generator parameters, CLI options
and JSON output.
"""

import json
import cerberus
from functools import lru_cache
from importlib import resources
from . import _constants as c


def validate(params: dict, validator: cerberus.Validator) -> dict:
    """
    Validates `params` against the schema of `validator`.

    Returns
    -------
    dict
        The normalized document.

    Raises
    ------
    ValueError
        One ``field: error`` line per offending field.

    """
    if validator.validate(params):
        return validator.document
    lines = [
        "{}: {}".format(field, error)
        for field, errors in sorted(validator.errors.items())
        for error in errors
    ]
    raise ValueError("\n".join(lines))


class OracleValidator(cerberus.Validator):
    def _validate_bits_with(self, other, field, value):
        """
        Tests if the number of valuation bits, the product of the value and
        the value of other field, is within the enumeration guard.

        The rule's arguments are validated against this schema:
        {"type": "string"}
        """
        if (other not in self.document) or (self.document[other] is None):
            return False
        if value * self.document[other] > c.MAX_VALUATION_BITS:
            msg = "{} * {} must be lower or equal than {}".format(
                field, other, c.MAX_VALUATION_BITS
            )
            self._error(field, msg)

    def _validate_is_positive(self, is_positive, field, value):
        """
        Tests if a value is positive

        The rule's arguments are validated against this schema:
        {"type": "boolean"}
        """
        if is_positive and (value is not None) and (value <= 0):
            msg = "Must be a positive number"
            self._error(field, msg)


def validate_oracle_bounds(params: dict) -> dict:
    """
    Checks the frame size and the number of atoms of an exhaustive check.

    Parameters
    ----------
    params : dict
        ``n_max`` and ``n_atoms``.

    Raises
    ------
    ValueError

    """
    schema = {
        "n_max": {
            "type": "integer",
            "min": 1,
            "max": c.MAX_FRAME_STATES,
            "bits_with": "n_atoms",
        },
        "n_atoms": {"type": "integer", "min": 0, "max": c.MAX_ATOMS},
    }
    validator = OracleValidator(schema)
    return validate(params, validator)


def validate_generator_params(params: dict) -> dict:
    schema = {
        "depth": {"type": "integer", "min": 0, "max": 8},
        "n_atoms": {"type": "integer", "min": 1, "max": c.MAX_ATOMS},
    }
    validator = OracleValidator(schema)
    return validate(params, validator)


def validate_verify_params(params: dict) -> dict:
    """
    Checks the options of the verify command.

    Raises
    ------
    ValueError

    """
    schema = {
        "formula": {"type": "string", "nullable": True},
        "random": {"type": "integer", "nullable": True, "is_positive": True},
        "seed": {"type": "integer", "nullable": True},
        "depth": {"type": "integer", "min": 0, "max": 8},
        "max_states": {
            "type": "integer",
            "min": 1,
            "max": c.MAX_FRAME_STATES,
            "bits_with": "atoms",
        },
        "atoms": {"type": "integer", "min": 1, "max": c.MAX_ATOMS},
        "suite": {"type": "string", "allowed": c.SUITES},
        "n_jobs": {"type": "integer", "nullable": True},
    }
    validator = OracleValidator(schema)
    params = validate(params, validator)
    if (params["formula"] is None) == (params["random"] is None):
        raise ValueError("formula: give either a formula or --random")
    return params


@lru_cache(maxsize=None)
def load_output_schema() -> dict:
    """Cerberus schemas of the --json output, keyed by command."""
    path = resources.files("ltlc") / "data" / "output_schema.json"
    text = path.read_text(encoding="utf8")
    return json.loads(text)


def validate_output(command: str, payload: dict) -> dict:
    """
    Checks a --json payload against the shipped output schema.

    Raises
    ------
    ValueError

    """
    schema = load_output_schema()[command]
    validator = cerberus.Validator(schema)
    return validate(payload, validator)
