"""
Utility functions used inside several modules.

"""

import json
import logging
import os
import sys
import time
from typing import Optional, TextIO
from tqdm import tqdm as cli_bar
from . import _constants as c

logger = logging.getLogger(__name__)


def get_ltlc_path() -> str:
    """
    Returns the path to the directory where config files are stored.

    The ``LTLC_HOME`` environment variable overrides the default
    ``~/.ltlc``.

    Returns
    -------
    path : str
    """
    path = os.environ.get(c.HOME_ENV)
    if not path:
        path = os.path.join("~", ".ltlc")
    return os.path.expanduser(path)


def default_settings() -> dict:
    settings = {
        "n_jobs": 1,
        "max_states": 3,
        "atoms": 2,
        "color": None,
    }
    return settings


def get_settings() -> dict:
    """
    Loads the settings into a dictionary object.

    User settings stored in ``settings.json`` inside :func:`get_ltlc_path`
    update the defaults. Unknown keys are ignored.

    Returns
    -------
    settings : dict

    """
    settings = default_settings()
    settings_path = os.path.join(get_ltlc_path(), c.SETTINGS_FILENAME)
    if os.path.isfile(settings_path):
        with open(settings_path, "r", encoding="utf8") as fin:
            try:
                user_settings = json.load(fin)
            except json.JSONDecodeError:
                logger.warning("ignoring malformed settings file %s", settings_path)
                user_settings = dict()
        settings.update({k: v for k, v in user_settings.items() if k in settings})
    return settings


def use_color(stream: Optional[TextIO] = None, settings: Optional[dict] = None) -> bool:
    """
    Decides if the output should be colored.

    ``LTLC_COLOR=0|1`` takes precedence over the ``color`` setting. If both
    are unset, color is used only when `stream` is a terminal.

    """
    stream = sys.stdout if stream is None else stream
    value = os.environ.get(c.COLOR_ENV)
    if value in ("0", "1"):
        return value == "1"
    if settings is None:
        settings = get_settings()
    if settings.get("color") is not None:
        return bool(settings["color"])
    return hasattr(stream, "isatty") and stream.isatty()


def get_progress_bar():
    return cli_bar


def dump_json(payload: dict) -> str:
    """Serializes a payload with stable key order and LF line endings."""
    return json.dumps(payload, indent=2, ensure_ascii=False)


class RecordExecutionTime(object):
    """
    Context manager that logs the time spent in its block.

    Parameters
    ----------
    name : str, optional
        Label of the timed block.

    Examples
    --------
    >>> with RecordExecutionTime("correspondence suite"):
    ...     run_suite()

    """

    def __init__(self, name: Optional[str] = None):
        self.name = name
        self.start = None
        self.duration = None

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *args):
        self.duration = time.perf_counter() - self.start
        duration = self.duration
        unit = "seconds"
        if duration > 60 * 60:
            duration = duration / 60 / 60
            unit = "hours"
        elif duration > 60:
            duration = duration / 60
            unit = "minutes"
        elif duration < 1:
            duration = duration * 1e3
            unit = "milli-seconds"
        label = self.name if self.name else "block"
        logger.info("%s took %.1f %s to execute", label, duration, unit)
