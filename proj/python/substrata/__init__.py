"""Python access to the substrata engine.

Each command wrapper runs the corresponding CLI verb and returns its JSON
report as a dict. Bad input or data raises SubstrataError; failed checks are
reported through the "passed" fields, not raised.
"""

import json
import os

from . import _core
from ._core import character_table, fake_degrees, invariant_degrees, j_induce

__all__ = [
    "SubstrataError",
    "chartable",
    "character_table",
    "check",
    "compare_regimes",
    "data_directory",
    "fake_degrees",
    "fakedeg",
    "invariant_degrees",
    "j_induce",
    "strata",
    "substrata",
    "validate_data",
]


class SubstrataError(RuntimeError):
    pass


def data_directory():
    env = os.environ.get("SUBSTRATA_DATA_DIR")
    if env:
        return env
    bundled = os.path.join(os.path.dirname(__file__), "data")
    if os.path.isdir(bundled):
        return bundled
    return _core.default_data_directory()


def _run(verb, type="", flavor=None, regime="p0odd", data_dir=None):
    status, out, err = _core.run(verb, type, flavor, regime, data_dir or data_directory(), "json")
    if status == 2:
        raise SubstrataError(err.strip())
    return json.loads(out)


def chartable(type, flavor=None):
    return _run("chartable", type, flavor)


def fakedeg(type, flavor=None):
    return _run("fakedeg", type, flavor)


def substrata(type, regime="p0odd", flavor=None, data_dir=None):
    return _run("substrata", type, flavor, regime, data_dir)


def strata(type, regime="p0odd", flavor=None, data_dir=None):
    return _run("strata", type, flavor, regime, data_dir)


def check(type, regime="p0odd", flavor=None, data_dir=None):
    return _run("check", type, flavor, regime, data_dir)


def compare_regimes(type, flavor=None, data_dir=None):
    return _run("compare-regimes", type, flavor, data_dir=data_dir)


def validate_data(type="", data_dir=None):
    return _run("validate-data", type, data_dir=data_dir)
