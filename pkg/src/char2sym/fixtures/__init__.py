"""Bundled regression matrices (worked 6x6 examples over F2(t))."""

import json
from importlib import resources


def fixture_path(name: str):
    """Filesystem path of a bundled fixture file."""
    return resources.files(__package__).joinpath(name)


def load_json(name: str):
    with fixture_path(name).open("r", encoding="utf-8") as handle:
        return json.load(handle)


def load_matrix(field, name: str):
    from ..linalg import matrix_from_strings

    return matrix_from_strings(field, load_json(name))
