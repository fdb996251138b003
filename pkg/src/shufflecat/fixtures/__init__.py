"""Built-in base categories and monoids shipped as JSON documents."""

from __future__ import annotations

import json
from importlib import resources

__all__ = [
    "builtin_base",
    "builtin_base_names",
    "builtin_monoid",
    "builtin_monoid_doc",
    "builtin_monoid_names",
    "load_json_resource",
]

_BASE_NAMES = ("terminal", "discrete2", "arrow")
_MONOID_NAMES = ("z2",)


def load_json_resource(filename: str) -> dict:
    text = resources.files(__package__).joinpath(filename).read_text()
    return json.loads(text)


def builtin_base_names() -> tuple[str, ...]:
    return _BASE_NAMES


def builtin_base(name: str):
    """A fresh FinCat for one of the built-in base categories."""
    if name not in _BASE_NAMES:
        raise KeyError(f"no built-in base category named {name!r}")
    from shufflecat.fincat import load_fincat

    return load_fincat(load_json_resource(name + ".json"))


def builtin_monoid_names() -> tuple[str, ...]:
    return _MONOID_NAMES


def builtin_monoid_doc(name: str) -> dict:
    """The parsed JSON document for one of the built-in monoids."""
    if name not in _MONOID_NAMES:
        raise KeyError(f"no built-in monoid named {name!r}")
    return load_json_resource(name + ".json")


def builtin_monoid(name: str):
    """A fresh CommMonoid for one of the built-in monoids."""
    from shufflecat.fincat import load_monoid

    return load_monoid(builtin_monoid_doc(name))
