"""Optimal coloring of square-free Grenoble graphs."""

import json

from ._core import (
    ClassViolation,
    Error,
    Graph,
    InputError,
    LemmaViolation,
    ParseError,
    ResourceError,
    chromatic_number,
    classify,
    clique_number,
    find_any_even_pair,
    gen_even_prism,
    gen_violator,
    is_even_pair,
    verify_coloring,
)
from ._core import color as _color
from ._core import generate as _generate


def color(graph, parallel=False):
    """Coloring, clique and decomposition tree (parsed from JSON)."""
    result = _color(graph, parallel)
    result["tree"] = json.loads(result["tree"])
    return result


def generate(spec):
    """Graph for a generator spec given as a dict, or None if sampling gave up."""
    return _generate(json.dumps(spec))


__all__ = [
    "ClassViolation",
    "Error",
    "Graph",
    "InputError",
    "LemmaViolation",
    "ParseError",
    "ResourceError",
    "chromatic_number",
    "classify",
    "clique_number",
    "color",
    "find_any_even_pair",
    "gen_even_prism",
    "gen_violator",
    "generate",
    "is_even_pair",
    "verify_coloring",
]
