"""Exact category O computations for D(2|1;zeta).

Weights are rho-shifted integer triples; zeta is "generic" or "p/d".
Flags, composition factors and characters come back as dicts keyed by triples.
"""

import json

from ._core import (
    ComputationError,
    UsageError,
    block,
    classify,
    composition_factors,
    projective_flag,
    simple_character,
    tilting_flag,
    verma_character,
    _verify_json,
)


def verify(suite, zeta="generic", **opts):
    """Run a verification suite and return its report as a dict."""
    return json.loads(_verify_json(suite, zeta, **opts))


__all__ = [
    "ComputationError",
    "UsageError",
    "block",
    "classify",
    "composition_factors",
    "projective_flag",
    "simple_character",
    "tilting_flag",
    "verma_character",
    "verify",
]
