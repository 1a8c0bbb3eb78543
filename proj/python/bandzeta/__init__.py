"""Exact band combinatorics for bound quiver presentations.

The heavy lifting lives in the compiled extension ``bandzeta._core``;
this package re-exports it and adds a JSON-decoding convenience wrapper
around the full analytics pipeline.
"""

from __future__ import annotations

import json as _json

from ._core import (
    ConvergenceError,
    InternalConsistencyError,
    ParseError,
    PreconditionError,
    Presentation,
    ResourceLimitError,
    adjacency,
    analyze_json,
    bands,
    classify,
    dot,
    graph,
    load,
    load_file,
    mu_sequence,
    normalize,
    parse,
    parse_file,
    pi_sequence,
    strings,
    tilde,
    trace_sequence,
    validate,
    zeta_series,
)

__version__ = "0.1.0"


def analyze(
    presentation: Presentation,
    terms: int = 20,
    pnt_from: int = 40,
    pnt_to: int = 60,
) -> dict:
    """Full analytics report as a Python dictionary.

    Arbitrary-precision integer sequences appear as lists of decimal
    strings, exactly as in the JSON report emitted by the command line
    tool.
    """
    return _json.loads(analyze_json(presentation, terms, pnt_from, pnt_to))


__all__ = [
    "ConvergenceError",
    "InternalConsistencyError",
    "ParseError",
    "PreconditionError",
    "Presentation",
    "ResourceLimitError",
    "adjacency",
    "analyze",
    "analyze_json",
    "bands",
    "classify",
    "dot",
    "graph",
    "load",
    "load_file",
    "mu_sequence",
    "normalize",
    "parse",
    "parse_file",
    "pi_sequence",
    "strings",
    "tilde",
    "trace_sequence",
    "validate",
    "zeta_series",
]
