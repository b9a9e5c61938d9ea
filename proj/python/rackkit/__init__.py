"""Exact verification of rack bialgebras given by structure constants."""

import json

from ._rackkit import (
    Error,
    ParseError,
    PreconditionError,
    Rack,
    ResourceError,
    builtin_names,
    deformation_complex,
    enveloping,
    run_cli,
)

__all__ = [
    "Error",
    "ParseError",
    "PreconditionError",
    "Rack",
    "ResourceError",
    "builtin_names",
    "cli",
    "deformation_complex",
    "enveloping",
    "run_cli",
]


def cli(*args):
    """Run a subcommand and return (exit code, parsed JSON report)."""
    code, text = run_cli([str(a) for a in args])
    return code, json.loads(text)
