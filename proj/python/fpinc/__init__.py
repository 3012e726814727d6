import json

from . import _fpinc
from ._fpinc import FpincError, InvariantViolation, __version__, count, generate

__all__ = [
    "FpincError",
    "InvariantViolation",
    "__version__",
    "count",
    "default_config",
    "generate",
    "permissive_config",
    "pipeline",
    "rudnev",
    "verify",
]


def default_config():
    return json.loads(_fpinc.default_config())


def permissive_config():
    return json.loads(_fpinc.permissive_config())


def pipeline(text, config=None):
    """Run the reduction on instance text; returns the report as a dict."""
    config_json = "" if config is None else json.dumps(config)
    return json.loads(_fpinc.pipeline(text, config_json))


def verify(report):
    """Recheck a report dict; returns (ok, [(field, reported, recomputed), ...])."""
    return _fpinc.verify(json.dumps(report))


def rudnev(values, p):
    return json.loads(_fpinc.rudnev(list(values), p))
