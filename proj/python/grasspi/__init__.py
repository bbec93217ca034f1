"""Membership tests for T(G) and CP(G), G the Grassmann algebra with unit over F_q."""

import json

from . import _core
from ._core import (
    BoundError,
    ConfigError,
    DomainError,
    InternalError,
    ParseError,
    PreconditionError,
    canonicalize,
    normalize,
    run_criterion,
)

__all__ = [
    "BoundError",
    "ConfigError",
    "DomainError",
    "InternalError",
    "ParseError",
    "PreconditionError",
    "canonicalize",
    "check_central",
    "check_identity",
    "normalize",
    "one_variable",
    "reverify",
    "run_criterion",
]


def _decide(command, expr, q, modulus=(), seed=0):
    return json.loads(_core.decide_json(command, expr, q, list(modulus), seed))


def check_identity(expr, q, modulus=(), seed=0):
    """Report dict for membership of `expr` in the identities of G over F_q."""
    return _decide("check-identity", expr, q, modulus, seed)


def check_central(expr, q, modulus=(), seed=0):
    """Report dict for membership of `expr` in the central polynomials of G."""
    return _decide("check-central", expr, q, modulus, seed)


def one_variable(expr, q, modulus=()):
    """Divisibility of a one-variable polynomial by x^(qp) - x^p."""
    return _decide("one-variable", expr, q, modulus)


def reverify(report, expr, q, modulus=()):
    """Re-evaluate the witness stored in `report` and compare with its value."""
    return _core.reverify_json(json.dumps(report), expr, q, list(modulus))
