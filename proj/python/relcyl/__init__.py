"""Finite relativized cylindric-type algebras: axiom checks, set algebras,
representation games and duality, backed by a C++ core.

Algebras, units, frames and representations are plain dicts in the same JSON
layout the ``relcyl`` command-line tool reads and writes.
"""

import json

from . import _core
from ._core import (
    BudgetError,
    FormatError,
    IndexError,
    InvariantError,
    PreconditionError,
    RelcylError,
    SignatureError,
)

__all__ = [
    "validate", "check", "abstract", "classify", "represent", "verify", "reduct",
    "define_diagonals", "hat", "decompose", "eval", "complex_algebra", "tuple_frame",
    "RelcylError", "IndexError", "SignatureError", "FormatError", "BudgetError",
    "PreconditionError", "InvariantError",
]


def _enc(x):
    return x if isinstance(x, str) else json.dumps(x)


def validate(algebra):
    """Structural problems of a finite BAO; empty list when well formed."""
    return json.loads(_core.validate(_enc(algebra)))


def check(algebra, system):
    """Axiom violations for system in {"PTA", "TA", "SA", "TEA"}."""
    return json.loads(_core.check(_enc(algebra), system))


def abstract(unit, signature):
    return json.loads(_core.abstract(_enc(unit), signature))


def classify(unit):
    return json.loads(_core.classify(_enc(unit)))


def represent(algebra, mode, strategy="atomic-fast", reuse=True, max_rounds=10000, max_nodes=512):
    """Plays the game; returns play, representation, verify report and completeness."""
    return json.loads(_core.represent(_enc(algebra), mode, strategy, reuse, max_rounds, max_nodes))


def verify(algebra, representation, mode):
    return json.loads(_core.verify(_enc(algebra), _enc(representation), mode))


def reduct(algebra, signature):
    return json.loads(_core.reduct(_enc(algebra), signature))


def define_diagonals(algebra):
    return json.loads(_core.define_diagonals(_enc(algebra)))


def hat(word, n):
    return json.loads(_core.hat(_enc(word), n))


def decompose(mapping):
    return json.loads(_core.decompose(list(mapping)))


def eval(algebra, term, variables=None):
    """Value of a term; variables maps variable index to a list of atoms."""
    env = {str(k): v for k, v in (variables or {}).items()}
    return json.loads(_core.eval(_enc(algebra), term, json.dumps(env)))


def complex_algebra(frame):
    return json.loads(_core.complex_algebra(_enc(frame)))


def tuple_frame(unit):
    return json.loads(_core.tuple_frame(_enc(unit)))
