"""Proof search, checking and interpolation for propositional team logic.

Formulas and sequents are passed as text (``p || ~p``, ``p, q => p & q``);
derivations, teams and reports come back as plain dicts.
"""

import json

from . import _teamproof
from ._teamproof import (  # noqa: F401
    ParseError,
    ResourceLimit,
    TeamproofError,
    closure,
    is_classical,
    render_formula,
    resolutions,
    sequent_valid,
)

__all__ = [
    "ParseError",
    "ResourceLimit",
    "TeamproofError",
    "check",
    "closure",
    "countermodel",
    "eliminate_cuts",
    "interpolate",
    "is_classical",
    "normalize",
    "prove",
    "render_formula",
    "resolutions",
    "resolve",
    "satisfies",
    "sequent_valid",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def prove(sequent, budget=1_000_000):
    """{"valid": True, "derivation": ...} or {"valid": False, "countermodel": ...}"""
    return json.loads(_teamproof.prove(sequent, budget))


def countermodel(sequent, max_vars=4):
    return json.loads(_teamproof.countermodel(sequent, max_vars))


def satisfies(formula, team):
    return _teamproof.satisfies(formula, _text(team))


def check(derivation, calculus="gt"):
    """(ok, message); message locates the first bad inference."""
    return _teamproof.check(_text(derivation), calculus)


def normalize(derivation):
    return json.loads(_teamproof.normalize(_text(derivation)))


def eliminate_cuts(derivation):
    return json.loads(_teamproof.eliminate_cuts(_text(derivation)))


def resolve(derivation):
    return json.loads(_teamproof.resolve(_text(derivation)))


def interpolate(partition, budget=1_000_000):
    return json.loads(_teamproof.interpolate(partition, budget))
