"""Heegaard diagram homology, linking forms and embedding obstructions."""

import json

from ._core import (
    BoundExceeded,
    Diagram,
    ParseError,
    b_fixture,
    bar_stabilize,
    connected_sum,
    hat_stabilize,
    is_hyperbolic,
    lens,
    mirror,
    torsion_order,
)
from . import _core

__all__ = [
    "BoundExceeded",
    "Diagram",
    "ParseError",
    "b_fixture",
    "bar_stabilize",
    "connected_sum",
    "diagonalize",
    "hat_stabilize",
    "homology",
    "is_hyperbolic",
    "lens",
    "linking_form",
    "mirror",
    "report",
    "search_q",
    "torsion_order",
    "ub0",
]


def homology(d):
    return json.loads(_core.homology_json(d))


def linking_form(d):
    return json.loads(_core.linkform_json(d))


def diagonalize(d):
    return json.loads(_core.diagonalize_json(d))


def report(d, bound=10000, threads=1):
    return json.loads(_core.report_json(d, bound, threads))


def search_q(theta="rotation", genus=1, entries=1, threads=1, matrix=None):
    """Search Lagrangians with entries in [-entries, entries]; matrix overrides theta."""
    return json.loads(_core.search_q_json(theta, genus, entries, threads, matrix))


def ub0(theta="ub0", bound=50, matrix=None):
    return json.loads(_core.ub0_json(theta, bound, matrix))
