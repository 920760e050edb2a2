"""Holomorphic disk invariants of Legendrian links from plat fronts."""

import json

from . import _lchkit
from ._lchkit import Diagram, Front, LchkitError, find_obstruction_zero, obstruction_integral, obstruction_quadrature

__all__ = [
    "Diagram",
    "Front",
    "LchkitError",
    "census",
    "chords",
    "dga",
    "find_obstruction_zero",
    "n_copy",
    "obstruction_integral",
    "obstruction_quadrature",
    "render",
    "resolve",
    "rigid_disks",
]


def _diagram(source, require_plat=True):
    if isinstance(source, Diagram):
        return source
    if isinstance(source, Front):
        return _lchkit.resolve(source, require_plat)
    text = str(source)
    if text.lstrip().startswith("{"):
        return _lchkit.diagram_from_json(text)
    return _lchkit.resolve(Front(text), require_plat)


def resolve(source, require_plat=True):
    """Lagrangian resolution of a front word, Front, or diagram JSON."""
    return _diagram(source, require_plat)


def n_copy(source, n):
    return _lchkit.n_copy(_diagram(source), n)


def rigid_disks(source, enforce_no_touching=True):
    return json.loads(_lchkit.rigid_disks_json(_diagram(source), enforce_no_touching))["disks"]


def dga(source, with_t_marker=False):
    return json.loads(_lchkit.dga_json(_diagram(source), with_t_marker))


def chords(source):
    return json.loads(_lchkit.chords_json(_diagram(source)))["chords"]


def census(source):
    return json.loads(_lchkit.census_json(_diagram(source)))


def render(source, highlight=(), labels=True):
    return _lchkit.render_svg(_diagram(source), list(highlight), labels)
