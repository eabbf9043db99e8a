"""Exact Fitting ideals over (Z/p^M)[G] and cyclotomic Stickelberger elements."""

import json
from fractions import Fraction

from ._core import (
    Element,
    Group,
    Ideal,
    InputError,
    ResidueRing,
    catalog,
    dual_path_agrees,
    fitt,
    ideal,
    lift_unit,
    minor_escapes,
    minors,
    shifted_fitting_triangle,
    verify_minQ_zero,
)
from . import _core

__all__ = [
    "Element",
    "Group",
    "Ideal",
    "InputError",
    "ResidueRing",
    "catalog",
    "dual_path_agrees",
    "fitt",
    "fitt_json",
    "ideal",
    "lift_unit",
    "minor_escapes",
    "minors",
    "shifted_fitting_triangle",
    "stickelberger",
    "verify",
    "verify_minQ_zero",
]


def stickelberger(m, S=(), T=()):
    """Theta_S^T(0) for Q(zeta_m)/Q as {label a: Fraction}, plus metadata."""
    out = json.loads(_core.stickelberger_json(m, list(S), list(T)))
    out["theta"] = {a: Fraction(int(n), int(d)) for a, (n, d) in zip(out["labels"], out["coeffs"])}
    return out


def fitt_json(document, e=0):
    """Howell rows of Fitt_e for a presentation given as a JSON string or dict."""
    if not isinstance(document, str):
        document = json.dumps(document)
    return json.loads(_core.fitt_json(document, e))


def verify(suite="all", p=3, M=(1, 2, 3), jobs=1):
    """Run a verification suite and return the report as a dict."""
    return json.loads(_core.verify_json(suite, p, list(M), jobs))
