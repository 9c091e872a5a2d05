"""Exact Möbius cohomology of poset modules.

Posets and modules are read from the same JSON documents the ``mobius`` tool uses.
Anything that takes a document accepts a dict, a JSON string or a path.
"""

import json
import os

from ._core import (
    CycleError,
    FunctorialityError,
    MobiusError,
    Module,
    NotASpread,
    NotMonotone,
    ParseError,
    Poset,
    SizeCap,
    adjunctions,
    enumerate_galois,
    functor_equalities,
    is_galois_connection,
    lower_inversion,
    rota_classical,
    rota_ext,
    rota_inversion,
    upper_inversion,
)
from ._core import selftest as _selftest

__all__ = [
    "CycleError",
    "FunctorialityError",
    "MobiusError",
    "Module",
    "NotASpread",
    "NotMonotone",
    "ParseError",
    "Poset",
    "SizeCap",
    "adjunctions",
    "enumerate_galois",
    "functor_equalities",
    "is_galois_connection",
    "load_module",
    "load_poset",
    "lower_inversion",
    "rota_classical",
    "rota_ext",
    "rota_inversion",
    "selftest",
    "upper_inversion",
]


def _text(doc):
    if isinstance(doc, dict):
        return json.dumps(doc)
    if isinstance(doc, os.PathLike) or (isinstance(doc, str) and not doc.lstrip().startswith("{")):
        with open(doc, encoding="utf-8") as fh:
            return fh.read()
    return doc


def load_poset(doc):
    return Poset.from_json(_text(doc))


def load_module(doc, poset=None):
    return Module.from_json(_text(doc), poset)


def selftest(seed=42, trials=200, jobs=1):
    """Run the random-property battery and return the report as a dict."""
    return json.loads(_selftest(seed, trials, jobs))
