"""Exact verification of charged free boson identities."""

import json as _json

from ._core import BtauError, fock_census, suite_names, verify_identity, verify_space
from ._core import borchardt as _borchardt
from ._core import run_suite as _run_suite


def borchardt(z, w):
    """Borchardt record for points given as ints, Fractions or rational strings."""
    return _json.loads(_borchardt([str(v) for v in z], [str(v) for v in w]))


def run_suite(suite, **config):
    """Runs a named suite and returns the parsed JSON report."""
    return _json.loads(_run_suite(suite, **config))


__all__ = [
    "BtauError",
    "borchardt",
    "fock_census",
    "run_suite",
    "suite_names",
    "verify_identity",
    "verify_space",
]
