"""Exact workbench for U_q[osp(m|n)]-invariant spectral R-matrices.

Thin JSON-bridged bindings over the C++ core; see the ybe-forge CLI for
the same operations on the command line.
"""

import json as _json

from ._core import (  # noqa: F401
    DegenerateParameterError,
    ForgeError,
    PoleError,
    UsageError,
    __version__,
    bracket_eval,
    bracket_json,
    casimir,
    coefficients_json,
    decompose_json,
    rmatrix_json,
    tpg_dot,
    verify_json,
)


def decompose(m, n, a, b):
    """Decomposition grid of V(lambda_a) (x) V(lambda_b) as a dict."""
    return _json.loads(decompose_json(m, n, a, b))


def coefficients(m, n, a, b, t="6/5"):
    """Graph coefficients rho_{c,k} as {node: {num, den}} dicts."""
    return _json.loads(coefficients_json(m, n, a, b, t))


def rmatrix(m, n, a, b, t="6/5", no_cache=False):
    """Assembled spectral R-matrix in the documented JSON layout."""
    return _json.loads(rmatrix_json(m, n, a, b, t, no_cache))


def verify(m, n, a, b, t="6/5", suite="full", seed=1, perturb=False, no_cache=False):
    """Exact verification reports; ["all_pass"] is the overall verdict."""
    return _json.loads(verify_json(m, n, a, b, t, suite, seed, perturb, no_cache))
