"""Curvature operator of the second kind: spectra, alpha-sums and rigidity checks."""

import json

from ._core import (
    CurvatureTensor,
    NumericError,
    ParseError,
    ValidationError,
    a_const,
    alpha_sum,
    b_const,
    build_tensor,
    classify,
    einstein_constant,
    f_lemma,
    kahler_space_form,
    product,
    random_curvature,
    run_cli,
    scalar,
    space_form,
    spectrum,
    thresholds,
)
from . import _core


def check_rigidity(case, **kwargs):
    """Run a rigidity harness and return its report as a dict."""
    return json.loads(_core.check_rigidity_json(case, **kwargs))


def report(descriptor, alphas=(), thresholds_only=False):
    """Full report for a descriptor given as a dict or a JSON string."""
    if not isinstance(descriptor, str):
        descriptor = json.dumps(descriptor)
    return json.loads(_core.report_json(descriptor, list(alphas), thresholds_only))


__all__ = [
    "CurvatureTensor",
    "NumericError",
    "ParseError",
    "ValidationError",
    "a_const",
    "alpha_sum",
    "b_const",
    "build_tensor",
    "check_rigidity",
    "classify",
    "einstein_constant",
    "f_lemma",
    "kahler_space_form",
    "product",
    "random_curvature",
    "report",
    "run_cli",
    "scalar",
    "space_form",
    "spectrum",
    "thresholds",
]
