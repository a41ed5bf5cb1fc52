"""Exact case analysis for spherical tilings by congruent pentagons."""

import json

from ._core import (  # noqa: F401
    GeometryError,
    HypothesisViolated,
    angle_system,
    compute_avc,
    fangle_eval,
    lmn,
    minimal_case_f,
    pqr,
    propagation_table,
    render_table,
    theorem_report_json,
    theta_alpha_admissible_f,
    theta_alpha_family_table,
    vertex_family_table,
)


def theorem_report(tolerance: float = 0.0) -> dict:
    """Full report as a dict (schema 1)."""
    return json.loads(theorem_report_json(tolerance))
