"""Exact arithmetic for sign matrix polytopes.

Matrices are nested lists, rationals exact "p/q" strings, families the
same dictionaries the CLI's JSON uses, e.g. {"variant": "shape",
"shape": [2, 2], "n": 3}.
"""

from ._core import (
    check_sign_matrix,
    conjugate,
    decompose,
    enumerate_family,
    enumerate_ssyt,
    enumerate_ssyt_first_column,
    face_lattice_dims,
    facet_count,
    facet_equalities,
    frequency_rep,
    gordon_count,
    hook_content_count,
    in_family,
    integer_points,
    is_asm,
    membership,
    pad_embed,
    run_suite,
    to_sign_matrix,
    to_tableau,
    transportation_spec,
    verify_facets,
    verify_vertex,
    vertex_certificate,
)

__all__ = [
    "check_sign_matrix",
    "conjugate",
    "decompose",
    "enumerate_family",
    "enumerate_ssyt",
    "enumerate_ssyt_first_column",
    "face_lattice_dims",
    "facet_count",
    "facet_equalities",
    "frequency_rep",
    "gordon_count",
    "hook_content_count",
    "in_family",
    "integer_points",
    "is_asm",
    "membership",
    "pad_embed",
    "run_suite",
    "to_sign_matrix",
    "to_tableau",
    "transportation_spec",
    "verify_facets",
    "verify_vertex",
    "vertex_certificate",
]
