"""Cuspidal-cubic line arrangements over finite fields.

Text-based wrappers over the C++ core: arrangement, triple-system, points and
ideal payloads are exchanged as strings in the same formats the `tripoints`
binary reads and writes.
"""

from ._core import (
    audit,
    automorphism_order,
    build,
    collinear_params,
    cubic_fit,
    dual_points,
    export_ideal,
    extract_triples,
    group_add,
    is_steiner,
    isomorphic,
    make_projection,
    make_sum,
    make_zero_sum,
    realize,
    restrict,
    spectrum,
)

__all__ = [
    "audit",
    "automorphism_order",
    "build",
    "collinear_params",
    "cubic_fit",
    "dual_points",
    "export_ideal",
    "extract_triples",
    "group_add",
    "is_steiner",
    "isomorphic",
    "make_projection",
    "make_sum",
    "make_zero_sum",
    "realize",
    "restrict",
    "spectrum",
]

__version__ = "1.0.0"
