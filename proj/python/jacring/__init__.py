"""Generalized Jacobian rings of open complete intersections.

Thin wrapper over the compiled ``_core`` extension; instances travel as JSON
strings matching the CLI's file format.
"""

from ._core import (  # noqa: F401
    Ring,
    certify_transversality,
    duality_check,
    griffiths_hypersurface,
    instance_digest,
    koszul_exactness_check,
    multiplication_kernel,
    random_instance,
    residue_matrix_check,
)

__all__ = [
    "Ring",
    "certify_transversality",
    "duality_check",
    "griffiths_hypersurface",
    "instance_digest",
    "koszul_exactness_check",
    "multiplication_kernel",
    "random_instance",
    "residue_matrix_check",
]
