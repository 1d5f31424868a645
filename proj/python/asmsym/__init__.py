"""Symmetry classes of alternating sign matrices.

Thin wrapper over the C++ core: exact bivariate polynomials, determinant
generating functions, class enumeration and the identity checks.
"""

from ._core import (
    InexactDivision,
    MissingData,
    Poly,
    asms,
    binom,
    count,
    delta,
    divexact,
    enum_sccpp,
    enum_shifted_pp,
    enum_tri_array,
    factor,
    genfun,
    pochhammer,
    r_poly,
    t_poly,
    verify,
    z_poly,
)

__all__ = [
    "InexactDivision",
    "MissingData",
    "Poly",
    "asms",
    "binom",
    "count",
    "delta",
    "divexact",
    "enum_sccpp",
    "enum_shifted_pp",
    "enum_tri_array",
    "factor",
    "genfun",
    "pochhammer",
    "r_poly",
    "t_poly",
    "verify",
    "z_poly",
]
