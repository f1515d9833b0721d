"""Finite domination of chain complexes over Laurent polynomial rings."""

from ._findom import (
    Complex,
    ParseError,
    cone,
    example_square,
    field_check,
    findom,
    homology,
    mapping_torus,
    novikov,
    random_complex,
    read_complex,
)

__all__ = [
    "Complex",
    "ParseError",
    "cone",
    "example_square",
    "field_check",
    "findom",
    "homology",
    "mapping_torus",
    "novikov",
    "random_complex",
    "read_complex",
]
