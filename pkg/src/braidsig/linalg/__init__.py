"""Exact linear algebra over the integers and rationals."""

from .inertia import (
    Inertia,
    SymmetricIntMatrix,
    determinant,
    inertia,
    signature_and_nullity,
    symmetrize,
)

__all__ = [
    "Inertia",
    "SymmetricIntMatrix",
    "determinant",
    "inertia",
    "signature_and_nullity",
    "symmetrize",
]
