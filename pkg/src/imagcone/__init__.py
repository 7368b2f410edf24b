"""Exact based root systems of Coxeter groups and their imaginary cones."""

from .exactfield import QQ, FieldSpec, Scalar
from .polycone import PolyCone
from .rootsys import BasedRootSystem, Root, build_from_gram, build_from_labels, build_from_vectors

__all__ = [
    "QQ",
    "BasedRootSystem",
    "FieldSpec",
    "PolyCone",
    "Root",
    "Scalar",
    "build_from_gram",
    "build_from_labels",
    "build_from_vectors",
]
