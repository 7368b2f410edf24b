"""Ready-made root systems used throughout the tests and the CLI."""

from __future__ import annotations

from .exactfield import QQ, FieldSpec, Number, S
from .rootsys import BasedRootSystem, build_from_gram, build_from_labels, build_from_vectors

INF = "inf"


def finite(name: str) -> BasedRootSystem:
    """Finite types A2, A3, B3, H3, G2 (and A1)."""
    labels = {
        "A1": [[1]],
        "A2": [[1, 3], [3, 1]],
        "A3": [[1, 3, 2], [3, 1, 3], [2, 3, 1]],
        "B3": [[1, 4, 2], [4, 1, 3], [2, 3, 1]],
        "H3": [[1, 5, 2], [5, 1, 3], [2, 3, 1]],
        "G2": [[1, 6], [6, 1]],
    }[name]
    return build_from_labels(labels)


def affine_a1() -> BasedRootSystem:
    return build_from_labels([[1, INF], [INF, 1]])


def affine_a2() -> BasedRootSystem:
    return build_from_labels([[1, 3, 3], [3, 1, 3], [3, 3, 1]])


def dihedral(c: Number | str, field: FieldSpec = QQ) -> BasedRootSystem:
    """Rank two with ``<alpha, beta> = c``."""
    c = S(c) if not isinstance(c, str) else S(c)
    return build_from_gram(field, [[1, c], [c, 1]], ("alpha", "beta"))


def universal(n: int, c: Number | str = -1, field: FieldSpec = QQ) -> BasedRootSystem:
    """All distinct simple roots pair to ``c``; ``c = -1`` is the standard universal system."""
    c = S(c)
    G = [[1 if i == j else c for j in range(n)] for i in range(n)]
    names = ("alpha", "beta", "gamma", "delta", "epsilon")[:n] if n <= 5 else ()
    return build_from_gram(field, G, names)


def two_affine_bridge() -> BasedRootSystem:
    """Two affine pairs {alpha, beta}, {delta, epsilon} joined through gamma by
    simple bonds; the Gram matrix has signature (3, 1, 1)."""
    h = S("-1/2")
    G = [
        [1, -1, 0, 0, 0],
        [-1, 1, h, 0, 0],
        [0, h, 1, h, 0],
        [0, 0, h, 1, -1],
        [0, 0, 0, -1, 1],
    ]
    return build_from_gram(QQ, G, ("alpha", "beta", "gamma", "delta", "epsilon"))


def dependent_affine_pair() -> BasedRootSystem:
    """Four simple roots in three dimensions forming two affine components
    {alpha, beta}, {gamma, delta} with alpha + beta = gamma + delta."""
    form = [[1, -1, 0, 1], [-1, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 0]]
    simples = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [1, 1, -1, 0]]
    return build_from_vectors(QQ, form, simples, ("alpha", "beta", "gamma", "delta"))


CORPUS = {
    "A2": lambda: finite("A2"),
    "A3": lambda: finite("A3"),
    "B3": lambda: finite("B3"),
    "H3": lambda: finite("H3"),
    "G2": lambda: finite("G2"),
    "affine-A1": affine_a1,
    "affine-A2": affine_a2,
    "dihedral-5/4": lambda: dihedral("-5/4"),
    "universal-3": lambda: universal(3),
    "generic-universal-3": lambda: universal(3, "-5/4"),
    "two-affine-bridge": two_affine_bridge,
    "dependent-affine-pair": dependent_affine_pair,
}
