"""Limit rays of the rays through positive roots: exact for dihedral
subgroups, numeric for general systems."""

from __future__ import annotations

import math
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .exactfield import (
    FieldSpec,
    Scalar,
    Vec,
    canonical_ray,
    squarefree_split,
    to_floats,
    try_sqrt,
    vadd,
    vec,
    vscale,
)
from .rootsys import BasedRootSystem, Root, RootSystemError, classify, positive_roots_up_to_height


class NonpositiveHeight(RootSystemError):
    pass


class NotInfiniteDihedral(RootSystemError):
    pass


class SqrtNotInField(RootSystemError):
    pass


@dataclass(frozen=True)
class NormalizedPoint:
    vector: Vec | tuple[float, ...]
    height: Scalar | float
    exact: bool = True


@dataclass
class RaySet:
    """Exact canonical ray generators plus float directions (with multiplicities)."""

    rays: list[Vec] = field(default_factory=list)
    approx: list[tuple[tuple[float, ...], int]] = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return not self.approx

    def __len__(self) -> int:
        return len(self.rays) + len(self.approx)


def _exact_height(h) -> Scalar:
    if isinstance(h, float):
        return Scalar(Fraction(str(h)))
    return h if isinstance(h, Scalar) else Scalar(h)


def normalize(sys: BasedRootSystem, v: Sequence) -> NormalizedPoint:
    """Scale ``v`` onto the slice of height one."""
    v = vec(v)
    h = sys.height(v)
    if h.sign() <= 0:
        raise NonpositiveHeight("vector does not have positive height")
    return NormalizedPoint(vscale(1 / h, v), h)


def normalize_float(sys: BasedRootSystem, v: Sequence) -> np.ndarray:
    x = np.array(to_floats(v))
    return x / float(np.dot(x, np.array(to_floats(sys.rho_covector))))


def sqrt_extended(x: Scalar, field: FieldSpec) -> Scalar | None:
    """Square root of ``x >= 0`` in ``field``, or for rational ``x`` in the quadratic
    extension it needs; ``None`` if neither applies."""
    s = try_sqrt(x, field)
    if s is not None or not x.is_rational():
        return s
    q = x.rational()
    num, den = q.numerator, q.denominator
    _, d = squarefree_split(num * den)
    return try_sqrt(x, FieldSpec([d]) if d > 1 else FieldSpec())


def exp_lambda(c: Scalar, field: FieldSpec) -> Scalar | None:
    """``-c + sqrt(c^2 - 1)`` for ``c <= -1`` (the larger root of ``t^2 + 2ct + 1``)."""
    s = sqrt_extended(c * c - 1, field)
    return None if s is None else -c + s


def dihedral_limit_rays(sys: BasedRootSystem, a: Root | Vec, b: Root | Vec) -> RaySet:
    """The isotropic limit rays of the dihedral subgroup generated by two roots."""
    av = a.vector if isinstance(a, Root) else vec(a)
    bv = b.vector if isinstance(b, Root) else vec(b)
    c = sys.pair(av, bv)
    if c > -1:
        raise NotInfiniteDihedral(f"<a,b> = {c} > -1: the subgroup is finite")
    if c == -1:
        return RaySet([canonical_ray(vadd(av, bv))])
    e = exp_lambda(c, sys.field)
    if e is None:
        cf = float(c)
        ef = -cf + math.sqrt(cf * cf - 1)
        fa, fb = np.array(to_floats(av)), np.array(to_floats(bv))
        out = []
        for u in (ef * fa + fb, fa + ef * fb):
            out.append((tuple(u / np.linalg.norm(u)), 1))
        return RaySet([], out)
    rays = [canonical_ray(vadd(vscale(e, av), bv)), canonical_ray(vadd(av, vscale(e, bv)))]
    for r in rays:
        if sys.norm(r):
            raise RootSystemError("computed limit ray is not isotropic")
    return RaySet(rays)


def _cluster(points: np.ndarray, eps: float) -> list[list[int]]:
    """Single-linkage clusters at distance ``eps``."""
    n = len(points)
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        d = np.linalg.norm(points[i + 1:] - points[i], axis=1)
        for j in np.nonzero(d <= eps)[0]:
            ri, rj = find(i), find(i + 1 + int(j))
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def approx_limit_rays(sys: BasedRootSystem, height: float, cluster_eps: float = 1e-4) -> RaySet:
    """Cluster the normalized highest roots (top decile by height) below ``height``."""
    if all(c.kind == "finite" for c in classify(sys)):
        return RaySet()
    roots = positive_roots_up_to_height(sys, _exact_height(height))
    if not roots:
        return RaySet()
    top = roots[-max(1, math.ceil(len(roots) / 10)):]
    pts = np.array([normalize_float(sys, r.vector) for r in top])
    out = []
    for group in _cluster(pts, cluster_eps):
        out.append((tuple(float(x) for x in pts[group].mean(axis=0)), len(group)))
    out.sort()
    return RaySet([], out)


def dihedral_ray_union(sys: BasedRootSystem, height: float) -> RaySet:
    """Limit rays of the infinite dihedral subgroups ``<s_alpha, s_beta>`` with ``alpha`` simple."""
    exact: list[Vec] = []
    approx: list[tuple[tuple[float, ...], int]] = []
    roots = positive_roots_up_to_height(sys, _exact_height(height))
    for i in range(sys.rank):
        a = sys.simples[i]
        for r in roots:
            if r.vector == a or sys.pair(a, r.vector) > -1:
                continue
            rs = dihedral_limit_rays(sys, a, r.vector)
            for v in rs.rays:
                if v not in exact:
                    exact.append(v)
            for p in rs.approx:
                if not any(np.allclose(p[0], q[0], atol=1e-12) for q in approx):
                    approx.append(p)
    exact.sort()
    return RaySet(exact, approx)


def distance_to_ray(sys: BasedRootSystem, v: Sequence, ray: Sequence) -> float:
    """Euclidean distance between the height-one points of ``v`` and ``ray``."""
    return float(np.linalg.norm(normalize_float(sys, v) - normalize_float(sys, ray)))


def csv_rows(sys: BasedRootSystem, height: float) -> list[list]:
    """One row per normalized positive root: coordinates, height, cluster id."""
    roots = positive_roots_up_to_height(sys, _exact_height(height))
    pts = np.array([normalize_float(sys, r.vector) for r in roots]) if roots else np.zeros((0, sys.dim))
    ids = [0] * len(roots)
    for cid, group in enumerate(_cluster(pts, 1e-4)):
        for i in group:
            ids[i] = cid
    return [list(map(float, p)) + [str(r.height), ids[k]] for k, (p, r) in enumerate(zip(pts, roots))]
