"""Exact polyhedral cones with simultaneous V- and H-representations.

Both directions of the conversion run the same double description routine:
inequalities are inserted one at a time, in input order, while the extreme
rays and lineality space of the current cone are maintained.  Extreme rays
are kept modulo the lineality space and brought to a canonical scaling, so
two cones are equal exactly when their stored data are equal.

Inequalities ``a`` mean ``a . x >= 0`` and equations ``e`` mean ``e . x = 0``
for the plain coordinate dot product.  A symmetric bilinear form may be
attached to a cone; it is used only for pairings and for :func:`dual`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .exactfield import (
    DimensionMismatch,
    Mat,
    Scalar,
    Vec,
    canonical_ray,
    dot,
    inverse,
    is_zero,
    mat_vec,
    NoSolution,
    rref,
    vec,
    vsub,
    vscale,
    vsum,
    vneg,
    unit_vec,
    zero_vec,
)


class ConeError(ValueError):
    pass


class SingularFormForDual(ConeError):
    pass


class PointNotInCone(ConeError):
    pass


class InconsistentRepresentation(ConeError):
    pass


# --------------------------------------------------------------------------
# double description


def _dd(n: int, ineqs: Sequence[Vec], eqs: Sequence[Vec]) -> tuple[list[Vec], list[Vec]]:
    """Extreme rays (modulo lineality) and a lineality basis of
    ``{x : a.x >= 0 for a in ineqs, e.x = 0 for e in eqs}``."""
    lin: list[Vec] = [unit_vec(n, i) for i in range(n)]
    rays: list[tuple[Vec, frozenset[int]]] = []
    constraints = [(e, True) for e in eqs] + [(a, False) for a in ineqs]
    for idx, (a, is_eq) in enumerate(constraints):
        if len(a) != n:
            raise DimensionMismatch(f"constraint of length {len(a)} in dimension {n}")
        if is_zero(a):
            continue
        lvals = [dot(a, l) for l in lin]
        j = next((i for i, v in enumerate(lvals) if v), None)
        if j is not None:
            l0, v0 = lin.pop(j), lvals.pop(j)
            if v0.sign() < 0:
                l0, v0 = vneg(l0), -v0
            lin = [vsub(l, vscale(v / v0, l0)) if v else l for l, v in zip(lin, lvals)]
            new_rays = []
            for r, z in rays:
                v = dot(a, r)
                new_rays.append((vsub(r, vscale(v / v0, l0)) if v else r, z | {idx}))
            if not is_eq:
                new_rays.append((l0, frozenset(range(idx))))
            rays = new_rays
            continue
        vals = [dot(a, r) for r, _ in rays]
        pos = [i for i, v in enumerate(vals) if v.sign() > 0]
        neg = [i for i, v in enumerate(vals) if v.sign() < 0]
        zero = [i for i, v in enumerate(vals) if not v]
        created = []
        for p in pos:
            for q in neg:
                common = rays[p][1] & rays[q][1]
                if any(common <= rays[r][1] for r in range(len(rays)) if r != p and r != q):
                    continue
                vp, vq = vals[p], vals[q]
                w = vsub(vscale(vp, rays[q][0]), vscale(vq, rays[p][0]))
                created.append((w, common | {idx}))
        kept = [(rays[i][0], rays[i][1] | {idx}) for i in zero]
        if not is_eq:
            kept = [rays[i] for i in pos] + kept
        rays = kept + created
    return [r for r, _ in rays], lin


def _reduce_against(v: Vec, basis_rref: Sequence[Sequence[Scalar]], pivots: Sequence[int]) -> Vec:
    out = list(v)
    for row, c in zip(basis_rref, pivots):
        if out[c]:
            f = out[c]
            out = [x - f * y for x, y in zip(out, row)]
    return tuple(out)


def _canonical(vs: Iterable[Vec], basis: Sequence[Vec]) -> tuple[tuple[Vec, ...], tuple[Vec, ...]]:
    """Canonical (sorted, scaled, reduced mod span(basis)) vectors and RREF basis."""
    R, piv = rref(basis) if basis else ([], [])
    basis_rref = tuple(tuple(r) for r in R)
    out = set()
    for v in vs:
        w = _reduce_against(v, R, piv)
        if not is_zero(w):
            out.add(canonical_ray(w))
    return tuple(sorted(out)), basis_rref


# --------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class PolyCone:
    """A polyhedral cone in a space of dimension ``dim``."""

    dim: int
    generators: tuple[Vec, ...]
    lineality: tuple[Vec, ...]
    inequalities: tuple[Vec, ...]
    equations: tuple[Vec, ...]
    form: Mat | None = field(default=None)

    # construction -------------------------------------------------------

    @classmethod
    def from_generators(
        cls,
        vs: Sequence[Sequence],
        dim: int | None = None,
        lineality: Sequence[Sequence] = (),
        form: Mat | None = None,
    ) -> PolyCone:
        vs = [vec(v) for v in vs]
        lin = [vec(v) for v in lineality]
        n = _infer_dim(vs + lin, dim)
        normals, eqs = _dd(n, vs, lin)
        rays, lin2 = _dd(n, normals, eqs)
        cone = cls._build(n, rays, lin2, normals, eqs, form)
        for v in vs:
            if not cone.contains(v):
                raise InconsistentRepresentation("generator outside its own cone")
        return cone

    @classmethod
    def from_inequalities(
        cls,
        ns: Sequence[Sequence],
        eqs: Sequence[Sequence] = (),
        dim: int | None = None,
        form: Mat | None = None,
    ) -> PolyCone:
        ns = [vec(v) for v in ns]
        eqs = [vec(v) for v in eqs]
        n = _infer_dim(ns + eqs, dim)
        rays, lin = _dd(n, ns, eqs)
        normals, eqs2 = _dd(n, rays, lin)
        cone = cls._build(n, rays, lin, normals, eqs2, form)
        for r in cone.generators + cone.lineality:
            if any(dot(a, r).sign() < 0 for a in ns) or any(dot(e, r) for e in eqs):
                raise InconsistentRepresentation("generator violates an input inequality")
        return cone

    @classmethod
    def _build(cls, n, rays, lin, normals, eqs, form) -> PolyCone:
        gens, lin_b = _canonical(rays, lin)
        ineq, eq_b = _canonical(normals, eqs)
        return cls(n, gens, lin_b, ineq, eq_b, form)

    @classmethod
    def zero(cls, dim: int, form: Mat | None = None) -> PolyCone:
        return cls.from_generators([], dim=dim, form=form)

    @classmethod
    def whole_space(cls, dim: int, form: Mat | None = None) -> PolyCone:
        return cls.from_inequalities([], dim=dim, form=form)

    def with_form(self, form: Mat | None) -> PolyCone:
        return PolyCone(self.dim, self.generators, self.lineality, self.inequalities, self.equations, form)

    # predicates ---------------------------------------------------------

    def contains(self, v: Sequence[Scalar], strict: bool = False) -> bool:
        """Membership; ``strict`` asks for the relative interior."""
        if len(v) != self.dim:
            raise DimensionMismatch(f"vector of length {len(v)} in dimension {self.dim}")
        v = vec(v)
        if any(dot(e, v) for e in self.equations):
            return False
        for a in self.inequalities:
            s = dot(a, v).sign()
            if s < 0 or (strict and s == 0):
                return False
        return True

    def is_pointed(self) -> bool:
        return not self.lineality

    def is_zero(self) -> bool:
        return not self.generators and not self.lineality

    @property
    def dimension(self) -> int:
        return self.dim - len(self.equations)

    def pair(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
        if self.form is None:
            return dot(u, v)
        return dot(u, mat_vec(self.form, v))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyCone):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.generators == other.generators
            and self.lineality == other.lineality
        )

    def __hash__(self) -> int:
        return hash((self.dim, self.generators, self.lineality))

    def __repr__(self) -> str:
        g = [[str(x) for x in v] for v in self.generators]
        return f"PolyCone(dim={self.dim}, generators={g}, lineality={len(self.lineality)})"

    def to_json(self) -> dict:
        from .jsonio import vec_to_json

        return {
            "generators": [vec_to_json(v) for v in self.generators],
            "lineality": [vec_to_json(v) for v in self.lineality],
            "inequalities": [vec_to_json(v) for v in self.inequalities],
            "equations": [vec_to_json(v) for v in self.equations],
        }

    @classmethod
    def from_json(cls, data: dict, dim: int | None = None) -> PolyCone:
        from .jsonio import vec_from_json

        gens = [vec_from_json(v) for v in data.get("generators", [])]
        lin = [vec_from_json(v) for v in data.get("lineality", [])]
        if gens or lin or not data.get("inequalities") and not data.get("equations"):
            return cls.from_generators(gens, dim=dim, lineality=lin)
        return cls.from_inequalities(
            [vec_from_json(v) for v in data.get("inequalities", [])],
            [vec_from_json(v) for v in data.get("equations", [])],
            dim=dim,
        )


def _infer_dim(vs: Sequence[Vec], dim: int | None) -> int:
    if dim is None:
        if not vs:
            raise DimensionMismatch("cannot infer the dimension of an empty description")
        dim = len(vs[0])
    for v in vs:
        if len(v) != dim:
            raise DimensionMismatch(f"vector of length {len(v)} in dimension {dim}")
    return dim


from_generators = PolyCone.from_generators
from_inequalities = PolyCone.from_inequalities


def dual(C: PolyCone) -> PolyCone:
    """``{u : <c, u> >= 0 for all c in C}`` for the attached form."""
    B = C.form
    if B is None:
        ns, eqs = list(C.generators), list(C.lineality)
    else:
        try:
            inverse(B)
        except NoSolution:
            raise SingularFormForDual("the attached form is singular") from None
        ns = [mat_vec(B, g) for g in C.generators]
        eqs = [mat_vec(B, l) for l in C.lineality]
    return PolyCone.from_inequalities(ns, eqs, dim=C.dim, form=B)


def intersect(C1: PolyCone, C2: PolyCone) -> PolyCone:
    if C1.dim != C2.dim:
        raise DimensionMismatch(f"dimensions {C1.dim} and {C2.dim}")
    return PolyCone.from_inequalities(
        C1.inequalities + C2.inequalities, C1.equations + C2.equations, dim=C1.dim, form=C1.form
    )


def contains(C: PolyCone, v: Sequence[Scalar], strict: bool = False) -> bool:
    return C.contains(v, strict)


def lineality(C: PolyCone) -> list[Vec]:
    return list(C.lineality)


def negate(C: PolyCone) -> PolyCone:
    return PolyCone.from_inequalities(
        [vneg(a) for a in C.inequalities], C.equations, dim=C.dim, form=C.form
    )


def relative_interior_point(C: PolyCone) -> Vec:
    """Sum of the canonical extreme rays; lies in the relative interior."""
    p = vsum(C.generators, C.dim)
    if not C.contains(p, strict=True):
        raise InconsistentRepresentation("sum of generators is not relatively interior")
    return p


# --------------------------------------------------------------------------
# faces


def facet_ray_sets(C: PolyCone) -> list[frozenset[int]]:
    """For each facet normal, the indices of the generators it vanishes on."""
    return [frozenset(i for i, g in enumerate(C.generators) if not dot(a, g)) for a in C.inequalities]


def _face_cone(C: PolyCone, idx: frozenset[int]) -> PolyCone:
    return PolyCone.from_generators(
        [C.generators[i] for i in sorted(idx)], dim=C.dim, lineality=C.lineality, form=C.form
    )


@dataclass
class FaceLattice:
    """Faces of a cone keyed by the set of generator indices they contain."""

    cone: PolyCone
    keys: list[frozenset[int]]
    facets: list[frozenset[int]]
    _cones: dict = field(default_factory=dict, repr=False)

    @property
    def top(self) -> frozenset[int]:
        return frozenset(range(len(self.cone.generators)))

    @property
    def bottom(self) -> frozenset[int]:
        return min(self.keys, key=len)

    def __len__(self) -> int:
        return len(self.keys)

    def __contains__(self, key: frozenset[int]) -> bool:
        return key in self._keyset

    @property
    def _keyset(self) -> set[frozenset[int]]:
        return set(self.keys)

    def face(self, key: frozenset[int]) -> PolyCone:
        if key not in self._cones:
            if key not in self._keyset:
                raise KeyError(sorted(key))
            self._cones[key] = _face_cone(self.cone, key)
        return self._cones[key]

    def meet(self, a: frozenset[int], b: frozenset[int]) -> frozenset[int]:
        return a & b

    def join(self, a: frozenset[int], b: frozenset[int]) -> frozenset[int]:
        return self.closure(a | b)

    def closure(self, idx: frozenset[int]) -> frozenset[int]:
        """Generator set of the smallest face containing the given generators."""
        out = self.top
        for f in self.facets:
            if idx <= f:
                out &= f
        return out

    def covers(self) -> list[tuple[frozenset[int], frozenset[int]]]:
        out = []
        for lo in self.keys:
            ups = [k for k in self.keys if lo < k]
            for up in ups:
                if not any(lo < mid < up for mid in ups):
                    out.append((lo, up))
        return out

    def exposing_normal(self, key: frozenset[int]) -> Vec:
        """Sum of the facet normals containing the face (zero for the top)."""
        normals = [a for a, f in zip(self.cone.inequalities, self.facets) if key <= f]
        return vsum(normals, self.cone.dim)


def faces(C: PolyCone) -> FaceLattice:
    facets = facet_ray_sets(C)
    top = frozenset(range(len(C.generators)))
    seen = {top}
    frontier = [top]
    while frontier:
        nxt = []
        for F in frontier:
            for T in facets:
                G = F & T
                if G not in seen:
                    seen.add(G)
                    nxt.append(G)
        frontier = nxt
    keys = sorted(seen, key=lambda k: (len(k), sorted(k)))
    return FaceLattice(C, keys, facets)


def tight_normals(C: PolyCone, v: Sequence[Scalar]) -> list[Vec]:
    v = vec(v)
    if not C.contains(v):
        raise PointNotInCone("point is not in the cone")
    return [a for a in C.inequalities if not dot(a, v)]


def minimal_face_indices(C: PolyCone, v: Sequence[Scalar]) -> frozenset[int]:
    tight = tight_normals(C, v)
    return frozenset(i for i, g in enumerate(C.generators) if all(not dot(a, g) for a in tight))


def minimal_face_containing(C: PolyCone, v: Sequence[Scalar]) -> PolyCone:
    """The face having ``v`` in its relative interior."""
    return _face_cone(C, minimal_face_indices(C, v))
