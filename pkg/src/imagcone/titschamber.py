"""The fundamental chamber, descent into it, and facial subsets of the simple roots."""

from __future__ import annotations

import math
from fractions import Fraction
from dataclasses import dataclass
from typing import Iterable, Sequence

from .exactfield import (
    Vec,
    canonical_ray,
    dot,
    inverse,
    mat_vec,
    rank,
    signature,
    solve,
    vec,
    vscale,
    vsum,
    zero_vec,
)
from .polycone import PointNotInCone, PolyCone, faces, minimal_face_indices
from .rootsys import (
    AlgorithmInvariantViolated,
    BasedRootSystem,
    ReflectionSubgroup,
    Root,
    RootSystemError,
    classify,
    positive_roots_up_to_height,
    subgroup_from_simples,
)


class NotInChamber(RootSystemError):
    pass


class NotInK(RootSystemError):
    pass


class NotFiniteType(RootSystemError):
    pass


class ClosureBoundExceeded(RootSystemError):
    pass


@dataclass(frozen=True)
class FacialSubset:
    indices: tuple[int, ...]
    witness: Vec
    special: bool

    def __contains__(self, i: int) -> bool:
        return i in self.indices

    @property
    def set(self) -> frozenset[int]:
        return frozenset(self.indices)


@dataclass(frozen=True)
class DescentResult:
    status: str  # "in_chamber" or "inconclusive"
    word: tuple[int, ...]
    final: Vec

    @property
    def in_chamber(self) -> bool:
        return self.status == "in_chamber"


def chamber_cone(sys: BasedRootSystem) -> PolyCone:
    """``C = {v : <v, alpha> >= 0 for every simple alpha}``."""
    return PolyCone.from_inequalities(sys.covectors, dim=sys.dim, form=sys.form)


def in_chamber(sys: BasedRootSystem, v: Sequence) -> bool:
    return all(sys.pair_simple(v, i).sign() >= 0 for i in range(sys.rank))


def descend_to_chamber(sys: BasedRootSystem, v: Sequence, budget: int = 10000) -> DescentResult:
    """Reflect in the lowest-index simple root pairing negatively with ``v``
    until ``v`` is in the chamber.  ``act(word, v) == final``."""
    v = vec(v)
    word: tuple[int, ...] = ()
    for _ in range(budget + 1):
        i = next((i for i in range(sys.rank) if sys.pair_simple(v, i).sign() < 0), None)
        if i is None:
            return DescentResult("in_chamber", word, v)
        if len(word) >= budget:
            break
        v = sys.reflect_simple(v, i)
        word = (i,) + word
    return DescentResult("inconclusive", word, v)


def is_special(sys: BasedRootSystem, indices: Iterable[int]) -> bool:
    """No component of the subset is of finite type."""
    return all(c.kind != "finite" for c in classify(sys, indices))


def stabilizer_facial_subset(sys: BasedRootSystem, v: Sequence) -> FacialSubset:
    v = vec(v)
    if not in_chamber(sys, v):
        raise NotInChamber("vector is not in the fundamental chamber")
    idx = tuple(i for i in range(sys.rank) if not sys.pair_simple(v, i))
    return FacialSubset(idx, v, is_special(sys, idx))


def _ray_to_simple(sys: BasedRootSystem) -> list[int]:
    cone = sys.positive_cone
    lookup = {canonical_ray(a): i for i, a in enumerate(sys.simples)}
    out = []
    for g in cone.generators:
        if g not in lookup:
            raise AlgorithmInvariantViolated("extreme ray of the root cone is not a simple root")
        out.append(lookup[g])
    if len(set(out)) != sys.rank:
        raise AlgorithmInvariantViolated("some simple root is not an extreme ray")
    return out


def _facial_table(sys: BasedRootSystem) -> dict[tuple[int, ...], FacialSubset]:
    cache = sys.__dict__.setdefault("_facial_table", {})
    if cache:
        return cache
    lattice = faces(sys.positive_cone)
    to_simple = _ray_to_simple(sys)
    binv = inverse(sys.form)
    entries = []
    for key in lattice.keys:
        idx = tuple(sorted(to_simple[k] for k in key))
        if not idx:
            witness = sys.rho
        else:
            witness = mat_vec(binv, lattice.exposing_normal(key))
        got = tuple(i for i in range(sys.rank) if not sys.pair_simple(witness, i))
        if got != idx or not in_chamber(sys, witness):
            raise AlgorithmInvariantViolated(f"bad facial witness for {idx}")
        entries.append(FacialSubset(idx, witness, is_special(sys, idx)))
    entries.sort(key=lambda f: (len(f.indices), f.indices))
    for f in entries:
        cache[f.indices] = f
    return cache


def facial_subsets(sys: BasedRootSystem) -> list[FacialSubset]:
    """One entry per face of the cone spanned by the simple roots."""
    return list(_facial_table(sys).values())


def is_facial(sys: BasedRootSystem, indices: Iterable[int]) -> bool:
    return tuple(sorted(set(indices))) in _facial_table(sys)


def facial_subset(sys: BasedRootSystem, indices: Iterable[int]) -> FacialSubset:
    key = tuple(sorted(set(indices)))
    table = _facial_table(sys)
    if key not in table:
        raise RootSystemError(f"{list(key)} is not facial")
    return table[key]


def facial_support(sys: BasedRootSystem, v: Sequence) -> tuple[int, ...]:
    """Simple roots spanning the smallest face of the root cone containing ``v``."""
    to_simple = _ray_to_simple(sys)
    key = minimal_face_indices(sys.positive_cone, vec(v))
    return tuple(sorted(to_simple[k] for k in key))


def nonnegative_coefficients(sys: BasedRootSystem, v: Sequence, support: Sequence[int]) -> Vec:
    """Nonnegative coefficients (over all simples, zero off ``support``) summing to ``v``,
    averaged over the extreme solutions so that they are as spread out as possible."""
    v = vec(v)
    support = list(support)
    m = len(support)
    if m == 0:
        return zero_vec(sys.rank)
    eqs = [
        tuple(sys.simples[j][r] for j in support) + (-v[r],) for r in range(sys.dim)
    ]
    ineqs = [tuple(1 if k == j else 0 for k in range(m + 1)) for j in range(m + 1)]
    cone = PolyCone.from_inequalities(ineqs, eqs, dim=m + 1)
    sols = [g for g in cone.generators if g[-1].sign() > 0]
    if not sols:
        raise PointNotInCone("vector is not a nonnegative combination of the support")
    total = vsum([vscale(1 / g[-1], g) for g in sols], m + 1)
    avg = vscale(Fraction(1, len(sols)), total)
    out = [0] * sys.rank
    for k, j in enumerate(support):
        out[j] = avg[k]
    return vec(out)


def in_k(sys: BasedRootSystem, v: Sequence) -> bool:
    v = vec(v)
    return sys.positive_cone.contains(v) and all(sys.pair_simple(v, i).sign() <= 0 for i in range(sys.rank))


def support_components(sys: BasedRootSystem, v: Sequence) -> list[tuple[tuple[int, ...], Vec, object]]:
    """Split a point of ``K`` along the components of its facial support."""
    v = vec(v)
    if not in_k(sys, v):
        raise NotInK("vector is not in K")
    supp = facial_support(sys, v)
    coeffs = nonnegative_coefficients(sys, v, supp)
    out = []
    for comp, typ in zip(sys.components_of(supp), classify(sys, supp)):
        part = vsum([vscale(coeffs[j], sys.simples[j]) for j in comp], sys.dim)
        out.append((comp, part, typ))
    return out


def facial_hull(sys: BasedRootSystem, delta: Iterable[int]) -> FacialSubset:
    """Smallest facial subset containing ``delta``."""
    delta = sorted(set(delta))
    if not delta:
        return facial_subset(sys, ())
    s = vsum([sys.simples[i] for i in delta], sys.dim)
    return facial_subset(sys, facial_support(sys, s))


# --------------------------------------------------------------------------
# finite parabolic closure


def _span_rank(vs: Sequence[Vec]) -> int:
    return rank(vs) if vs else 0


def finite_parabolic_closure(sys: BasedRootSystem, sub: ReflectionSubgroup | Sequence[Root]) -> ReflectionSubgroup:
    """Canonical simples of the reflection subgroup whose roots are ``Phi`` intersected
    with the span of a finite-type subgroup's simple roots.

    The span carries a positive definite form, so every root in it has height at
    most the norm of the projection of ``rho``; all such roots are enumerated.
    """
    roots = sub.simples if isinstance(sub, ReflectionSubgroup) else tuple(sub)
    vs = [r.vector for r in roots]
    if not vs:
        return subgroup_from_simples(sys, ())
    G = [[sys.pair(a, b) for b in vs] for a in vs]
    p, q, z = signature(tuple(tuple(r) for r in G))
    if q or z:
        raise NotFiniteType("subgroup is not of finite type")
    b = [sys.height(a) for a in vs]
    c = solve(G, b)
    norm2 = dot(c, b)
    bound = math.ceil(math.sqrt(float(norm2))) + 1
    base = _span_rank(vs)
    inside = [r for r in positive_roots_up_to_height(sys, bound) if _span_rank(vs + [r.vector]) == base]
    if len(inside) > 10000:
        raise ClosureBoundExceeded("closure is unexpectedly large")
    pos = [r.vector for r in inside]
    simple = [
        r for r in inside
        if all(sys.height(sys.reflect(x, r)).sign() > 0 for x in pos if x != r.vector)
    ]
    if len(simple) != base:
        raise AlgorithmInvariantViolated("parabolic closure has the wrong number of simple roots")
    return subgroup_from_simples(sys, simple)
