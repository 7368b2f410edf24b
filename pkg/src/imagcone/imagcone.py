"""The imaginary cone ``Z``: its fundamental domain ``K``, membership, faces and
facial closures of reflection subgroups."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exactfield import (
    Vec,
    canonical_ray,
    kernel_basis,
    mat_vec,
    solve,
    vec,
    vneg,
    vscale,
    vsum,
)
from .polycone import PolyCone, intersect, negate
from .rootsys import (
    AlgorithmInvariantViolated,
    BasedRootSystem,
    ReflectionSubgroup,
    Root,
    RootSystemError,
    canonical_simples,
    classify,
    inverse_word,
    reduce_word,
    subgroup_from_simples,
    subsystem,
)
from .titschamber import (
    FacialSubset,
    chamber_cone,
    facial_hull,
    facial_subsets,
    facial_support,
    finite_parabolic_closure,
    is_facial,
)

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10000


class NotIrreducibleIndefinite(RootSystemError):
    pass


class FiniteSubgroup(RootSystemError):
    pass


class NotInZError(RootSystemError):
    pass


# --------------------------------------------------------------------------
# K


def k_cone(sys: BasedRootSystem) -> PolyCone:
    """``K``: the root cone intersected with minus the chamber."""
    return intersect(sys.positive_cone, negate(chamber_cone(sys))).with_form(sys.form)


def maximal_indefinite_facials(sys: BasedRootSystem) -> list[FacialSubset]:
    """Maximal proper facial subsets all of whose components are indefinite."""
    full = tuple(range(sys.rank))
    proper = [f for f in facial_subsets(sys) if f.indices != full]
    maximal = [f for f in proper if not any(set(f.indices) < set(g.indices) for g in proper)]
    return [f for f in maximal if f.indices and all(c.kind == "indefinite" for c in classify(sys, f.indices))]


def k_cone_via_facials(sys: BasedRootSystem) -> PolyCone:
    """``K`` described as ``-C`` within the span of the roots, cut by the facial witnesses."""
    types = classify(sys)
    if len(types) != 1 or types[0].kind != "indefinite":
        raise NotIrreducibleIndefinite("system must be irreducible of indefinite type")
    ineqs = [vneg(c) for c in sys.covectors]
    ineqs += [mat_vec(sys.form, f.witness) for f in maximal_indefinite_facials(sys)]
    eqs = kernel_basis(sys.simples, sys.dim)
    return PolyCone.from_inequalities(ineqs, eqs, dim=sys.dim, form=sys.form)


# --------------------------------------------------------------------------
# membership


@dataclass(frozen=True)
class ZMembership:
    status: str  # "in_z", "not_in_z" or "inconclusive"
    word: tuple[int, ...] = ()
    k: Vec | None = None
    certificate: str | None = None  # not_in_positive_cone, positive_norm, orbit_left_positive_cone
    steps: int = 0

    @property
    def in_z(self) -> bool:
        return self.status == "in_z"


def z_membership(sys: BasedRootSystem, v: Sequence, budget: int = DEFAULT_BUDGET) -> ZMembership:
    """Semi-decide ``v in Z``; on success ``act(word, v) == k`` lies in ``K``."""
    v = vec(v)
    cone = sys.positive_cone
    if not cone.contains(v):
        return ZMembership("not_in_z", certificate="not_in_positive_cone")
    if sys.norm(v).sign() > 0:
        return ZMembership("not_in_z", certificate="positive_norm")
    word: tuple[int, ...] = ()
    for step in range(budget + 1):
        i = next((i for i in range(sys.rank) if sys.pair_simple(v, i).sign() > 0), None)
        if i is None:
            return ZMembership("in_z", word, v, steps=step)
        if step == budget:
            break
        v = sys.reflect_simple(v, i)
        word = (i,) + word
        if not cone.contains(v):
            return ZMembership("not_in_z", word, certificate="orbit_left_positive_cone", steps=step + 1)
    return ZMembership("inconclusive", word, steps=budget)


# --------------------------------------------------------------------------
# faces of Z


@dataclass(frozen=True)
class ZFace:
    """The face ``w^-1 Z_I`` for a special facial subset ``I``; ``word`` is ``w``."""

    word: tuple[int, ...]
    facial: FacialSubset
    cone: PolyCone | None = None

    @property
    def indices(self) -> tuple[int, ...]:
        return self.facial.indices


def z_face_minimal(sys: BasedRootSystem, v: Sequence, budget: int = DEFAULT_BUDGET) -> ZFace:
    """Smallest face of ``Z`` (as a conjugate of a standard one) containing ``v`` in its interior."""
    m = z_membership(sys, v, budget)
    if not m.in_z:
        raise NotInZError(f"z_membership returned {m.status}")
    f = facial_hull(sys, facial_support(sys, m.k))
    if not f.special:
        raise AlgorithmInvariantViolated("facial support of a K point is not special")
    cone = k_cone(sys) if not m.word else None
    return ZFace(m.word, f, cone)


@dataclass
class ZLattice:
    """Standard special facial subsets ordered by inclusion."""

    sys: BasedRootSystem
    nodes: list[tuple[int, ...]]

    def _infinite_part(self, idx: Iterable[int]) -> tuple[int, ...]:
        out: list[int] = []
        for c in classify(self.sys, idx):
            if c.kind != "finite":
                out.extend(c.indices)
        return tuple(sorted(out))

    def meet(self, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
        both = sorted(set(a) & set(b))
        if not is_facial(self.sys, both):
            raise AlgorithmInvariantViolated("intersection of facial subsets is not facial")
        return self._infinite_part(both)

    def join(self, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
        j = facial_hull(self.sys, set(a) | set(b))
        if not j.special:
            raise AlgorithmInvariantViolated("join of special facial subsets is not special")
        return j.indices

    @property
    def bottom(self) -> tuple[int, ...]:
        return ()

    @property
    def top(self) -> tuple[int, ...]:
        return self._infinite_part(range(self.sys.rank))

    def leq(self, a: Sequence[int], b: Sequence[int]) -> bool:
        return set(a) <= set(b)

    def __len__(self) -> int:
        return len(self.nodes)


def z_face_lattice_standard(sys: BasedRootSystem) -> ZLattice:
    return ZLattice(sys, [f.indices for f in facial_subsets(sys) if f.special])


# --------------------------------------------------------------------------
# reflection subgroups


def _subgroup(sys: BasedRootSystem, sub: ReflectionSubgroup | Iterable[Root | Vec]) -> ReflectionSubgroup:
    if isinstance(sub, ReflectionSubgroup):
        return sub
    return canonical_simples(sys, list(sub))


def z_interior_point(sys: BasedRootSystem, sub: ReflectionSubgroup | Iterable[Root | Vec]) -> Vec:
    """A point of the interior of ``K`` for the subgroup, as the sum of its extreme rays
    scaled canonically in the subgroup's simple-root coordinates."""
    sub = _subgroup(sys, sub)
    if not sub.simples:
        raise FiniteSubgroup("trivial subgroup")
    child = subsystem(sys, sub)
    kc = k_cone(child)
    if kc.is_zero():
        raise FiniteSubgroup("subgroup is finite, K is zero")
    if child.independent:
        rays = [canonical_ray(child.coords(g)) for g in kc.generators]
        return child.combine(vsum(rays, child.rank))
    return vsum(kc.generators, sys.dim)


def z_sample(sys: BasedRootSystem, length: int) -> list[Vec]:
    """Images of the extreme rays of ``K`` under all words of length at most ``length``."""
    seen: dict[Vec, None] = {}
    frontier = list(k_cone(sys).generators)
    for g in frontier:
        seen[g] = None
    for _ in range(length):
        nxt = []
        for v in frontier:
            for i in range(sys.rank):
                w = sys.reflect_simple(v, i)
                if w not in seen:
                    seen[w] = None
                    nxt.append(w)
        frontier = nxt
    return list(seen)


def minimal_coset_rep(sys: BasedRootSystem, word: Sequence[int], J: Iterable[int]) -> tuple[int, ...]:
    """The shortest element of ``word * W_J``, as a reduced word."""
    J = sorted(set(J))
    w = reduce_word(sys, word)
    while True:
        j = next((j for j in J if sys.height(sys.act(w, sys.simples[j])).sign() < 0), None)
        if j is None:
            return w
        w = reduce_word(sys, w + (j,))


def _closure_roots(sys: BasedRootSystem, vectors: Sequence[Vec], limit: int = 5000) -> set[Vec]:
    roots = set(vectors) | {vneg(v) for v in vectors}
    frontier = list(roots)
    while frontier:
        nxt = []
        for v in frontier:
            for g in vectors:
                w = sys.reflect(v, g)
                if w not in roots:
                    roots.add(w)
                    nxt.append(w)
        if len(roots) > limit:
            raise AlgorithmInvariantViolated("finite root closure is too large")
        frontier = nxt
    return roots


def _perp(sys: BasedRootSystem, I: Sequence[int]) -> tuple[int, ...]:
    return tuple(j for j in range(sys.rank) if j not in I and all(not sys.gram[i][j] for i in I))


def _standardize_finite(
    sys: BasedRootSystem, sub: ReflectionSubgroup, letters: Sequence[int]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Find ``x`` in ``W_letters`` and ``J`` with ``sub = x W_J x^-1``."""
    vs = [r.vector for r in sub.simples]
    if not vs:
        return (), ()
    target = sum(1 for r in _closure_roots(sys, vs) if sys.height(r).sign() > 0)
    G = [[sys.pair(a, b) for b in vs] for a in vs]
    gens = [sys.rho] + [vsum([sys.rho, vscale(Fraction(1, t), g)], sys.dim)
                        for t in (3, 7, 13, 29) for g in chamber_cone(sys).generators]
    for base in gens:
        c = solve(G, [sys.pair(base, a) for a in vs])
        y = vsum([base] + [vscale(-ci, a) for ci, a in zip(c, vs)], sys.dim)
        word: tuple[int, ...] = ()
        for _ in range(100000):
            j = next((j for j in letters if sys.pair_simple(y, j).sign() < 0), None)
            if j is None:
                break
            y = sys.reflect_simple(y, j)
            word = (j,) + word
        else:
            raise AlgorithmInvariantViolated("finite descent did not terminate")
        J = tuple(j for j in letters if not sys.pair_simple(y, j))
        got = sum(1 for r in _closure_roots(sys, [sys.simples[j] for j in J]) if sys.height(r).sign() > 0) if J else 0
        if got == target:
            x = minimal_coset_rep(sys, inverse_word(word), J)
            return x, J
    raise AlgorithmInvariantViolated("could not conjugate the finite closure to a standard parabolic")


@dataclass(frozen=True)
class FacialClosure:
    status: str  # "ok" or "inconclusive"
    word: tuple[int, ...] = ()
    indices: tuple[int, ...] = ()
    descent_word: tuple[int, ...] = ()
    infinite_part: tuple[int, ...] = ()
    finite_part: tuple[int, ...] = ()


def facial_closure(
    sys: BasedRootSystem, sub: ReflectionSubgroup | Iterable[Root | Vec], budget: int = DEFAULT_BUDGET
) -> FacialClosure:
    """Smallest facial subgroup containing a reflection subgroup, as ``x W_I x^-1``.

    ``word`` is a reduced conjugator of minimal length; ``descent_word`` is the
    word that carried the interior point of the infinite part into ``K``.
    """
    sub = _subgroup(sys, sub)
    inf_roots = [sub.simples[i] for t in sub.types if t.kind != "finite" for i in t.indices]
    descent: tuple[int, ...] = ()
    I: tuple[int, ...] = ()
    if inf_roots:
        p = z_interior_point(sys, subgroup_from_simples(sys, inf_roots))
        m = z_membership(sys, p, budget)
        if m.status == "inconclusive":
            return FacialClosure("inconclusive")
        if not m.in_z:
            raise AlgorithmInvariantViolated("interior point of a subgroup's K is not in Z")
        descent = m.word
        I = facial_hull(sys, facial_support(sys, m.k)).indices
    perp = _perp(sys, I)
    u = minimal_coset_rep(sys, inverse_word(descent), tuple(I) + perp)
    conj_I = [sys.act(u, sys.simples[i]) for i in I]
    delta = [r for r in sub.simples if all(not sys.pair(r.vector, b) for b in conj_I)]
    uinv = inverse_word(u)
    moved = [sys.act(uinv, r.vector) for r in delta]
    x: tuple[int, ...] = ()
    J: tuple[int, ...] = ()
    if moved:
        closure = finite_parabolic_closure(sys, canonical_simples(sys, moved))
        x, J = _standardize_finite(sys, closure, perp)
    word = reduce_word(sys, u + x)
    full = tuple(sorted(set(I) | set(J)))
    if not is_facial(sys, full):
        raise AlgorithmInvariantViolated("facial closure is not facial")
    return FacialClosure("ok", word, full, descent, tuple(I), tuple(J))
