"""Based root systems of finite rank Coxeter groups.

Simple roots are exact vectors in a real quadratic space with a nonsingular
symmetric form.  Every simple root has norm one, so the reflection in a root
``b`` is ``v -> v - 2<v,b> b``.  Group elements are handled as words in the
simple reflections: the word ``(i1, ..., ik)`` stands for the product
``s_i1 ... s_ik`` and acts on vectors from the right end first.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .exactfield import (
    ONE,
    ZERO,
    DimensionMismatch,
    FieldSpec,
    Mat,
    NoSolution,
    Number,
    S,
    Scalar,
    UnrepresentableLabel,
    Vec,
    bond_label,
    canonical_ray,
    coxeter_cosine,
    dot,
    identity,
    is_symmetric,
    is_valid_bond,
    kernel_basis,
    mat,
    mat_vec,
    prime_factors,
    rank,
    signature,
    solve,
    transpose,
    unit_vec,
    vadd,
    vec,
    vneg,
    vscale,
    vsub,
    zero_vec,
)
from .polycone import PolyCone, relative_interior_point

log = logging.getLogger(__name__)


class RootSystemError(ValueError):
    pass


class InvalidGram(RootSystemError):
    pass


class ExtensionSingular(RootSystemError):
    pass


class FormSingular(RootSystemError):
    pass


class NotPositivelyIndependent(RootSystemError):
    pass


class NotDistinctReflections(RootSystemError):
    pass


class NotARoot(RootSystemError):
    pass


class AlgorithmInvariantViolated(RuntimeError):
    """An internal consistency check failed; this indicates a bug or a
    violated precondition rather than bad user input."""


Word = tuple


@dataclass(frozen=True)
class Root:
    """A positive root with a witness word.

    ``vector == s_{word[0]} ... s_{word[-2]} (alpha_{word[-1]})`` and
    ``depth == len(word)``.
    """

    vector: Vec
    coeffs: Vec
    depth: int
    word: Word
    height: Scalar = field(compare=False)

    @property
    def length(self) -> int:
        """Length of the reflection in this root."""
        return 2 * self.depth - 1

    def __repr__(self) -> str:
        return f"Root({[str(c) for c in self.coeffs]}, depth={self.depth})"


@dataclass(frozen=True)
class ComponentType:
    kind: str  # "finite", "affine" or "indefinite"
    indices: tuple[int, ...]
    delta: Vec | None = None  # coefficients over ``indices`` (affine only)

    @property
    def infinite(self) -> bool:
        return self.kind != "finite"


@dataclass(frozen=True, eq=False)
class BasedRootSystem:
    field: FieldSpec
    form: Mat
    simples: tuple[Vec, ...]
    gram: Mat
    rho: Vec
    names: tuple[str, ...] = ()

    # basic data -----------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.simples)

    @property
    def dim(self) -> int:
        return len(self.form)

    @cached_property
    def covectors(self) -> tuple[Vec, ...]:
        """``B alpha_i``, so that ``<v, alpha_i> = v . covectors[i]``."""
        return tuple(mat_vec(self.form, a) for a in self.simples)

    @cached_property
    def rho_covector(self) -> Vec:
        return mat_vec(self.form, self.rho)

    @cached_property
    def simple_heights(self) -> tuple[Scalar, ...]:
        return tuple(self.height(a) for a in self.simples)

    @cached_property
    def independent(self) -> bool:
        return rank(self.simples) == self.rank

    def pair(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
        return dot(u, mat_vec(self.form, v))

    def pair_simple(self, v: Sequence[Scalar], i: int) -> Scalar:
        return dot(v, self.covectors[i])

    def height(self, v: Sequence[Scalar]) -> Scalar:
        return dot(v, self.rho_covector)

    def norm(self, v: Sequence[Scalar]) -> Scalar:
        return self.pair(v, v)

    def reflect_simple(self, v: Vec, i: int) -> Vec:
        c = self.pair_simple(v, i)
        if not c:
            return v
        return vsub(v, vscale(2 * c, self.simples[i]))

    def reflect(self, v: Vec, b: Root | Vec) -> Vec:
        """``s_b(v)`` for a unit vector (or root) ``b``."""
        bv = b.vector if isinstance(b, Root) else b
        c = self.pair(v, bv)
        if not c:
            return v
        return vsub(v, vscale(2 * c, bv))

    def act(self, word: Sequence[int], v: Vec) -> Vec:
        for i in reversed(word):
            v = self.reflect_simple(v, i)
        return v

    def combine(self, coeffs: Sequence[Number]) -> Vec:
        out = zero_vec(self.dim)
        for c, a in zip(coeffs, self.simples):
            if c:
                out = vadd(out, vscale(c, a))
        return out

    def coords(self, v: Sequence[Scalar]) -> Vec:
        """Coefficients of ``v`` over the simple roots (must lie in their span)."""
        try:
            return solve(transpose(self.simples), vec(v))
        except NoSolution:
            raise DimensionMismatch("vector is not in the span of the simple roots") from None

    def is_positive_vector(self, v: Sequence[Scalar]) -> bool:
        return self.positive_cone.contains(v)

    @cached_property
    def positive_cone(self) -> PolyCone:
        return PolyCone.from_generators(self.simples, dim=self.dim, form=self.form)

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        seen: set[int] = set()
        out = []
        for s in range(n):
            if s in seen:
                continue
            comp, stack = [], [s]
            seen.add(s)
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in range(n):
                    if j not in seen and self.gram[i][j]:
                        seen.add(j)
                        stack.append(j)
            out.append(tuple(sorted(comp)))
        return tuple(out)

    def components_of(self, idx: Iterable[int]) -> list[tuple[int, ...]]:
        idx = sorted(set(idx))
        seen: set[int] = set()
        out = []
        for s in idx:
            if s in seen:
                continue
            comp, stack = [], [s]
            seen.add(s)
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in idx:
                    if j not in seen and self.gram[i][j]:
                        seen.add(j)
                        stack.append(j)
            out.append(tuple(sorted(comp)))
        return out

    @cached_property
    def labels(self) -> tuple[tuple[int | None, ...], ...]:
        """Coxeter labels ``m_ij`` (``None`` for infinite bonds, 1 on the diagonal)."""
        return tuple(
            tuple(1 if i == j else bond_label(self.gram[i][j]) for j in range(self.rank))
            for i in range(self.rank)
        )

    def name(self, i: int) -> str:
        return self.names[i] if self.names else f"a{i}"

    def simple_root(self, i: int) -> Root:
        return Root(self.simples[i], unit_vec(self.rank, i), 1, (i,), self.simple_heights[i])

    def root_from_word(self, word: Sequence[int]) -> Root:
        """The root ``s_{w0} ... s_{w(k-2)} (alpha_{w(k-1)})``, taking depth = len(word).

        Only valid when the word is a depth witness, e.g. when consecutive
        letters differ in a universal system.
        """
        word = tuple(word)
        v, c = self.simples[word[-1]], unit_vec(self.rank, word[-1])
        for i in reversed(word[:-1]):
            p = self.pair_simple(v, i)
            if p:
                v = vsub(v, vscale(2 * p, self.simples[i]))
                c = tuple(x - 2 * p if j == i else x for j, x in enumerate(c))
        if self.height(v).sign() <= 0:
            raise NotARoot("word does not produce a positive root")
        return Root(v, c, len(word), word, self.height(v))

    # cached enumeration --------------------------------------------------

    @cached_property
    def _enum_cache(self) -> dict:
        return {"H": None, "roots": []}

    def __repr__(self) -> str:
        return f"BasedRootSystem(rank={self.rank}, dim={self.dim}, field={self.field})"


# --------------------------------------------------------------------------
# construction


def _check_bond(c: Scalar, field: FieldSpec, i: int, j: int) -> None:
    if not field.contains(c):
        raise InvalidGram(f"entry ({i},{j}) = {c} is outside {field}")
    if not is_valid_bond(c):
        raise InvalidGram(f"entry ({i},{j}) = {c} is neither <= -1 nor -cos(pi/m)")


def _check_gram(G: Mat, field: FieldSpec) -> None:
    n = len(G)
    if any(len(r) != n for r in G):
        raise InvalidGram("gram matrix is not square")
    if not is_symmetric(G):
        raise InvalidGram("gram matrix is not symmetric")
    for i in range(n):
        if G[i][i] != 1:
            raise InvalidGram(f"diagonal entry {i} is {G[i][i]}, expected 1")
        for j in range(i + 1, n):
            _check_bond(G[i][j], field, i, j)


def _solve_rho(form: Mat, simples: Sequence[Vec]) -> Vec | None:
    rows = [mat_vec(form, a) for a in simples]
    try:
        return solve(rows, [ONE] * len(simples))
    except NoSolution:
        return None


def build_from_gram(field: FieldSpec, G: Sequence[Sequence], names: Sequence[str] = ()) -> BasedRootSystem:
    """Root system with Gram matrix ``G``; singular ``G`` gets an ample extension."""
    G = mat(G)
    _check_gram(G, field)
    n = len(G)
    ker = kernel_basis(G, n)
    k = len(ker)
    if k == 0:
        form = G
    else:
        D = [canonical_ray(v) for v in ker]
        top = [tuple(G[i]) + tuple(D[r][i] for r in range(k)) for i in range(n)]
        bottom = [tuple(D[r]) + (ZERO,) * k for r in range(k)]
        form = tuple(top + bottom)
        if rank(form) != n + k:
            raise ExtensionSingular("extended form is singular")
    N = n + k
    simples = tuple(unit_vec(N, i) for i in range(n))
    rho = _solve_rho(form, simples)
    if rho is None:
        raise AlgorithmInvariantViolated("no rho for linearly independent simple roots")
    return BasedRootSystem(field, form, simples, G, rho, tuple(names))


def _positively_independent(simples: Sequence[Vec], dim: int) -> bool:
    n = len(simples)
    eqs = [tuple(simples[j][r] for j in range(n)) for r in range(dim)]
    cone = PolyCone.from_inequalities([unit_vec(n, i) for i in range(n)], eqs, dim=n)
    return cone.is_zero()


def build_from_vectors(
    field: FieldSpec,
    form: Sequence[Sequence],
    simples: Sequence[Sequence],
    names: Sequence[str] = (),
) -> BasedRootSystem:
    """Root system from explicit simple roots in a quadratic space."""
    form = mat(form)
    simples = tuple(vec(a) for a in simples)
    N = len(form)
    if not simples:
        raise InvalidGram("no simple roots")
    if any(len(r) != N for r in form) or not is_symmetric(form):
        raise FormSingular("form must be a symmetric square matrix")
    if rank(form) != N:
        raise FormSingular("form is singular")
    if any(len(a) != N for a in simples):
        raise DimensionMismatch("simple roots do not match the form's dimension")
    if len(set(simples)) != len(simples):
        raise NotPositivelyIndependent("repeated simple root")
    gram = tuple(tuple(dot(a, mat_vec(form, b)) for b in simples) for a in simples)
    _check_gram(gram, field)
    if not _positively_independent(simples, N):
        raise NotPositivelyIndependent("zero is a nontrivial nonnegative combination of the simple roots")
    rho = _solve_rho(form, simples)
    if rho is None:
        chamber = PolyCone.from_inequalities([mat_vec(form, a) for a in simples], dim=N)
        rho = relative_interior_point(chamber)
        if any(dot(rho, mat_vec(form, a)).sign() <= 0 for a in simples):
            raise AlgorithmInvariantViolated("chamber has no interior point")
    return BasedRootSystem(field, form, simples, gram, rho, tuple(names))


class _AnyField(FieldSpec):
    def contains(self, x: Number) -> bool:
        return True


_WIDE = _AnyField()


def _label_value(m, field: FieldSpec) -> Scalar:
    if isinstance(m, dict):
        (c,) = m.values()
        return coxeter_cosine("inf", field, S(c) if not isinstance(c, str) else Scalar(c))
    if m is None or (isinstance(m, str) and m.lower() in ("inf", "oo", "∞", "infinity")):
        return coxeter_cosine("inf", field)
    return coxeter_cosine(int(m), field)


def _label_field(labels: Sequence[Sequence]) -> FieldSpec:
    primes: set[int] = set()
    for row in labels:
        for m in row:
            if m in (1, "1"):
                continue
            value = _label_value(m, _WIDE)
            for n in value.radicands():
                primes |= set(prime_factors(n))
    return FieldSpec(sorted(primes))


def build_from_labels(labels: Sequence[Sequence], field: FieldSpec | None = None, names: Sequence[str] = ()) -> BasedRootSystem:
    """Root system from a Coxeter matrix; ``"inf"`` or ``{"inf": c}`` marks infinite bonds.

    Without an explicit field the smallest field holding all bonds is used.
    """
    n = len(labels)
    if any(len(r) != n for r in labels):
        raise InvalidGram("Coxeter matrix is not square")
    if field is None:
        field = _label_field(labels)
    G = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                if labels[i][j] not in (1, "1"):
                    raise InvalidGram(f"diagonal label {labels[i][j]} must be 1")
                row.append(ONE)
            else:
                if labels[i][j] != labels[j][i]:
                    raise InvalidGram("Coxeter matrix is not symmetric")
                row.append(_label_value(labels[i][j], field))
        G.append(row)
    return build_from_gram(field, G, names)


# --------------------------------------------------------------------------
# roots


def _enumerate(sys: BasedRootSystem, H: Scalar) -> list[Root]:
    found: dict[Vec, Root] = {}
    frontier = []
    for i in range(sys.rank):
        r = sys.simple_root(i)
        if r.height <= H and r.vector not in found:
            found[r.vector] = r
            frontier.append(r)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(sys.rank):
                c = sys.pair_simple(r.vector, i)
                if c.sign() >= 0:
                    continue
                h = r.height - 2 * c * sys.simple_heights[i]
                if h > H:
                    continue
                v = vsub(r.vector, vscale(2 * c, sys.simples[i]))
                if v in found:
                    continue
                coeffs = tuple(x - 2 * c if j == i else x for j, x in enumerate(r.coeffs))
                new = Root(v, coeffs, r.depth + 1, (i,) + r.word, h)
                found[v] = new
                nxt.append(new)
        frontier = nxt
    return sorted(found.values(), key=lambda r: (r.height, r.coeffs))


def positive_roots_up_to_height(sys: BasedRootSystem, H: Number) -> list[Root]:
    """All positive roots of height at most ``H``, sorted by height then coefficients."""
    H = S(H)
    cache = sys._enum_cache
    if cache["H"] is not None and H <= cache["H"]:
        return [r for r in cache["roots"] if r.height <= H]
    roots = _enumerate(sys, H)
    cache["H"], cache["roots"] = H, roots
    return list(roots)


def positive_roots_up_to_depth(sys: BasedRootSystem, depth: int) -> list[Root]:
    found: dict[Vec, Root] = {}
    frontier = [sys.simple_root(i) for i in range(sys.rank)]
    for r in frontier:
        found[r.vector] = r
    for _ in range(depth - 1):
        nxt = []
        for r in frontier:
            for i in range(sys.rank):
                c = sys.pair_simple(r.vector, i)
                if c.sign() >= 0:
                    continue
                v = vsub(r.vector, vscale(2 * c, sys.simples[i]))
                if v in found:
                    continue
                coeffs = tuple(x - 2 * c if j == i else x for j, x in enumerate(r.coeffs))
                new = Root(v, coeffs, r.depth + 1, (i,) + r.word, r.height - 2 * c * sys.simple_heights[i])
                found[v] = new
                nxt.append(new)
        frontier = nxt
    return sorted(found.values(), key=lambda r: (r.height, r.coeffs))


def is_root(sys: BasedRootSystem, v: Sequence) -> Root | None:
    """The positive root ``v`` or ``-v`` if ``v`` is a root, else ``None``."""
    v = vec(v)
    h = sys.height(v)
    if not h:
        return None
    if h.sign() < 0:
        v, h = vneg(v), -h
    for r in positive_roots_up_to_height(sys, h):
        if r.height == h and r.vector == v:
            return r
    return None


def as_root(sys: BasedRootSystem, v: Sequence | Root) -> Root:
    if isinstance(v, Root):
        return v
    r = is_root(sys, v)
    if r is None:
        raise NotARoot(f"{[str(x) for x in vec(v)]} is not a root")
    return r


def positive_rep(sys: BasedRootSystem, v: Vec) -> Vec:
    return vneg(v) if sys.height(v).sign() < 0 else v


def classify_component(sys: BasedRootSystem, component: Sequence[int]) -> ComponentType:
    """Finite, affine (with its positive null vector) or indefinite."""
    idx = tuple(sorted(component))
    G = tuple(tuple(sys.gram[i][j] for j in idx) for i in idx)
    p, q, z = signature(G)
    if q == 0 and z == 0:
        return ComponentType("finite", idx)
    if q == 0 and z == 1:
        (k,) = kernel_basis(G, len(idx))
        delta = canonical_ray(k)
        if any(x.sign() <= 0 for x in delta):
            raise AlgorithmInvariantViolated("affine null vector is not positive")
        return ComponentType("affine", idx, delta)
    return ComponentType("indefinite", idx)


def classify(sys: BasedRootSystem, indices: Iterable[int] | None = None) -> list[ComponentType]:
    idx = range(sys.rank) if indices is None else indices
    return [classify_component(sys, c) for c in sys.components_of(idx)]


def is_finite_type(sys: BasedRootSystem, indices: Iterable[int]) -> bool:
    return all(c.kind == "finite" for c in classify(sys, indices))


# --------------------------------------------------------------------------
# words


def reduce_word(sys: BasedRootSystem, word: Sequence[int]) -> Word:
    """A reduced word for the same element, by the deletion rule."""
    red: list[int] = []
    for s in word:
        b = sys.act(red, sys.simples[s])
        if sys.height(b).sign() > 0:
            red.append(s)
            continue
        target = vneg(b)
        for i in range(len(red)):
            if sys.act(red[:i], sys.simples[red[i]]) == target:
                del red[i]
                break
        else:
            raise AlgorithmInvariantViolated("deletion rule found no matching letter")
    return tuple(red)


def inversion_roots(sys: BasedRootSystem, word: Sequence[int]) -> list[Vec]:
    """The positive roots ``s_{a1}...s_{a(i-1)}(alpha_{ai})`` of a reduced form of ``word``."""
    red = reduce_word(sys, word)
    return [sys.act(red[:i], sys.simples[red[i]]) for i in range(len(red))]


def length(sys: BasedRootSystem, word: Sequence[int]) -> int:
    return len(reduce_word(sys, word))


def inverse_word(word: Sequence[int]) -> Word:
    return tuple(reversed(word))


def reflection_word(root: Root) -> Word:
    """A reduced word for the reflection in ``root``."""
    w = root.word[:-1]
    return tuple(w) + (root.word[-1],) + tuple(reversed(w))


# --------------------------------------------------------------------------
# reflection subgroups


def dominates(sys: BasedRootSystem, a: Root, b: Root) -> bool:
    """Dominance ``a <= b`` for positive roots: ``<a,b> >= 1`` and ``l(s_a) <= l(s_b)``."""
    return sys.pair(a.vector, b.vector) >= 1 and a.length <= b.length


def in_subgroup_roots(sys: BasedRootSystem, simples: Sequence[Vec], beta: Vec, limit: int = 100000) -> bool:
    """Whether the root ``beta`` is a root of the reflection subgroup with
    canonical simple roots ``simples``."""
    v = positive_rep(sys, beta)
    targets = set(simples)
    for _ in range(limit):
        if v in targets:
            return True
        step = next((g for g in simples if sys.pair(v, g).sign() > 0), None)
        if step is None:
            return False
        v = sys.reflect(v, step)
        if sys.height(v).sign() < 0:
            return False
    raise AlgorithmInvariantViolated("subgroup membership descent did not terminate")


def canonical_oracle(sys: BasedRootSystem, simples: Sequence[Root]) -> bool:
    """Check ``N(s_g) n W' = {s_g}`` for every ``g`` in ``simples``."""
    vecs = [g.vector for g in simples]
    for g in simples:
        for b in inversion_roots(sys, reflection_word(g)):
            if b != g.vector and in_subgroup_roots(sys, vecs, b):
                return False
    return True


def _finite_dihedral_pair(sys: BasedRootSystem, x: Vec, y: Vec) -> tuple[Vec, Vec]:
    roots = {x, y, vneg(x), vneg(y)}
    frontier = list(roots)
    while frontier:
        nxt = []
        for v in frontier:
            for g in (x, y):
                w = sys.reflect(v, g)
                if w not in roots:
                    roots.add(w)
                    nxt.append(w)
        if len(roots) > 200:
            raise AlgorithmInvariantViolated("finite dihedral closure is too large")
        frontier = nxt
    pos = [r for r in roots if sys.height(r).sign() > 0]
    simple = [
        g for g in pos if all(sys.height(sys.reflect(b, g)).sign() > 0 for b in pos if b != g)
    ]
    if len(simple) != 2:
        raise AlgorithmInvariantViolated(f"finite dihedral subgroup has {len(simple)} simple roots")
    return simple[0], simple[1]


def dihedral_canonical_pair(sys: BasedRootSystem, b1: Root | Vec, b2: Root | Vec) -> tuple[Root, Root]:
    """Canonical simple roots of the subgroup generated by two reflections.

    Pairs with ``|<b1,b2>| < 1`` generate a finite dihedral group, whose
    (finite) root set is closed up and searched directly.  Otherwise the
    higher root is repeatedly replaced by the positive representative of its
    reflection in the lower one; the total height strictly decreases.
    """
    x = positive_rep(sys, b1.vector if isinstance(b1, Root) else vec(b1))
    y = positive_rep(sys, b2.vector if isinstance(b2, Root) else vec(b2))
    if x == y:
        raise NotDistinctReflections("the two reflections coincide")
    c = sys.pair(x, y)
    if is_valid_bond(c):
        return as_root(sys, x), as_root(sys, y)
    if abs(c) < 1:
        p, q = _finite_dihedral_pair(sys, x, y)
        if q in (x, y) and p not in (x, y):
            p, q = q, p
        if q == x or p == y:
            p, q = q, p
        return as_root(sys, p), as_root(sys, q)
    slots = [x, y]
    for _ in range(10000):
        c = sys.pair(slots[0], slots[1])
        if is_valid_bond(c):
            return as_root(sys, slots[0]), as_root(sys, slots[1])
        hs = [sys.height(v) for v in slots]
        big = 0 if (hs[0], slots[0]) > (hs[1], slots[1]) else 1
        small = 1 - big
        new = positive_rep(sys, sys.reflect(slots[big], slots[small]))
        if sys.height(new) >= hs[big]:
            raise AlgorithmInvariantViolated("dihedral reduction did not decrease the height")
        slots[big] = new
    raise AlgorithmInvariantViolated("dihedral reduction did not terminate")


@dataclass(frozen=True)
class ReflectionSubgroup:
    simples: tuple[Root, ...]
    components: tuple[tuple[int, ...], ...]
    types: tuple[ComponentType, ...]

    @property
    def vectors(self) -> tuple[Vec, ...]:
        return tuple(r.vector for r in self.simples)

    def gram(self, sys: BasedRootSystem) -> Mat:
        vs = self.vectors
        return tuple(tuple(sys.pair(a, b) for b in vs) for a in vs)


def subgroup_from_simples(sys: BasedRootSystem, simples: Sequence[Root]) -> ReflectionSubgroup:
    simples = tuple(simples)
    vs = [r.vector for r in simples]
    n = len(vs)
    G = tuple(tuple(sys.pair(a, b) for b in vs) for a in vs)
    comps: list[tuple[int, ...]] = []
    seen: set[int] = set()
    for s in range(n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and G[i][j]:
                    seen.add(j)
                    stack.append(j)
        comps.append(tuple(sorted(comp)))
    types = []
    for comp in comps:
        sub = tuple(tuple(G[i][j] for j in comp) for i in comp)
        p, q, z = signature(sub)
        if q == 0 and z == 0:
            types.append(ComponentType("finite", comp))
        elif q == 0 and z == 1:
            (k,) = kernel_basis(sub, len(comp))
            types.append(ComponentType("affine", comp, canonical_ray(k)))
        else:
            types.append(ComponentType("indefinite", comp))
    return ReflectionSubgroup(simples, tuple(comps), tuple(types))


def canonical_simples(sys: BasedRootSystem, gamma: Iterable[Root | Vec], verify: bool = True) -> ReflectionSubgroup:
    """Canonical simple roots of the reflection subgroup generated by ``gamma``."""
    current: list[Vec] = []
    for g in gamma:
        v = positive_rep(sys, g.vector if isinstance(g, Root) else vec(g))
        if v not in current:
            current.append(v)
    if not current:
        raise RootSystemError("empty generating set")
    for _ in range(10000):
        bad = []
        for i in range(len(current)):
            for j in range(i + 1, len(current)):
                if not is_valid_bond(sys.pair(current[i], current[j])):
                    bad.append((sys.height(current[i]) + sys.height(current[j]), i, j))
        if not bad:
            break
        _, i, j = min(bad, key=lambda t: (t[0], t[1], t[2]))
        a, b = dihedral_canonical_pair(sys, current[i], current[j])
        current[i], current[j] = a.vector, b.vector
        deduped: list[Vec] = []
        for v in current:
            if v not in deduped:
                deduped.append(v)
        current = deduped
    else:
        raise AlgorithmInvariantViolated("canonical simple reduction did not terminate")
    roots = [as_root(sys, v) for v in current]
    if verify and not canonical_oracle(sys, roots):
        raise AlgorithmInvariantViolated("canonical simple roots fail the inversion-set check")
    return subgroup_from_simples(sys, roots)


def subsystem(sys: BasedRootSystem, sub: ReflectionSubgroup | Sequence[Root | Vec]) -> BasedRootSystem:
    """The reflection subgroup's based root system, inside the same space."""
    vs = sub.vectors if isinstance(sub, ReflectionSubgroup) else [
        g.vector if isinstance(g, Root) else vec(g) for g in sub
    ]
    return build_from_vectors(sys.field, sys.form, vs)


def standard_subsystem(sys: BasedRootSystem, indices: Sequence[int]) -> BasedRootSystem:
    return build_from_vectors(sys.field, sys.form, [sys.simples[i] for i in indices])
