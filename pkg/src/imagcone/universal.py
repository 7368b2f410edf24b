"""Generic universal root systems: every pair of distinct simple roots pairs
below -1.  Here the root cone splits into ``Z`` and the cones ``D_alpha``,
and points outside ``Z`` carry a forced itinerary of simple reflections."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from .exactfield import Scalar, Vec, vadd, vec, vscale
from .limitrays import exp_lambda
from .polycone import PolyCone
from .rootsys import (
    AlgorithmInvariantViolated,
    BasedRootSystem,
    Root,
    RootSystemError,
    dominates,
)

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10000


class SqrtNotInField(RootSystemError):
    pass


class NotInPositiveCone(RootSystemError):
    pass


class UniquenessViolated(AlgorithmInvariantViolated):
    pass


class InvalidPrefix(RootSystemError):
    pass


def validate_generic_universal(sys: BasedRootSystem) -> bool:
    n = sys.rank
    return n >= 2 and all(sys.gram[i][j] < -1 for i in range(n) for j in range(n) if i != j)


def _v(sys: BasedRootSystem, a: int | Root | Sequence) -> Vec:
    if isinstance(a, int):
        return sys.simples[a]
    return a.vector if isinstance(a, Root) else vec(a)


def uprime_vec(sys: BasedRootSystem, a, b) -> Vec:
    """``u'(a, b) = -<a,b> a + b``."""
    av, bv = _v(sys, a), _v(sys, b)
    return vadd(vscale(-sys.pair(av, bv), av), bv)


def u_vec(sys: BasedRootSystem, a, b) -> Vec:
    """``u(a, b) = e a + b`` with ``e = -c + sqrt(c^2 - 1)``, ``c = <a,b>``."""
    av, bv = _v(sys, a), _v(sys, b)
    c = sys.pair(av, bv)
    if c > -1:
        raise RootSystemError("u is only defined for pairs with <a,b> <= -1")
    e = exp_lambda(c, sys.field)
    if e is None:
        raise SqrtNotInField(f"sqrt({c * c - 1}) is not available exactly")
    return vadd(vscale(e, av), bv)


def k_plus(sys: BasedRootSystem) -> PolyCone:
    n = sys.rank
    gens = [u_vec(sys, i, j) for i in range(n) for j in range(n) if i != j]
    return PolyCone.from_generators(gens, dim=sys.dim, form=sys.form)


def d_cone(sys: BasedRootSystem, i: int) -> PolyCone:
    """``D_alpha``: spanned by ``alpha`` and the ``u(alpha, beta)``."""
    gens = [sys.simples[i]] + [u_vec(sys, i, j) for j in range(sys.rank) if j != i]
    return PolyCone.from_generators(gens, dim=sys.dim, form=sys.form)


def k_rho(sys: BasedRootSystem) -> Scalar:
    """The separation constant: min of ``|<u, 2 beta>| / <rho, u>`` over simple ``alpha, beta``
    and ``u`` in ``{alpha} u {u(alpha, gamma)}``."""
    best = None
    for a in range(sys.rank):
        us = [sys.simples[a]] + [u_vec(sys, a, g) for g in range(sys.rank) if g != a]
        for b in range(sys.rank):
            for u in us:
                q = abs(2 * sys.pair_simple(u, b)) / sys.height(u)
                if best is None or q < best:
                    best = q
    return best


def positive_simples(sys: BasedRootSystem, v: Vec) -> list[int]:
    return [i for i in range(sys.rank) if sys.pair_simple(v, i).sign() > 0]


def _unique_positive(sys: BasedRootSystem, v: Vec) -> int:
    pos = positive_simples(sys, v)
    if len(pos) != 1:
        raise UniquenessViolated(f"{len(pos)} simple roots pair positively, expected one")
    return pos[0]


@dataclass(frozen=True)
class LocateResult:
    status: str  # "in_z", "in_d", "zero" or "inconclusive"
    word: tuple[int, ...] = ()
    alpha: int | None = None
    steps: int = 0


def locate(sys: BasedRootSystem, v: Sequence, budget: int = DEFAULT_BUDGET) -> LocateResult:
    """Decide which of ``Z`` and the cones ``D_alpha`` contain a point of the root cone."""
    v = vec(v)
    cone = sys.positive_cone
    if not cone.contains(v):
        raise NotInPositiveCone("vector is not in the positive root cone")
    if all(not x for x in v):
        return LocateResult("zero")
    if sys.norm(v).sign() >= 0:
        return LocateResult("in_d", alpha=_unique_positive(sys, v))
    cur = v
    word: tuple[int, ...] = ()
    for step in range(budget + 1):
        pos = positive_simples(sys, cur)
        if not pos:
            return LocateResult("in_z", word, steps=step)
        if len(pos) > 1:
            raise UniquenessViolated("forced descent is ambiguous")
        if step == budget:
            break
        cur = sys.reflect_simple(cur, pos[0])
        word = (pos[0],) + word
        if not cone.contains(cur):
            log.info("forced descent left the root cone after %d steps; locating by the sign pattern", step + 1)
            return LocateResult("in_d", word, alpha=_unique_positive(sys, v), steps=step + 1)
    return LocateResult("inconclusive", word, steps=budget)


@dataclass(frozen=True)
class Itinerary:
    prefix: tuple[int, ...]
    terminated: bool  # the orbit reached K
    steps: int
    exited: bool = False  # the orbit left the root cone
    heights: tuple[Scalar, ...] = ()


def itinerary(sys: BasedRootSystem, v: Sequence, n: int) -> Itinerary:
    """The first ``n`` letters of the forced sequence of simple reflections."""
    v = vec(v)
    cone = sys.positive_cone
    if not cone.contains(v):
        raise NotInPositiveCone("vector is not in the positive root cone")
    prefix: list[int] = []
    heights = [sys.height(v)]
    cur = v
    for step in range(n):
        pos = positive_simples(sys, cur)
        if not pos:
            return Itinerary(tuple(prefix), True, step, False, tuple(heights))
        if len(pos) > 1:
            raise UniquenessViolated("more than one simple root pairs positively")
        prefix.append(pos[0])
        cur = sys.reflect_simple(cur, pos[0])
        heights.append(sys.height(cur))
        if not cone.contains(cur):
            return Itinerary(tuple(prefix), False, step + 1, True, tuple(heights))
    if not positive_simples(sys, cur):
        return Itinerary(tuple(prefix), True, n, False, tuple(heights))
    return Itinerary(tuple(prefix), False, n, False, tuple(heights))


def beta_prime_roots(sys: BasedRootSystem, prefix: Sequence[int], n: int | None = None) -> list[Root]:
    """``beta'_i = s_{b0} ... s_{b(i-1)} (b_i)`` for ``i < n``; each dominates its predecessor."""
    prefix = tuple(prefix)
    n = len(prefix) if n is None else n
    if n > len(prefix) or any(not 0 <= b < sys.rank for b in prefix):
        raise InvalidPrefix("prefix is too short or has an invalid letter")
    if any(prefix[i] == prefix[i + 1] for i in range(len(prefix) - 1)):
        raise InvalidPrefix("consecutive letters must differ")
    out = [sys.root_from_word(prefix[: i + 1]) for i in range(n)]
    for a, b in zip(out, out[1:]):
        if not dominates(sys, a, b):
            raise AlgorithmInvariantViolated("dominance chain is broken")
    return out


def prefix_dominates(a: Root, b: Root) -> bool:
    """Dominance in a universal system: the witness word of ``a`` is a prefix of that of ``b``."""
    return b.word[: len(a.word)] == a.word
