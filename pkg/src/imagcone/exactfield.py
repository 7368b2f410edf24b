"""Exact arithmetic in multi-quadratic real fields Q(sqrt d1, ..., sqrt dk).

A :class:`Scalar` is stored in the basis of square roots of squarefree
integers, so ``sqrt6`` and ``sqrt2*sqrt3`` share one canonical key and
scalars built over different radicand lists always compare correctly.
The real embedding takes every square root positive.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

Number = Union[int, Fraction, "Scalar"]


class FieldError(ValueError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class UnrepresentableLabel(FieldError):
    pass


class InvalidInfiniteBond(FieldError):
    pass


class NegativeRadicand(FieldError):
    pass


class NoSolution(FieldError):
    pass


class DimensionMismatch(FieldError):
    pass


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[int, ...]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return tuple(out)


@lru_cache(maxsize=None)
def squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(f, m)`` with ``n == f*f*m`` and ``m`` squarefree."""
    if n <= 0:
        raise ValueError("expected a positive integer")
    f, m = 1, 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        f *= p ** (e // 2)
        if e % 2:
            m *= p
        p += 1
    return f, m * n


def is_squarefree(n: int) -> bool:
    return n >= 1 and squarefree_split(n)[0] == 1


# --------------------------------------------------------------------------
# coefficient-dict kernels: dict[squarefree int -> nonzero Fraction]

_Coeffs = dict


def _add(a: _Coeffs, b: _Coeffs, sign: int = 1) -> _Coeffs:
    out = dict(a)
    for n, q in b.items():
        r = out.get(n, 0) + sign * q
        if r:
            out[n] = r
        else:
            out.pop(n, None)
    return out


def _scale(a: _Coeffs, q: Fraction) -> _Coeffs:
    if not q:
        return {}
    return {n: c * q for n, c in a.items()}


def _mul(a: _Coeffs, b: _Coeffs) -> _Coeffs:
    if len(a) == 1 and 1 in a:
        return _scale(b, a[1])
    if len(b) == 1 and 1 in b:
        return _scale(a, b[1])
    out: dict[int, Fraction] = {}
    for n, p in a.items():
        for m, q in b.items():
            g = math.gcd(n, m)
            key = (n // g) * (m // g)
            r = out.get(key, 0) + p * q * g
            if r:
                out[key] = r
            else:
                out.pop(key, None)
    return out


def _top_prime(a: _Coeffs) -> int:
    return max(p for n in a for p in prime_factors(n))


def _split(a: _Coeffs, p: int) -> tuple[_Coeffs, _Coeffs]:
    """Write ``a = A + sqrt(p) * B`` with A, B free of the prime p."""
    A = {n: q for n, q in a.items() if n % p}
    B = {n // p: q for n, q in a.items() if n % p == 0}
    return A, B


def _sign(a: _Coeffs) -> int:
    if not a:
        return 0
    if len(a) == 1:
        return 1 if next(iter(a.values())) > 0 else -1
    p = _top_prime(a)
    A, B = _split(a, p)
    sa, sb = _sign(A), _sign(B)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    d = _sign(_add(_mul(A, A), _scale(_mul(B, B), Fraction(p)), -1))
    return sa * d


def _inv(a: _Coeffs) -> _Coeffs:
    if not a:
        raise DivisionByZero("division by zero")
    if len(a) == 1:
        (n, q), = a.items()
        # 1/(q sqrt n) = sqrt n / (q n)
        return {n: 1 / (q * n)}
    p = _top_prime(a)
    A, B = _split(a, p)
    conj = _add(A, {n * p: q for n, q in B.items()}, -1)
    norm = _add(_mul(A, A), _scale(_mul(B, B), Fraction(p)), -1)
    return _mul(conj, _inv(norm))


# --------------------------------------------------------------------------


class Scalar:
    """Immutable element of a multi-quadratic real field."""

    __slots__ = ("_c", "_hash")

    def __init__(self, value: Number | str = 0) -> None:
        if isinstance(value, Scalar):
            self._c = value._c
        elif isinstance(value, (int, Fraction)):
            self._c = {1: Fraction(value)} if value else {}
        elif isinstance(value, str):
            self._c = parse_scalar(value)._c
        else:
            raise TypeError(f"cannot build a Scalar from {type(value).__name__}")
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: _Coeffs) -> Scalar:
        s = object.__new__(cls)
        s._c = coeffs
        s._hash = None
        return s

    @classmethod
    def from_terms(cls, terms: Mapping[int, Fraction | int | str]) -> Scalar:
        """Build ``sum q * sqrt(n)``; keys need not be squarefree."""
        out: _Coeffs = {}
        for n, q in terms.items():
            f, m = squarefree_split(int(n))
            out = _add(out, {m: Fraction(q) * f})
        return cls._raw(out)

    @classmethod
    def sqrt_of(cls, n: int) -> Scalar:
        return cls.from_terms({n: 1})

    @property
    def coefficients(self) -> dict[int, Fraction]:
        return dict(self._c)

    def is_rational(self) -> bool:
        return not self._c or (len(self._c) == 1 and 1 in self._c)

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self._c.get(1, Fraction(0))

    def radicands(self) -> set[int]:
        return {n for n in self._c if n != 1}

    def sign(self) -> int:
        return _sign(self._c)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other: Number) -> Scalar:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Scalar._raw(_add(self._c, o._c))

    __radd__ = __add__

    def __sub__(self, other: Number) -> Scalar:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Scalar._raw(_add(self._c, o._c, -1))

    def __rsub__(self, other: Number) -> Scalar:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Scalar._raw(_add(o._c, self._c, -1))

    def __neg__(self) -> Scalar:
        return Scalar._raw({n: -q for n, q in self._c.items()})

    def __pos__(self) -> Scalar:
        return self

    def __abs__(self) -> Scalar:
        return -self if self.sign() < 0 else self

    def __mul__(self, other: Number) -> Scalar:
        if isinstance(other, (int, Fraction)):
            return Scalar._raw(_scale(self._c, Fraction(other)))
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Scalar._raw(_mul(self._c, o._c))

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> Scalar:
        if isinstance(other, (int, Fraction)):
            if not other:
                raise DivisionByZero("division by zero")
            return Scalar._raw(_scale(self._c, 1 / Fraction(other)))
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Scalar._raw(_mul(self._c, _inv(o._c)))

    def __rtruediv__(self, other: Number) -> Scalar:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int) -> Scalar:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (1 / self) ** (-k)
        out = Scalar(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # comparison -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self._c.get(1, 0))
            else:
                self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def _cmp(self, other: Number) -> int:
        o = _coerce(other)
        if o is None:
            raise TypeError(f"cannot compare Scalar with {type(other).__name__}")
        return _sign(_add(self._c, o._c, -1))

    def __lt__(self, other: Number) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other: Number) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other: Number) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other: Number) -> bool:
        return self._cmp(other) >= 0

    def __bool__(self) -> bool:
        return bool(self._c)

    def __float__(self) -> float:
        return math.fsum(float(q) * math.sqrt(n) for n, q in self._c.items())

    # rendering ------------------------------------------------------------

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for n in sorted(self._c):
            q = self._c[n]
            body = str(q) if n == 1 else (f"sqrt{n}" if q == 1 else f"-sqrt{n}" if q == -1 else f"{q}*sqrt{n}")
            if parts and not body.startswith("-"):
                body = "+" + body
            parts.append(body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Scalar('{self}')"

    def to_json(self) -> dict[str, str]:
        return {str(n): str(self._c[n]) for n in sorted(self._c)}

    @classmethod
    def from_json(cls, data: Mapping[str, str] | str | int | float) -> Scalar:
        if isinstance(data, Mapping):
            return cls.from_terms({int(k): Fraction(v) for k, v in data.items()})
        if isinstance(data, float):
            return cls(Fraction(data).limit_denominator())
        return cls(data) if not isinstance(data, str) else parse_scalar(data)


def _coerce(x: object) -> Scalar | None:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar._raw({1: Fraction(x)} if x else {})
    return None


_TERM = re.compile(r"\s*([+-])?\s*(\d+(?:/\d+)?)?\s*(\*?\s*sqrt\s*\(?\s*(\d+)\s*\)?)?")


def parse_scalar(text: str) -> Scalar:
    """Parse strings such as ``"3/4"``, ``"-sqrt2/2"`` or ``"1/4+1/4*sqrt5"``."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    terms: dict[int, Fraction] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(4) is None):
            raise ValueError(f"cannot parse scalar {text!r}")
        q = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(1) == "-":
            q = -q
        pos = m.end()
        n = int(m.group(4)) if m.group(4) else 1
        if pos < len(s) and s[pos] == "/":
            d = re.match(r"/(\d+)", s[pos:])
            q /= int(d.group(1))
            pos += d.end()
        terms[n] = terms.get(n, 0) + q
    return Scalar.from_terms(terms)


ZERO = Scalar(0)
ONE = Scalar(1)


def S(x: Number | str) -> Scalar:
    return x if isinstance(x, Scalar) else Scalar(x)


def sign(a: Number) -> int:
    if isinstance(a, Scalar):
        return a.sign()
    return (a > 0) - (a < 0)


# --------------------------------------------------------------------------


class FieldSpec:
    """The field Q(sqrt d for d in radicands); an empty list means Q."""

    __slots__ = ("radicands", "_group")

    def __init__(self, radicands: Iterable[int] = ()) -> None:
        rads = tuple(int(d) for d in radicands)
        if list(rads) != sorted(set(rads)):
            raise FieldError("radicands must be ascending and pairwise distinct")
        for d in rads:
            if d <= 1 or not is_squarefree(d):
                raise FieldError(f"radicand {d} is not a squarefree integer > 1")
        self.radicands = rads
        group = {1}
        for d in rads:
            group |= {_sqf_product(g, d) for g in group}
        self._group = frozenset(group)

    @property
    def basis(self) -> tuple[int, ...]:
        return tuple(sorted(self._group))

    def contains(self, x: Number) -> bool:
        if not isinstance(x, Scalar):
            return True
        return all(n in self._group for n in x._c)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldSpec) and self.radicands == other.radicands

    def __hash__(self) -> int:
        return hash(self.radicands)

    def __repr__(self) -> str:
        return f"FieldSpec({list(self.radicands)})"

    def to_json(self) -> dict[str, list[int]]:
        return {"radicands": list(self.radicands)}

    @classmethod
    def from_json(cls, data: Mapping | None) -> FieldSpec:
        return cls((data or {}).get("radicands", []))

    def join(self, other: FieldSpec) -> FieldSpec:
        return FieldSpec(sorted(set(self.radicands) | set(other.radicands)))


QQ = FieldSpec()


def _sqf_product(a: int, b: int) -> int:
    g = math.gcd(a, b)
    return (a // g) * (b // g)


def arith(a: Number, b: Number, op: str) -> Scalar:
    a, b = S(a), S(b)
    if op == "+":
        return a + b
    if op in ("-", "−"):
        return a - b
    if op in ("*", "×"):
        return a * b
    if op in ("/", "÷"):
        if not b:
            raise DivisionByZero("division by zero")
        return a / b
    raise ValueError(f"unknown operator {op!r}")


def _cos_table() -> dict[int, Scalar]:
    return {
        2: ZERO,
        3: Scalar(Fraction(-1, 2)),
        4: Scalar.from_terms({2: Fraction(-1, 2)}),
        5: Scalar.from_terms({1: Fraction(-1, 4), 5: Fraction(-1, 4)}),
        6: Scalar.from_terms({3: Fraction(-1, 2)}),
        12: Scalar.from_terms({2: Fraction(-1, 4), 6: Fraction(-1, 4)}),
    }


#: the labels m whose -cos(pi/m) is multi-quadratic, keyed by m
FINITE_BONDS: dict[int, Scalar] = _cos_table()


def coxeter_cosine(m: int | str, field: FieldSpec = QQ, c: Number | None = None) -> Scalar:
    """Return ``-cos(pi/m)`` for a finite label, or the bond ``c`` for ``m = inf``."""
    if m in ("inf", "oo", "∞", 0, math.inf):
        if c is None:
            c = -1
        c = S(c)
        if c > -1:
            raise InvalidInfiniteBond(f"infinite bond needs c <= -1, got {c}")
        if not field.contains(c):
            raise UnrepresentableLabel(f"{c} is not in {field}")
        return c
    m = int(m)
    if m not in FINITE_BONDS:
        raise UnrepresentableLabel(f"-cos(pi/{m}) is not in any multi-quadratic field")
    value = FINITE_BONDS[m]
    if not field.contains(value):
        raise UnrepresentableLabel(f"-cos(pi/{m}) = {value} is not in {field}")
    return value


def bond_label(c: Number) -> int | None:
    """Return m with ``c == -cos(pi/m)``, ``None`` for c <= -1; raise otherwise."""
    c = S(c)
    if c <= -1:
        return None
    for m, v in FINITE_BONDS.items():
        if v == c:
            return m
    raise ValueError(f"{c} is neither <= -1 nor of the form -cos(pi/m)")


def is_valid_bond(c: Number) -> bool:
    try:
        bond_label(c)
    except ValueError:
        return False
    return True


# --------------------------------------------------------------------------
# square roots


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    a, b = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def _sqrt_in(a: Scalar, gens: tuple[int, ...]) -> Scalar | None:
    """A square root of ``a`` in Q(sqrt g for g in gens), any sign, or None."""
    if a.sign() < 0:
        return None
    if not a:
        return ZERO
    if not gens:
        if not a.is_rational():
            return None
        r = _rational_sqrt(a.rational())
        return None if r is None else Scalar(r)
    d, rest = gens[-1], gens[:-1]
    sub_group = FieldSpec(sorted(rest))._group if rest else frozenset({1})
    if d in sub_group:
        return _sqrt_in(a, rest)
    # a = A + sqrt(d) B with A, B in the subfield
    A: _Coeffs = {}
    B: _Coeffs = {}
    for n, q in a._c.items():
        if n in sub_group:
            A[n] = q
        else:
            n2 = _sqf_product(n, d)
            if n2 not in sub_group:
                return None
            g = math.gcd(d, n2)
            B = _add(B, {n2: q / g})
    A_s, B_s = Scalar._raw(A), Scalar._raw(B)
    root_d = Scalar.sqrt_of(d)
    candidates: list[Scalar] = []
    if not B_s:
        x = _sqrt_in(A_s, rest)
        if x is not None:
            candidates.append(x)
        y = _sqrt_in(A_s / d, rest)
        if y is not None:
            candidates.append(y * root_d)
    else:
        disc = _sqrt_in(A_s * A_s - B_s * B_s * d, rest)
        if disc is not None:
            for t in (disc, -disc):
                y2 = (A_s + t) / (2 * d)
                y = _sqrt_in(y2, rest) if y2 else None
                if y:
                    candidates.append(B_s / (2 * y) + y * root_d)
    for s in candidates:
        if s * s == a:
            return s
    return None


def try_sqrt(a: Number, field: FieldSpec = QQ) -> Scalar | None:
    """Nonnegative square root of ``a`` inside ``field``, or None if it is not there."""
    a = S(a)
    if a.sign() < 0:
        raise NegativeRadicand(f"{a} is negative")
    s = _sqrt_in(a, field.radicands)
    if s is None:
        return None
    return -s if s.sign() < 0 else s


# --------------------------------------------------------------------------
# vectors and matrices (tuples of Scalars)

Vec = tuple
Mat = tuple


def vec(xs: Iterable[Number | str]) -> Vec:
    return tuple(S(x) for x in xs)


def mat(rows: Iterable[Iterable[Number | str]]) -> Mat:
    return tuple(vec(r) for r in rows)


def zero_vec(n: int) -> Vec:
    return (ZERO,) * n


def unit_vec(n: int, i: int) -> Vec:
    return tuple(ONE if j == i else ZERO for j in range(n))


def identity(n: int) -> Mat:
    return tuple(unit_vec(n, i) for i in range(n))


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    if len(u) != len(v):
        raise DimensionMismatch(f"lengths {len(u)} and {len(v)}")
    acc: _Coeffs = {}
    for a, b in zip(u, v):
        if a._c and b._c:
            acc = _add(acc, _mul(a._c, b._c))
    return Scalar._raw(acc)


def vadd(u: Vec, v: Vec) -> Vec:
    if len(u) != len(v):
        raise DimensionMismatch(f"lengths {len(u)} and {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vec, v: Vec) -> Vec:
    if len(u) != len(v):
        raise DimensionMismatch(f"lengths {len(u)} and {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vscale(c: Number, v: Vec) -> Vec:
    c = S(c)
    return tuple(c * a for a in v)


def vneg(v: Vec) -> Vec:
    return tuple(-a for a in v)


def vsum(vs: Iterable[Vec], n: int) -> Vec:
    out = zero_vec(n)
    for v in vs:
        out = vadd(out, v)
    return out


def lincomb(coeffs: Sequence[Number], vs: Sequence[Vec]) -> Vec:
    if not vs:
        raise DimensionMismatch("empty combination")
    out = zero_vec(len(vs[0]))
    for c, v in zip(coeffs, vs):
        if c:
            out = vadd(out, vscale(c, v))
    return out


def is_zero(v: Sequence[Scalar]) -> bool:
    return not any(v)


def transpose(M: Sequence[Sequence[Scalar]]) -> Mat:
    return tuple(zip(*M)) if M else ()


def mat_vec(M: Sequence[Sequence[Scalar]], v: Vec) -> Vec:
    return tuple(dot(row, v) for row in M)


def mat_mul(A: Mat, B: Mat) -> Mat:
    Bt = transpose(B)
    return tuple(tuple(dot(r, c) for c in Bt) for r in A)


def is_symmetric(M: Mat) -> bool:
    n = len(M)
    return all(len(r) == n for r in M) and all(M[i][j] == M[j][i] for i in range(n) for j in range(i))


def rref(M: Sequence[Sequence[Scalar]], ncols: int | None = None) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form and pivot columns (first nonzero pivot rule)."""
    A = [list(r) for r in M]
    if ncols is None:
        ncols = len(A[0]) if A else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(A)) if A[i][c]), None)
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[: len(pivots)], pivots


def rank(M: Sequence[Sequence[Scalar]]) -> int:
    if not M:
        return 0
    return len(rref(M)[1])


def solve(M: Sequence[Sequence[Scalar]], b: Sequence[Scalar]) -> Vec:
    """A solution of ``M x = b`` with free variables set to zero."""
    if len(M) != len(b):
        raise DimensionMismatch(f"{len(M)} rows against right-hand side of length {len(b)}")
    ncols = len(M[0]) if M else 0
    aug = [list(r) + [S(x)] for r, x in zip(M, b)]
    R, piv = rref(aug, ncols + 1)
    if ncols in piv:
        raise NoSolution("inconsistent linear system")
    x = [ZERO] * ncols
    for row, c in zip(R, piv):
        x[c] = row[ncols]
    return tuple(x)


def kernel_basis(M: Sequence[Sequence[Scalar]], ncols: int | None = None) -> list[Vec]:
    """Basis of ``{x : M x = 0}``, one vector per free column."""
    if ncols is None:
        ncols = len(M[0]) if M else 0
    R, piv = rref(M, ncols) if M else ([], [])
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for row, c in zip(R, piv):
            x[c] = -row[f]
        basis.append(tuple(x))
    return basis


def inverse(M: Mat) -> Mat:
    n = len(M)
    aug = [list(r) + list(e) for r, e in zip(M, identity(n))]
    R, piv = rref(aug, n)
    if piv != list(range(n)):
        raise NoSolution("singular matrix")
    return tuple(tuple(r[n:]) for r in R)


def signature(M: Mat) -> tuple[int, int, int]:
    """Inertia ``(p, q, z)`` of a symmetric matrix by congruence pivoting."""
    A = [list(r) for r in M]
    n = len(A)
    if any(len(r) != n for r in A):
        raise DimensionMismatch("signature needs a square matrix")
    if not is_symmetric(tuple(tuple(r) for r in A)):
        raise ValueError("signature needs a symmetric matrix")
    p = q = z = 0
    while A:
        k = len(A)
        piv = next((i for i in range(k) if A[i][i]), None)
        if piv is None:
            pair = next(((i, j) for i in range(k) for j in range(i + 1, k) if A[i][j]), None)
            if pair is None:
                z += k
                break
            i, j = pair
            # replace e_i by e_i + e_j, which makes the (i, i) entry 2 A[i][j]
            for t in range(k):
                A[i][t] = A[i][t] + A[j][t]
            for t in range(k):
                A[t][i] = A[t][i] + A[t][j]
            piv = i
        A[0], A[piv] = A[piv], A[0]
        for r in A:
            r[0], r[piv] = r[piv], r[0]
        d = A[0][0]
        if d.sign() > 0:
            p += 1
        else:
            q += 1
        col = [A[i][0] for i in range(1, k)]
        A = [[A[i][j] - col[i - 1] * A[0][j] / d for j in range(1, k)] for i in range(1, k)]
    return p, q, z


def clear_denominators(v: Sequence[Scalar]) -> Vec:
    """Scale by a positive rational so all coefficients are coprime integers."""
    fr = [q for x in v for q in x._c.values()]
    if not fr:
        return tuple(v)
    lcm = 1
    for q in fr:
        lcm = lcm * q.denominator // math.gcd(lcm, q.denominator)
    g = 0
    for q in fr:
        g = math.gcd(g, int(q * lcm))
    return vscale(Fraction(lcm, g), tuple(v))


def canonical_ray(v: Sequence[Scalar]) -> Vec:
    """Canonical representative of the ray through a nonzero vector.

    The first nonzero coordinate is scaled to +1 or -1, then denominators are
    cleared.  For rational vectors this is the usual primitive integer vector
    with positive leading coordinate.
    """
    lead = next((x for x in v if x), None)
    if lead is None:
        raise ValueError("zero vector has no ray")
    if lead != 1:
        v = vscale(1 / abs(lead), tuple(v))
    return clear_denominators(v)


def to_floats(v: Sequence[Scalar]) -> list[float]:
    return [float(x) for x in v]
