"""JSON encoding of exact scalars and vectors.

Integers are written as JSON numbers and every other scalar as its exact
string (``"3/4"``, ``"1/4+1/4*sqrt5"``).  Decoding also accepts the
coefficient-map form ``{"1": "1/4", "5": "1/4"}``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Sequence

from .exactfield import Scalar, Vec, parse_scalar


def scalar_to_json(x: Scalar) -> int | str:
    if x.is_rational():
        q = x.rational()
        if q.denominator == 1:
            return int(q)
        return str(q)
    return str(x)


def scalar_from_json(data: Any) -> Scalar:
    if isinstance(data, Scalar):
        return data
    if isinstance(data, bool):
        raise ValueError("booleans are not scalars")
    if isinstance(data, int):
        return Scalar(data)
    if isinstance(data, float):
        if not data.is_integer():
            raise ValueError(f"inexact float {data}; write it as a fraction string")
        return Scalar(int(data))
    if isinstance(data, str):
        return parse_scalar(data)
    if isinstance(data, dict):
        return Scalar.from_terms({int(k): Fraction(v) for k, v in data.items()})
    raise ValueError(f"cannot read a scalar from {data!r}")


def vec_to_json(v: Sequence[Scalar]) -> list:
    return [scalar_to_json(x) for x in v]


def vec_from_json(data: Sequence[Any]) -> Vec:
    return tuple(scalar_from_json(x) for x in data)


def floats(v: Sequence[Scalar]) -> list[float]:
    return [float(x) for x in v]
