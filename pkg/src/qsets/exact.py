"""Exact rational endpoints, with +-infinity markers for ray endpoints."""

from __future__ import annotations

from fractions import Fraction
from math import inf
from typing import Union

from .errors import InputError

NEG_INF = -inf
POS_INF = inf

#: A finite exact value, or one of the two infinity markers.
Endpoint = Union[Fraction, float]


def as_fraction(value) -> Fraction:
    """Coerce an int, string ("3", "3/2") or Fraction to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational: {value!r}") from exc
    raise InputError(f"not a rational: {value!r}")


def parse_endpoint(value) -> Endpoint:
    """Like :func:`as_fraction` but accepting "inf" / "-inf" markers."""
    if value == "inf":
        return POS_INF
    if value == "-inf":
        return NEG_INF
    if isinstance(value, float):
        if value == POS_INF or value == NEG_INF:
            return value
        raise InputError(f"float endpoint {value!r} is not exact; use p/q strings")
    return as_fraction(value)


def format_endpoint(value: Endpoint) -> str:
    if value == POS_INF:
        return "inf"
    if value == NEG_INF:
        return "-inf"
    return str(value)


def is_finite(value: Endpoint) -> bool:
    return not isinstance(value, float)
