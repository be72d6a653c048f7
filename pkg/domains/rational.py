"""Exact rational literals, infinity sentinels and small vector helpers."""
import math
import re
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

from errors import SpecError

# Infinite interval endpoints are these two sentinels, never large rationals
NEG_INF = -math.inf
POS_INF = math.inf

Endpoint = Union[Fraction, float]
Vector = Tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(value) -> Fraction:
    """Parse an integer or a "p/q" string exactly. Decimal literals are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise SpecError(f"Boolean {value!r} is not a rational literal", literal=repr(value))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL_RE.match(value)
        if match:
            numerator, denominator = match.group(1), match.group(2)
            if denominator is not None and int(denominator) == 0:
                raise SpecError(f"Zero denominator in rational literal '{value}'", literal=value)
            return Fraction(int(numerator), int(denominator) if denominator else 1)
    raise SpecError(
        f"'{value}' is not an exact rational literal; write integers or 'p/q' (e.g. '1/10' instead of '0.1')",
        literal=str(value),
    )


def parse_endpoint(value) -> Endpoint:
    """Parse an interval endpoint: a rational literal or '-inf' / 'inf'."""
    if isinstance(value, float) and math.isinf(value):
        return value
    if isinstance(value, str):
        token = value.strip().lower()
        if token in ("inf", "+inf"):
            return POS_INF
        if token == "-inf":
            return NEG_INF
    return parse_rational(value)


def is_infinite(value: Endpoint) -> bool:
    return isinstance(value, float) and math.isinf(value)


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_endpoint(value: Endpoint) -> str:
    if is_infinite(value):
        return "inf" if value > 0 else "-inf"
    return format_rational(value)


def scale_endpoint(coefficient: Fraction, value: Endpoint) -> Endpoint:
    # Zero coefficients stand for empty sums, so 0 * inf is 0 here
    if coefficient == 0:
        return Fraction(0)
    if is_infinite(value):
        return value if coefficient > 0 else -value
    return coefficient * value


def add_endpoints(left: Endpoint, right: Endpoint) -> Endpoint:
    if is_infinite(left) and is_infinite(right) and left != right:
        raise ValueError("Indeterminate sum of opposite infinities")
    if is_infinite(left):
        return left
    if is_infinite(right):
        return right
    return left + right


def as_vector(values: Iterable) -> Vector:
    return tuple(parse_rational(v) for v in values)


def vec_add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: Fraction, u: Sequence[Fraction]) -> Vector:
    return tuple(c * a for a in u)


def vec_sum(vectors: Iterable[Sequence[Fraction]], dim: int) -> Vector:
    total = tuple(Fraction(0) for _ in range(dim))
    for v in vectors:
        total = vec_add(total, v)
    return total


def unit_vector(dim: int, axis: int, scale: Fraction = Fraction(1)) -> Vector:
    return tuple(scale if j == axis else Fraction(0) for j in range(dim))


def parse_point(text) -> Vector:
    """Parse a point key "p1,p2,..." (or a list of literals) into a vector."""
    if isinstance(text, (list, tuple)):
        return as_vector(text)
    if isinstance(text, (int, Fraction)) and not isinstance(text, bool):
        return (parse_rational(text),)
    if not isinstance(text, str) or not text.strip():
        raise SpecError(f"'{text}' is not a point literal", literal=str(text))
    return tuple(parse_rational(part) for part in text.split(","))


def format_point(point: Sequence[Fraction]) -> str:
    return ",".join(format_rational(c) for c in point)


def format_vector(vector: Sequence[Fraction]) -> list:
    return [format_rational(c) for c in vector]
