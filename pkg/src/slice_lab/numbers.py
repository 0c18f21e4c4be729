"""Exact scalars: rationals and single square-root surds."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_SURD_RE = re.compile(r"^\s*(?P<q>-?\d+(?:/\d+)?)\s*(?:\*\s*sqrt\((?P<r>\d+)\))?\s*$")


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings. Floats are refused."""
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction or a 'p/q' string")
    return Fraction(value)


def squarefree_split(n: int) -> tuple[int, int]:
    """Return (s, f) with n == s*s*f and f squarefree."""
    if n <= 0:
        raise ValueError("radicand must be positive")
    outer, free, rest = 1, 1, n
    p = 2
    # trial division to the cube root leaves a cofactor with at most two primes
    while p * p * p <= rest:
        while rest % (p * p) == 0:
            rest //= p * p
            outer *= p
        if rest % p == 0:
            rest //= p
            free *= p
        p += 1 if p == 2 else 2
    root = math.isqrt(rest)
    if root * root == rest:
        return outer * root, free
    return outer, free * rest


@total_ordering
@dataclass(frozen=True)
class SurdValue:
    """Exact number ``coefficient * sqrt(radicand)`` with a squarefree radicand."""

    coefficient: Fraction
    radicand: int = 1

    def __post_init__(self) -> None:
        coeff = Fraction(self.coefficient)
        rad = int(self.radicand)
        if coeff == 0:
            rad = 1
        else:
            outer, rad = squarefree_split(rad)
            coeff *= outer
        object.__setattr__(self, "coefficient", coeff)
        object.__setattr__(self, "radicand", rad)

    @classmethod
    def sqrt(cls, value: RationalLike) -> "SurdValue":
        """sqrt of a non-negative rational, e.g. sqrt(11/9) -> 1/3*sqrt(11)."""
        q = as_rational(value)
        if q < 0:
            raise ValueError("square root of a negative rational")
        if q == 0:
            return cls(Fraction(0))
        # sqrt(p/q) = sqrt(p*q)/q
        return cls(Fraction(1, q.denominator), q.numerator * q.denominator)

    @classmethod
    def parse(cls, text: str) -> "SurdValue":
        m = _SURD_RE.match(text)
        if not m:
            raise ValueError(f"not a surd literal: {text!r}")
        return cls(Fraction(m.group("q")), int(m.group("r") or 1))

    @property
    def is_rational(self) -> bool:
        return self.radicand == 1

    def square(self) -> Fraction:
        return self.coefficient * self.coefficient * self.radicand

    def __float__(self) -> float:
        if self.radicand == 1:
            return float(self.coefficient)
        # go through the square to keep the float correctly rounded for big parts
        return math.copysign(math.sqrt(float(self.square())), self.coefficient)

    def _sign(self) -> int:
        return (self.coefficient > 0) - (self.coefficient < 0)

    def __neg__(self) -> "SurdValue":
        return SurdValue(-self.coefficient, self.radicand)

    def __abs__(self) -> "SurdValue":
        return SurdValue(abs(self.coefficient), self.radicand)

    def __add__(self, other: object) -> "SurdValue":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.coefficient == 0:
            return self
        if self.coefficient == 0:
            return other
        if other.radicand != self.radicand:
            raise ValueError(
                f"cannot add sqrt({self.radicand}) and sqrt({other.radicand}) terms exactly"
            )
        return SurdValue(self.coefficient + other.coefficient, self.radicand)

    __radd__ = __add__

    def __sub__(self, other: object) -> "SurdValue":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "SurdValue":
        return (-self) + other

    def __mul__(self, other: object) -> "SurdValue":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return SurdValue(self.coefficient * other.coefficient, self.radicand * other.radicand)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "SurdValue":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.coefficient == 0:
            raise ZeroDivisionError("division by zero surd")
        # 1/(q sqrt r) = sqrt(r) / (q r)
        inv = SurdValue(1 / (other.coefficient * other.radicand), other.radicand)
        return self * inv

    def __eq__(self, other: object) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coefficient == other.coefficient and self.radicand == other.radicand

    def __hash__(self) -> int:
        return hash((self.coefficient, self.radicand))

    def __lt__(self, other: object) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._sign(), other._sign()
        if a != b:
            return a < b
        if a == 0:
            return False
        if a > 0:
            return self.square() < other.square()
        return self.square() > other.square()

    def __str__(self) -> str:
        if self.radicand == 1:
            return str(self.coefficient)
        return f"{self.coefficient}*sqrt({self.radicand})"

    def __repr__(self) -> str:
        return f"SurdValue({str(self)!r})"


def _coerce(value: object):
    if isinstance(value, SurdValue):
        return value
    if isinstance(value, (int, Fraction)):
        return SurdValue(Fraction(value))
    return NotImplemented


def format_rational(q: Fraction) -> str:
    """JSON form of a rational: always "p/q" (integers as "p/1")."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def format_point(point: Iterable[Fraction]) -> list[str]:
    return [format_rational(c) for c in point]


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())
