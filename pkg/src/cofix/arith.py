"""Exact coefficient arithmetic.

Rationals are :class:`fractions.Fraction` (always in lowest terms).  The
local ring Z_(p) is not a separate type: a rational is treated as an element
of Z_(p) exactly when :func:`is_p_local` holds.  Prime-field coefficients are
plain ints in ``[0, p)`` inside polynomials; :class:`PrimeField` is the
boxed element type for callers that want operator arithmetic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

Rational = Fraction
Number = Union[int, Fraction]


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    if not isinstance(p, int) or p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    return all(p % q for q in range(3, math.isqrt(p) + 1, 2))


def check_prime(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")
    return p


def _int_valuation(a: int, p: int) -> int:
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v


def valuation_p(x: Number, p: int) -> float:
    """p-adic valuation of a rational; ``math.inf`` for zero.

    >>> valuation_p(Fraction(3, 2), 3), valuation_p(Fraction(1, 9), 3)
    (1, -2)
    """
    check_prime(p)
    x = Fraction(x)
    if x == 0:
        return math.inf
    return _int_valuation(abs(x.numerator), p) - _int_valuation(x.denominator, p)


def is_p_local(x: Number, p: int) -> bool:
    return valuation_p(x, p) >= 0


def reduce_mod_p(x: Number, p: int) -> int:
    """Image of a p-local rational in F_p, as an int in [0, p)."""
    x = Fraction(x)
    if x.denominator % p == 0:
        raise ValueError(f"{x} is not p-local for p={p}")
    return x.numerator * pow(x.denominator, -1, p) % p


@dataclass(frozen=True)
class PrimeField:
    """An element of F_p."""

    value: int
    p: int

    def __post_init__(self):
        check_prime(self.p)
        object.__setattr__(self, "value", self.value % self.p)

    def _lift(self, other) -> "PrimeField":
        if isinstance(other, PrimeField):
            if other.p != self.p:
                raise ValueError("mixing different prime fields")
            return other
        if isinstance(other, (int, Fraction)):
            return PrimeField(reduce_mod_p(other, self.p), self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return PrimeField(self.value + o.value, self.p)

    __radd__ = __add__

    def __neg__(self):
        return PrimeField(-self.value, self.p)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return PrimeField(self.value - o.value, self.p)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return PrimeField(self.value * o.value, self.p)

    __rmul__ = __mul__

    def inverse(self) -> "PrimeField":
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse in F_p")
        return PrimeField(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return PrimeField(pow(self.value, k, self.p), self.p)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


# -- coefficient ring tags --------------------------------------------------

@dataclass(frozen=True)
class RationalField:
    """Tag for rational coefficients (Fractions)."""

    characteristic = 0

    def __call__(self, x) -> Fraction:
        if isinstance(x, PrimeField):
            raise TypeError("cannot lift an F_p element to Q")
        return Fraction(x)

    def inv(self, a: Fraction) -> Fraction:
        return 1 / a

    def normalize(self, a):
        return a

    def __str__(self):
        return "QQ"


@dataclass(frozen=True)
class GF:
    """Tag for F_p coefficients, stored as ints in [0, p)."""

    p: int

    def __post_init__(self):
        check_prime(self.p)

    @property
    def characteristic(self) -> int:
        return self.p

    def __call__(self, x) -> int:
        if isinstance(x, PrimeField):
            if x.p != self.p:
                raise ValueError("mixing different prime fields")
            return x.value
        if isinstance(x, int):
            return x % self.p
        return reduce_mod_p(x, self.p)

    def inv(self, a: int) -> int:
        return pow(a, -1, self.p)

    def normalize(self, a: int) -> int:
        return a % self.p

    def symmetric(self, a: int) -> int:
        """Representative in (-p/2, p/2], used for display."""
        return a if a <= self.p // 2 else a - self.p

    def __str__(self):
        return f"GF({self.p})"


QQ = RationalField()
Ring = Union[RationalField, GF]


def ring_from_tag(tag) -> Ring:
    """``0``/``None``/``"QQ"`` give QQ, a prime gives GF(p)."""
    if tag in (0, None, "QQ") or isinstance(tag, RationalField):
        return QQ
    if isinstance(tag, GF):
        return tag
    return GF(int(tag))
