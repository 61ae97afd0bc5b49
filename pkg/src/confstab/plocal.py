"""p-adic valuations, units of the p-local integers, and p-parts of groups.

Everything here is exact integer arithmetic.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from sympy import isprime

from .errors import DomainError
from .groups import FiniteAbelianGroup


@dataclass(frozen=True, order=True)
class Prime:
    value: int

    def __post_init__(self):
        if isinstance(self.value, bool) or not isinstance(self.value, int):
            raise TypeError(f"prime must be an int, got {self.value!r}")
        if self.value < 2 or not isprime(self.value):
            raise DomainError(f"{self.value} is not prime")

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __str__(self):
        return str(self.value)


PrimeLike = Union[Prime, int]


@lru_cache(maxsize=1024)
def _cached_prime(value: int) -> Prime:
    return Prime(value)


def as_prime(p: PrimeLike) -> Prime:
    return p if isinstance(p, Prime) else _cached_prime(int(p))


@dataclass(frozen=True)
class Ratio:
    """An unreduced fraction of integers with nonzero denominator."""

    numerator: int
    denominator: int

    def __post_init__(self):
        if self.denominator == 0:
            raise DomainError("ratio with zero denominator")

    def reduced(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __str__(self):
        return f"{self.numerator}/{self.denominator}"


def vp(a: int, p: PrimeLike) -> int:
    """Largest ``e`` with ``p**e`` dividing ``a``."""
    if a == 0:
        raise DomainError("valuation of zero undefined")
    p = int(as_prime(p))
    a = abs(a)
    e = 0
    while a % p == 0:
        a //= p
        e += 1
    return e


def is_unit(r: Union[Ratio, tuple[int, int]], p: PrimeLike) -> bool:
    """Whether ``r`` is a unit of the p-local integers.

    ``r`` may also be a raw ``(numerator, denominator)`` pair, in which case a
    zero denominator is allowed: ``n/0`` with ``n != 0`` is not in Z_(p), so the
    answer is False. ``0/0`` is indeterminate and raises.
    """
    if isinstance(r, Ratio):
        num, den = r.numerator, r.denominator
    else:
        num, den = r
    if num == 0 and den == 0:
        raise DomainError("indeterminate ratio")
    if num == 0 or den == 0:
        return False
    return vp(num, p) == vp(den, p)


def p_part(g: FiniteAbelianGroup, p: PrimeLike) -> FiniteAbelianGroup:
    """Subgroup of elements of p-power order."""
    p = int(as_prime(p))
    return FiniteAbelianGroup(0, [p ** vp(m, p) for m in g.invariant_factors])


def in_local_integers(q: Fraction, p: PrimeLike) -> bool:
    """Whether the rational ``q`` has denominator prime to ``p``."""
    return Fraction(q).denominator % int(as_prime(p)) != 0


@dataclass(frozen=True)
class Locale:
    """Where a sphere is localized: integrally, rationally, or at a prime."""

    kind: str
    p: int | None = None

    KINDS = ("integral", "rational", "p-local")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise DomainError(f"unknown locale {self.kind!r}")
        if self.kind == "p-local":
            if self.p is None:
                raise DomainError("p-local locale needs a prime")
            as_prime(self.p)
        elif self.p is not None:
            raise DomainError(f"{self.kind} locale takes no prime")

    @classmethod
    def rational(cls) -> Locale:
        return cls("rational")

    @classmethod
    def integral(cls) -> Locale:
        return cls("integral")

    @classmethod
    def local(cls, p: PrimeLike) -> Locale:
        return cls("p-local", int(p))

    @classmethod
    def parse(cls, text: str) -> Locale:
        """Accepts ``rational``/``Q``, ``integral``/``Z``, ``p-local(5)``, ``Z_(5)`` or ``5``."""
        t = text.strip()
        if t.lower() in ("rational", "q"):
            return cls.rational()
        if t.lower() in ("integral", "z"):
            return cls.integral()
        m = re.fullmatch(r"(?:p-local\((\d+)\)|Z_\((\d+)\)|(\d+))", t)
        if not m:
            raise DomainError(f"cannot parse locale {text!r}")
        return cls.local(int(next(g for g in m.groups() if g)))

    def __str__(self):
        return f"p-local({self.p})" if self.kind == "p-local" else self.kind
