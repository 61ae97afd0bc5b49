"""Degree bookkeeping for section spaces of the localized tangent sphere bundle.

Components of the section space are labelled by degrees: integers for honest
sections, rationals (or p-local integers) after localization. For even n and
orientable M, a trivialization identifies H_n of the total space with
H_n(M x S^n_(0)) = Z[B] + Q[F], where [B] is the base class and [F] the fiber
class, paired by B.B = F.F = 0 and B.F = 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DomainError
from .manifold import ManifoldDescriptor
from .plocal import Locale, in_local_integers, is_unit

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class HnClass:
    """beta*[B] + phi*[F]."""

    beta: int
    phi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "phi", Fraction(self.phi))

    def __add__(self, other: HnClass) -> HnClass:
        return HnClass(self.beta + other.beta, self.phi + other.phi)

    def scale(self, c: int) -> HnClass:
        return HnClass(c * self.beta, c * self.phi)


B = HnClass(1, Fraction(0))
F = HnClass(0, Fraction(1))


@dataclass(frozen=True)
class ComponentSet:
    """The set indexing path components of a section space."""

    locale: Locale

    @property
    def index_set(self) -> str:
        return {"integral": "Z", "rational": "Q", "p-local": f"Z_({self.locale.p})"}[self.locale.kind]

    def __contains__(self, degree) -> bool:
        q = Fraction(degree)
        if self.locale.kind == "integral":
            return q.denominator == 1
        if self.locale.kind == "rational":
            return True
        return in_local_integers(q, self.locale.p)


def intersection(x: HnClass, y: HnClass) -> Fraction:
    return x.beta * y.phi + x.phi * y.beta


def zero_section_coefficient(chi: int) -> Fraction:
    """[F]-coefficient of the zero section: the a with (B + aF).(B + aF) = chi."""
    return Fraction(chi, 2)


def zero_section_class(chi: int) -> HnClass:
    return HnClass(1, zero_section_coefficient(chi))


def section_to_map_degree(k: Rational, chi: int) -> Fraction:
    """Degree of the map M -> S^n_(0) corresponding to a degree-k section.

    Only meaningful for even n and orientable M; the caller enforces that.
    """
    return Fraction(k) - Fraction(chi, 2)


def bundle_shift(k: Rational, d: Rational, chi: int) -> Fraction:
    """Component reached from degree k by a bundle map of fiber degree d."""
    d = Fraction(d)
    if d == 0:
        raise DomainError("fiber degree must be nonzero")
    return d * Fraction(k) + (1 - d) * Fraction(chi, 2)


def map_components_equivalent(k: Rational, j: Rational) -> bool:
    """Whether Map_k(M, S^n_(0)) and Map_j(M, S^n_(0)) are known homotopy equivalent."""
    return k == j or (k != 0 and j != 0)


def section_components_equivalent(M: ManifoldDescriptor, k: int, j: int, locale: Locale) -> bool:
    n, chi = M.dim, M.euler
    if k == j:
        return True
    if locale.kind == "rational":
        return n % 2 == 1 or (2 * k != chi and 2 * j != chi)
    if locale.kind != "p-local":
        raise DomainError("component equivalence is decided only rationally or p-locally")
    big_prime = 2 * locale.p >= n + 3
    if n % 2 == 1:
        return big_prime
    if not (big_prime or (n == 2 and M.orientable)):
        return False
    return is_unit((2 * k - chi, 2 * j - chi), locale.p)
