"""Connectivity and obstruction bookkeeping for localized spheres.

These are lookups of known facts, not homotopy computations. Anything outside
the tabulated regime raises rather than guessing.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from .errors import DomainError, NotDetermined, OutsideSerreRange
from .manifold import ManifoldDescriptor
from .plocal import Locale, PrimeLike, as_prime, is_unit, vp


@total_ordering
class _Contractible:
    """Connectivity of a contractible space: above every natural number."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("contractible")

    def __repr__(self):
        return "CONTRACTIBLE"

    def __str__(self):
        return "contractible"


CONTRACTIBLE = _Contractible()


def connectivity_to_json(c):
    return str(c) if c is CONTRACTIBLE else c


@dataclass(frozen=True)
class LocalGroup:
    """One of 0, Z_(p), Q, or Z/p^e with e >= 1."""

    kind: str
    p: int | None = None
    exponent: int = 0

    def __post_init__(self):
        if self.kind not in ("zero", "Z-local", "Q", "cyclic"):
            raise DomainError(f"unknown group kind {self.kind!r}")
        if self.kind == "cyclic" and self.exponent < 1:
            raise DomainError("Z/1 is not in normal form; use LocalGroup.cyclic")

    @classmethod
    def cyclic(cls, p: int, e: int) -> LocalGroup:
        return cls("zero") if e == 0 else cls("cyclic", p, e)

    @property
    def is_zero(self) -> bool:
        return self.kind == "zero"

    def __str__(self):
        return {
            "zero": "0",
            "Z-local": f"Z_({self.p})",
            "Q": "Q",
            "cyclic": f"Z/{self.p}^{self.exponent}",
        }[self.kind]


ZERO = LocalGroup("zero")


@dataclass(frozen=True)
class SpaceDescriptor:
    kind: str
    n: int
    locale: Locale
    connectivity: object
    degree: Fraction | None = None
    factors: tuple[SpaceDescriptor, ...] = ()

    def __str__(self):
        loc = "(0)" if self.locale.kind == "rational" else f"({self.locale.p})"
        if self.kind == "product":
            return " x ".join(str(f) for f in self.factors)
        if self.kind == "localized-sphere":
            return f"S^{self.n}_{loc}"
        if self.kind == "point":
            return "*"
        return f"{self.kind}(S^{self.n}_{loc})"

    def to_dict(self) -> dict:
        d = {
            "kind": self.kind,
            "n": self.n,
            "locale": str(self.locale),
            "connectivity": connectivity_to_json(self.connectivity),
            "type": str(self),
        }
        if self.degree is not None:
            d["degree"] = str(self.degree)
        if self.factors:
            d["factors"] = [f.to_dict() for f in self.factors]
        return d


def localized_sphere(n: int, locale: Locale) -> SpaceDescriptor:
    return SpaceDescriptor("localized-sphere", n, locale, n - 1)


def _check_dim(n: int):
    if n < 2:
        raise DomainError("sphere dimension must be at least 2")


def mapping_space_type(n: int, d) -> SpaceDescriptor:
    """Rational homotopy type of the degree-d component of Map(S^n_(0), S^n_(0))."""
    _check_dim(n)
    d = Fraction(d)
    Q = Locale.rational()
    if n % 2 == 1:
        return localized_sphere(n, Q)
    if d == 0:
        return SpaceDescriptor(
            "product", n, Q, n - 2,
            factors=(localized_sphere(n, Q), localized_sphere(n - 1, Q)),
        )
    return localized_sphere(2 * n - 1, Q)


def pi_sphere_local(n: int, i: int, p: PrimeLike) -> LocalGroup:
    """π_i(S^n) localized at p, through the stem where p-torsion cannot yet appear.

    The first p-torsion sits in stem 2p - 3, so for 2p >= n + 3 every stem
    i - n <= n - 1 is p-torsion free. The rational class in π_{2n-1} for even n
    is not reported here; callers get it from ``mapping_space_type``.
    """
    _check_dim(n)
    p = int(as_prime(p))
    if i < 0 or i > 2 * n - 1 or 2 * p < n + 3:
        raise OutsideSerreRange(f"outside Serre range: n={n}, i={i}, p={p}")
    if i < n:
        return ZERO
    if i == n:
        return LocalGroup("Z-local", p)
    return ZERO


LOOPS_DEG1 = "loops-deg1"
SELFMAPS = "selfmaps"


def fiber_connectivity(kind: str, n: int, locale: Locale, degree=1):
    """Connectivity of a fiber used in the obstruction arguments.

    ``loops-deg1`` is the degree-one component of Ω^n S^n; ``selfmaps`` is the
    degree-``degree`` component of Map(S^n, S^n), both localized at ``locale``.
    """
    _check_dim(n)
    degree = Fraction(degree)
    odd = n % 2 == 1
    if locale.kind == "rational":
        if kind == LOOPS_DEG1 and odd:
            return CONTRACTIBLE
        if kind == SELFMAPS and not odd and degree != 0:
            return 2 * n - 2
    elif locale.kind == "p-local" and 2 * locale.p >= n + 3:
        if kind == LOOPS_DEG1 and odd:
            return n - 1
        # Map_d ≃ Map_1 when d is a p-local unit
        if (kind == SELFMAPS and not odd and degree != 0
                and is_unit((degree.numerator, degree.denominator), locale.p)):
            return n - 1
    raise NotDetermined(f"connectivity not determined for {kind}, n={n}, {locale}, degree {degree}")


def obstructions_vanish(M: ManifoldDescriptor, fiber_conn) -> bool:
    """Whether every obstruction group H^i(M; π_{i-1}(fiber)), i <= dim M, is zero
    by connectivity alone."""
    return fiber_conn >= M.dim - 1


# δ(ι) = k·G modulo torsion with k = ±1 or ±2 (Hopf invariant of [ι,ι] is ±2)
WHITEHEAD_CANDIDATES = (1, -1, 2, -2)


def connecting_map_cokernel(p: PrimeLike) -> LocalGroup:
    """Cokernel of δ: π_n(S^n_(p)) -> π_{n-1}(Ω^n_1 S^n_(p)), i.e. of k·: Z_(p) -> Z_(p)."""
    p = int(as_prime(p))
    cokernels = {LocalGroup.cyclic(p, vp(k, p)) for k in WHITEHEAD_CANDIDATES}
    if cokernels != {ZERO}:
        raise NotDetermined(f"cokernel at p={p} depends on the undetermined sign/multiple of [ι,ι]")
    return ZERO
