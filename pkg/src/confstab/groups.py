"""Finitely generated abelian groups in invariant-factor normal form."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, prod
from typing import Iterable


def invariant_factors(orders: Iterable[int]) -> tuple[int, ...]:
    """Normalize cyclic orders into a divisibility chain with no factor 1.

    Uses Z/a + Z/b = Z/gcd(a,b) + Z/lcm(a,b), so no factoring is needed.
    """
    a = sorted(int(m) for m in orders)
    if any(m < 1 for m in a):
        raise ValueError(f"cyclic orders must be positive, got {a}")
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            g = gcd(a[i], a[j])
            a[i], a[j] = g, a[i] * a[j] // g
    return tuple(m for m in a if m != 1)


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """``Z^free_rank`` plus cyclic torsion ``Z/d1 + Z/d2 + ...`` with d1 | d2 | ...

    Any positive cyclic orders may be passed; they are normalized on
    construction, so equality is isomorphism.
    """

    free_rank: int = 0
    invariant_factors: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        object.__setattr__(self, "invariant_factors", invariant_factors(self.invariant_factors))

    @classmethod
    def cyclic(cls, n: int) -> FiniteAbelianGroup:
        """Z/n, with n = 0 meaning Z."""
        return cls(1) if n == 0 else cls(0, (abs(n),))

    @classmethod
    def trivial(cls) -> FiniteAbelianGroup:
        return cls()

    @property
    def torsion_order(self) -> int:
        return prod(self.invariant_factors)

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def __add__(self, other: FiniteAbelianGroup) -> FiniteAbelianGroup:
        return FiniteAbelianGroup(
            self.free_rank + other.free_rank,
            self.invariant_factors + other.invariant_factors,
        )

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.invariant_factors]
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "invariant_factors": list(self.invariant_factors)}

    @classmethod
    def from_dict(cls, d: dict) -> FiniteAbelianGroup:
        return cls(d["free_rank"], tuple(d["invariant_factors"]))
