"""When are H_i(C_k(M)) and H_i(C_j(M)) guaranteed to agree?

Two checks are provided, one for rational homology and one for the p-torsion
subgroup. Both are one-directional: a ``NotCovered`` verdict means the
available theorems say nothing, never that the groups differ.

All range and prime-size comparisons are exact integer inequalities:
``i <= k/2`` is ``2*i <= k`` and ``p >= n/2 + 3/2`` is ``2*p >= n + 3``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .manifold import ManifoldDescriptor
from .plocal import PrimeLike, as_prime, is_unit


class Outcome(str, Enum):
    GUARANTEED = "Guaranteed"
    NOT_COVERED = "NotCovered"
    TRIVIALLY_EQUAL = "TriviallyEqual"


# condition labels
C1 = "C1-parallelizable"
C2 = "C2-odd-dim"
C3 = "C3-even-dim"
C4 = "C4-surface"
RATIONAL_RANGE = "rational-range"
IDENTICAL = "identical-k-j"
CONDITIONS = (C1, C2, C3, C4, RATIONAL_RANGE, IDENTICAL)

# reason codes for NotCovered
RANGE_EXCEEDED = "range-exceeded"
EULER_COMPONENT = "euler-component"
REASONS = (
    RANGE_EXCEEDED,
    EULER_COMPONENT,
    "C1-not-parallelizable",
    "C1-ratio-not-unit",
    "C2-even-dim",
    "C2-prime-too-small",
    "C3-odd-dim",
    "C3-prime-too-small",
    "C3-ratio-not-unit",
    "C4-not-surface",
    "C4-non-orientable",
    "C4-ratio-not-unit",
)


@dataclass(frozen=True)
class StabilityVerdict:
    outcome: Outcome
    conditions: tuple[str, ...] = ()
    reasons: tuple[str, ...] = ()
    # largest homological degree inside the scanning range for min(k, j)
    range: int = 0

    def __post_init__(self):
        object.__setattr__(self, "outcome", Outcome(self.outcome))
        object.__setattr__(self, "conditions", tuple(self.conditions))
        object.__setattr__(self, "reasons", tuple(self.reasons))
        if self.outcome is Outcome.NOT_COVERED:
            if not self.reasons or self.conditions:
                raise ValueError("NotCovered needs reasons and no conditions")
        elif not self.conditions or self.reasons:
            raise ValueError(f"{self.outcome.value} needs conditions and no reasons")

    @property
    def guaranteed(self) -> bool:
        return self.outcome is not Outcome.NOT_COVERED

    def to_dict(self) -> dict:
        return {
            "outcome": self.outcome.value,
            "conditions": list(self.conditions),
            "reasons": list(self.reasons),
            "range": self.range,
        }

    @classmethod
    def from_dict(cls, d: dict) -> StabilityVerdict:
        return cls(Outcome(d["outcome"]), tuple(d["conditions"]), tuple(d["reasons"]), d["range"])


def stable_range(k: int) -> int:
    """Largest degree i with i <= k/2, where scanning is a homology isomorphism."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return k // 2


def _in_range(k: int, j: int, i: int) -> bool:
    return 2 * i <= min(k, j)


def _check_args(k, j, i):
    if min(k, j, i) < 0:
        raise ValueError("k, j and i must be non-negative")


def rational_stability(M: ManifoldDescriptor, k: int, j: int, i: int) -> StabilityVerdict:
    _check_args(k, j, i)
    rng = stable_range(min(k, j))
    if k == j:
        return StabilityVerdict(Outcome.TRIVIALLY_EQUAL, (IDENTICAL,), range=rng)
    reasons = []
    if not _in_range(k, j, i):
        reasons.append(RANGE_EXCEEDED)
    if M.dim % 2 == 0 and M.euler in (2 * k, 2 * j):
        reasons.append(EULER_COMPONENT)
    if reasons:
        return StabilityVerdict(Outcome.NOT_COVERED, reasons=tuple(reasons), range=rng)
    return StabilityVerdict(Outcome.GUARANTEED, (RATIONAL_RANGE,), range=rng)


def torsion_conditions(M: ManifoldDescriptor, k: int, j: int, p: PrimeLike) -> tuple[list[str], list[str]]:
    """Evaluate the four torsion conditions for k != j.

    Returns ``(satisfied, failures)`` where failures carries one reason code
    per unsatisfied condition.
    """
    p = int(as_prime(p))
    n, chi = M.dim, M.euler
    big_prime = 2 * p >= n + 3
    # k != j, so neither ratio is 0/0
    shifted_unit = is_unit((2 * k - chi, 2 * j - chi), p)
    sat, fail = [], []

    if not M.parallelizable:
        fail.append("C1-not-parallelizable")
    elif not is_unit((k, j), p):
        fail.append("C1-ratio-not-unit")
    else:
        sat.append(C1)

    if n % 2 == 0:
        fail.append("C2-even-dim")
    elif not big_prime:
        fail.append("C2-prime-too-small")
    else:
        sat.append(C2)

    if n % 2 == 1:
        fail.append("C3-odd-dim")
    elif not big_prime:
        fail.append("C3-prime-too-small")
    elif not shifted_unit:
        fail.append("C3-ratio-not-unit")
    else:
        sat.append(C3)

    if n != 2:
        fail.append("C4-not-surface")
    elif not M.orientable:
        fail.append("C4-non-orientable")
    elif not shifted_unit:
        fail.append("C4-ratio-not-unit")
    else:
        sat.append(C4)
    return sat, fail


def torsion_stability(M: ManifoldDescriptor, k: int, j: int, i: int, p: PrimeLike) -> StabilityVerdict:
    """Whether the p-torsion of H_i(C_k(M)) and H_i(C_j(M)) must be isomorphic.

    A ``Guaranteed`` verdict lists every satisfied condition, not just the first.
    """
    _check_args(k, j, i)
    as_prime(p)
    rng = stable_range(min(k, j))
    if k == j:
        return StabilityVerdict(Outcome.TRIVIALLY_EQUAL, (IDENTICAL,), range=rng)
    sat, fail = torsion_conditions(M, k, j, p)
    if not _in_range(k, j, i):
        return StabilityVerdict(Outcome.NOT_COVERED, reasons=(RANGE_EXCEEDED,) + tuple(fail if not sat else ()), range=rng)
    if not sat:
        return StabilityVerdict(Outcome.NOT_COVERED, reasons=tuple(fail), range=rng)
    return StabilityVerdict(Outcome.GUARANTEED, tuple(sat), range=rng)
