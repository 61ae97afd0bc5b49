"""Fixtures and audits: confront the verdict engine with known homology.

The ground truth for spheres is H_1(C_k(S^2)) = Z/(2k-2) (Fadell and Van
Buskirk, via the braid group presentation). The torsion audit checks every
``Guaranteed`` verdict in degree 1 against it; the oracle audit checks the
deleted-product model at k = 2 against the same formula.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .groups import FiniteAbelianGroup
from .manifold import catalog
from .oracle import builtin, config2_homology
from .plocal import as_prime, p_part
from .stability import Outcome, torsion_stability

FV_SOURCE = "Fadell-Van Buskirk, H_1(Br_k(S^2)) = H_1(C_k(S^2)) = Z/(2k-2)"


@dataclass(frozen=True)
class Fixture:
    manifold: str
    k: int
    i: int
    value: FiniteAbelianGroup
    source: str


def fv_h1(k: int) -> FiniteAbelianGroup:
    """H_1(C_k(S^2)) = Z/(2k-2)."""
    if k < 2:
        raise ValueError("H_1(C_k(S^2)) fixture needs k >= 2")
    return FiniteAbelianGroup.cyclic(2 * k - 2)


def sphere_fixture(k: int) -> Fixture:
    return Fixture("sphere(2)", k, 1, fv_h1(k), FV_SOURCE)


@dataclass(frozen=True)
class PairRecord:
    p: int
    k: int
    j: int
    outcome: str
    conditions: tuple[str, ...]
    reasons: tuple[str, ...]
    group_k: str
    group_j: str

    @classmethod
    def from_dict(cls, d: dict) -> PairRecord:
        return cls(
            d["p"], d["k"], d["j"], d["outcome"],
            tuple(d["conditions"]), tuple(d["reasons"]),
            d["group_k"], d["group_j"],
        )


@dataclass(frozen=True)
class OracleComparison:
    complex: str
    ordered: bool
    expected: tuple[str, ...]
    computed: tuple[str, ...]
    passed: bool
    note: str = ""

    @classmethod
    def from_dict(cls, d: dict) -> OracleComparison:
        return cls(d["complex"], d["ordered"], tuple(d["expected"]), tuple(d["computed"]), d["passed"], d["note"])


@dataclass
class AuditReport:
    primes: list[int] = field(default_factory=list)
    k_max: int = 0
    checked_pairs: int = 0
    violations: list[PairRecord] = field(default_factory=list)
    # NotCovered pairs whose p-parts really differ
    witnesses: list[PairRecord] = field(default_factory=list)
    oracle_comparisons: list[OracleComparison] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations and all(c.passed for c in self.oracle_comparisons)

    def merge(self, other: AuditReport) -> AuditReport:
        out = AuditReport(
            sorted(set(self.primes) | set(other.primes)),
            max(self.k_max, other.k_max),
            self.checked_pairs + other.checked_pairs,
            self.violations + other.violations,
            self.witnesses + other.witnesses,
            self.oracle_comparisons + other.oracle_comparisons,
        )
        out.sort()
        return out

    def sort(self):
        key = lambda r: (r.p, r.k, r.j)  # noqa: E731
        self.violations.sort(key=key)
        self.witnesses.sort(key=key)

    def to_dict(self) -> dict:
        return {
            "primes": list(self.primes),
            "k_max": self.k_max,
            "checked_pairs": self.checked_pairs,
            "passed": self.passed,
            "violations": [_record_dict(r) for r in self.violations],
            "witnesses": [_record_dict(r) for r in self.witnesses],
            "oracle_comparisons": [_record_dict(c) for c in self.oracle_comparisons],
        }

    @classmethod
    def from_dict(cls, d: dict) -> AuditReport:
        return cls(
            list(d["primes"]),
            d["k_max"],
            d["checked_pairs"],
            [PairRecord.from_dict(r) for r in d["violations"]],
            [PairRecord.from_dict(r) for r in d["witnesses"]],
            [OracleComparison.from_dict(c) for c in d["oracle_comparisons"]],
        )


def _record_dict(r) -> dict:
    d = asdict(r)
    return {k: list(v) if isinstance(v, tuple) else v for k, v in d.items()}


def _record(p, k, j, v, parts) -> PairRecord:
    return PairRecord(p, k, j, v.outcome.value, v.conditions, v.reasons, str(parts[k]), str(parts[j]))


def audit_sphere_torsion(p, k_max: int) -> AuditReport:
    """Check torsion verdicts for S^2 in degree 1 against Z/(2k-2) p-parts.

    Scans all 2 <= k < j <= k_max (so i = 1 is inside the range).
    """
    if k_max < 4:
        raise ValueError("k_max must be at least 4")
    p = int(as_prime(p))
    S2 = catalog("sphere(2)")
    parts = {k: p_part(fv_h1(k), p) for k in range(2, k_max + 1)}
    report = AuditReport([p], k_max)
    for k in range(2, k_max + 1):
        for j in range(k + 1, k_max + 1):
            v = torsion_stability(S2, k, j, 1, p)
            report.checked_pairs += 1
            same = parts[k] == parts[j]
            if v.outcome is Outcome.GUARANTEED and not same:
                report.violations.append(_record(p, k, j, v, parts))
            elif v.outcome is Outcome.NOT_COVERED and not same:
                report.witnesses.append(_record(p, k, j, v, parts))
    report.sort()
    return report


def audit_sphere(primes, k_max: int) -> AuditReport:
    report = AuditReport([], k_max)
    for p in primes:
        report = report.merge(audit_sphere_torsion(p, k_max))
    return report


def _compare(name: str, ordered: bool, expected: list[FiniteAbelianGroup], note: str = "") -> OracleComparison:
    computed = config2_homology(builtin(name), ordered=ordered).groups
    padded = expected + [FiniteAbelianGroup()] * (len(computed) - len(expected))
    return OracleComparison(
        name,
        ordered,
        tuple(map(str, expected)),
        tuple(map(str, computed)),
        computed == padded,
        note,
    )


def audit_oracle_vs_fixture() -> AuditReport:
    """Deleted-product homology of S^2 triangulations against the k = 2 fixture."""
    Z, zero = FiniteAbelianGroup(1), FiniteAbelianGroup()
    unordered = [Z, fv_h1(2), zero]
    report = AuditReport()
    for name in ("tetrahedron-boundary", "octahedron-boundary"):
        report.oracle_comparisons.append(_compare(name, False, unordered, FV_SOURCE + " at k=2"))
        report.oracle_comparisons.append(_compare(name, True, [Z, zero, Z], "F_2(S^2) retracts onto S^2"))
    report.oracle_comparisons.append(
        _compare("triangle-boundary", False, [Z, Z], "oracle self-test; dimension 1 is outside n >= 2")
    )
    return report
