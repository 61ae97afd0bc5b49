import json

import pytest
from hypothesis import given, strategies as st

from confstab.audit import (
    AuditReport, audit_oracle_vs_fixture, audit_sphere, audit_sphere_torsion, fv_h1, sphere_fixture,
)
from confstab.groups import FiniteAbelianGroup as G
from confstab.plocal import p_part

from oracles import factor_valuation


def test_fv_values():
    assert fv_h1(2) == G.cyclic(2)
    assert fv_h1(3) == G.cyclic(4)
    assert fv_h1(12) == G.cyclic(22)
    with pytest.raises(ValueError):
        fv_h1(1)
    assert sphere_fixture(5).value == G.cyclic(8)


@given(st.integers(2, 500), st.sampled_from([2, 3, 5, 7, 11]))
def test_fv_p_part(k, p):
    e = factor_valuation(2 * k - 2, p)
    assert p_part(fv_h1(k), p) == (G.cyclic(p ** e) if e else G())


def test_sphere_audit_small():
    r = audit_sphere_torsion(3, 20)
    assert r.passed and r.checked_pairs == 19 * 18 // 2
    w = {(x.k, x.j): x for x in r.witnesses}
    # 3-parts of Z/6 and Z/8 differ, of Z/4 and Z/10 agree
    assert (4, 5) in w and (w[4, 5].group_k, w[4, 5].group_j) == ("Z/3", "0")
    assert (3, 6) not in w


def test_witness_three_five_two():
    r = audit_sphere_torsion(2, 10)
    rec = next(x for x in r.witnesses if (x.k, x.j) == (3, 5))
    assert rec.outcome == "NotCovered"
    assert (rec.group_k, rec.group_j) == ("Z/4", "Z/8")
    assert rec.conditions == ()
    assert rec.reasons


def test_audit_merges_primes():
    r = audit_sphere([2, 3], 12)
    assert r.primes == [2, 3] and r.passed
    assert r.checked_pairs == 2 * (11 * 10 // 2)
    assert [x.p for x in r.witnesses] == sorted(x.p for x in r.witnesses)


def test_kmax_too_small():
    with pytest.raises(ValueError):
        audit_sphere_torsion(2, 3)


def test_oracle_audit():
    r = audit_oracle_vs_fixture()
    assert r.passed and len(r.oracle_comparisons) == 5


def test_round_trip():
    r = audit_sphere([2, 5], 15).merge(audit_oracle_vs_fixture())
    d = json.loads(json.dumps(r.to_dict()))
    back = AuditReport.from_dict(d)
    assert back.to_dict() == r.to_dict()
    assert back.passed == r.passed
