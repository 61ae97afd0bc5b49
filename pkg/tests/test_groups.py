from itertools import product
from math import gcd, prod

from hypothesis import given, strategies as st

from confstab.groups import FiniteAbelianGroup, invariant_factors


def brute_order_counts(orders, m):
    """#{x in Z/o1 x ... : m x = 0} by enumeration."""
    return sum(1 for x in product(*(range(o) for o in orders)) if all(m * a % o == 0 for a, o in zip(x, orders)))


def test_normalization():
    assert invariant_factors([6, 4]) == (2, 12)
    assert invariant_factors([1, 1, 3]) == (3,)
    assert invariant_factors([2, 3]) == (6,)
    assert FiniteAbelianGroup(0, (2, 3)) == FiniteAbelianGroup.cyclic(6)


def test_str():
    assert str(FiniteAbelianGroup()) == "0"
    assert str(FiniteAbelianGroup(1)) == "Z"
    assert str(FiniteAbelianGroup(2, (2, 4))) == "Z^2 + Z/2 + Z/4"


def test_cyclic_zero_is_free():
    assert FiniteAbelianGroup.cyclic(0) == FiniteAbelianGroup(1)


@given(st.lists(st.integers(1, 12), min_size=1, max_size=3))
def test_normal_form_is_an_isomorphism_invariant(orders):
    d = invariant_factors(orders)
    assert all(b % a == 0 for a, b in zip(d, d[1:]))
    assert prod(d) == prod(orders)
    for m in range(1, 13):
        assert brute_order_counts(orders, m) == prod(gcd(m, x) for x in d)


@given(st.integers(0, 3), st.lists(st.integers(1, 100), max_size=4))
def test_dict_round_trip(r, orders):
    g = FiniteAbelianGroup(r, tuple(orders))
    assert FiniteAbelianGroup.from_dict(g.to_dict()) == g
