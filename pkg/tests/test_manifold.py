import json
from itertools import product

import pytest
from hypothesis import given, strategies as st

from confstab.errors import DomainError, InvalidDescriptor
from confstab.manifold import CATALOG_SAMPLES, ManifoldDescriptor, catalog, load_descriptor, make_descriptor


def test_valid_examples():
    s2 = make_descriptor("sphere(2)", 2, True, False, (1, 0, 1))
    assert s2.euler == 2
    t2 = make_descriptor("torus", 2, True, True, (1, 2, 1))
    assert t2.euler == 0


def test_odd_dim_nonzero_euler_rejected():
    with pytest.raises(InvalidDescriptor) as e:
        make_descriptor("bad", 3, False, False, (1, 0, 0, 0))
    names = [n for n, _ in e.value.violations]
    assert "odd-dim-euler" in names
    assert "odd-dimensional closed manifolds have χ=0" in str(e.value)


@pytest.mark.parametrize(
    "fields, violation",
    [
        (dict(dim=1, orientable=True, parallelizable=True, betti=(1, 1)), "dim"),
        (dict(dim=2, orientable=True, parallelizable=False, betti=(2, 0, 2)), "connected"),
        (dict(dim=2, orientable=False, parallelizable=True, betti=(1, 1, 0)), "parallelizable-orientable"),
        (dict(dim=2, orientable=True, parallelizable=False, betti=(1, 0, 0)), "top-betti"),
        (dict(dim=2, orientable=False, parallelizable=False, betti=(1, 0, 1)), "top-betti"),
        (dict(dim=2, orientable=True, parallelizable=False, betti=(1, 0)), "betti-length"),
        (dict(dim=4, orientable=True, parallelizable=False, betti=(1, 1, 0, 0, 1)), "poincare-duality"),
    ],
)
def test_each_invariant_is_named(fields, violation):
    with pytest.raises(InvalidDescriptor) as e:
        make_descriptor("x", **fields)
    assert violation in [n for n, _ in e.value.violations]


def test_all_violations_are_reported_together():
    with pytest.raises(InvalidDescriptor) as e:
        make_descriptor("x", 3, False, True, (2, 0, 0, 1))
    names = {n for n, _ in e.value.violations}
    assert {"connected", "parallelizable-orientable", "top-betti"} <= names


def test_catalog_examples():
    g2 = catalog("surface(2)")
    assert g2.euler == -2 and g2.betti == (1, 4, 1)
    s3 = catalog("sphere(3)")
    assert s3.euler == 0 and s3.parallelizable
    s2s2 = catalog("product(sphere(2), sphere(2))")
    # Künneth: (1,0,1) * (1,0,1) = (1,0,2,0,1)
    assert s2s2.betti == (1, 0, 2, 0, 1) and s2s2.euler == 4


def test_catalog_aliases():
    assert catalog("sphere2") == catalog("sphere(2)")
    assert catalog("torus") == catalog("torus(2)")
    assert catalog("klein").euler == 0 and not catalog("klein").orientable
    assert catalog("rp(2)").euler == 1


def test_catalog_parallelizability_is_conservative():
    assert not catalog("sphere(2)").parallelizable
    assert not catalog("sphere(4)").parallelizable
    assert catalog("sphere(7)").parallelizable
    assert catalog("torus(4)").parallelizable
    assert catalog("product(sphere(1),sphere(2))").parallelizable
    assert not catalog("surface(2)").parallelizable


def test_unknown_catalog_entry():
    for bad in ("blob", "sphere(x)", "product(sphere(2))", "sphere(1)"):
        with pytest.raises((DomainError, InvalidDescriptor)):
            catalog(bad)


@pytest.mark.parametrize("name", CATALOG_SAMPLES)
def test_catalog_entries_validate(name):
    m = catalog(name)
    assert ManifoldDescriptor.from_dict(m.to_dict()) == m


_factors = ["sphere(2)", "sphere(3)", "sphere(4)", "torus(2)", "surface(3)", "nonorientable(3)",
            "real-projective(2)", "real-projective(3)", "torus(3)"]


@pytest.mark.parametrize("a, b", list(product(_factors, repeat=2)))
def test_euler_is_multiplicative(a, b):
    assert catalog(f"product({a},{b})").euler == catalog(a).euler * catalog(b).euler


@given(st.integers(0, 30))
def test_surfaces(g):
    assert catalog(f"surface({g})").euler == 2 - 2 * g


def test_json_never_trusts_euler(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"name": "s2", "dim": 2, "orientable": True,
                                "parallelizable": False, "betti": [1, 0, 1], "euler": 99}))
    assert load_descriptor(path).euler == 2
