import json

import pytest

from confstab.audit import AuditReport
from confstab.cli import main
from confstab.manifold import catalog
from confstab.oracle import builtin
from confstab.stability import StabilityVerdict, torsion_stability


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_range(capsys):
    assert run(capsys, "range", "5") == (0, "2", "")
    code, out, _ = run(capsys, "range", "5", "--json")
    assert json.loads(out) == {"k": 5, "range": 2}


def test_torsion_sphere(capsys):
    code, out, _ = run(capsys, "torsion", "sphere2", "4", "6", "1", "2", "--json")
    assert code == 0
    assert out == '{"outcome":"Guaranteed","conditions":["C4-surface"],"reasons":[],"range":2}'
    v = StabilityVerdict.from_dict(json.loads(out))
    assert v == torsion_stability(catalog("sphere(2)"), 4, 6, 1, 2)


def test_rational(capsys):
    code, out, _ = run(capsys, "rational", "torus", "6", "9", "3", "--json")
    assert code == 0 and json.loads(out)["outcome"] == "Guaranteed"
    # 2k = chi on an even-dimensional manifold
    code, out, _ = run(capsys, "rational", "sphere2", "1", "3", "0")
    assert code == 0 and out.startswith("NotCovered")


def test_sections(capsys):
    assert run(capsys, "sections", "intersection", "1", "0", "0", "1")[1] == "1"
    assert run(capsys, "sections", "zero-section", "2")[1] == "1"
    assert run(capsys, "sections", "section-to-map", "5", "2")[1] == "4"
    assert run(capsys, "sections", "bundle-shift", "3", "2", "2")[1] == "5"
    assert run(capsys, "sections", "map-equivalent", "2", "-3")[1] == "true"
    code, out, _ = run(capsys, "sections", "section-equivalent", "sphere2", "3", "5", "rational", "--json")
    assert code == 0 and json.loads(out)["op"] == "section-equivalent"
    assert run(capsys, "sections", "bundle-shift", "3", "0", "2")[0] == 2


def test_localization(capsys):
    code, out, _ = run(capsys, "localization", "mapping-space", "3", "1", "--json")
    assert code == 0 and json.loads(out)["connectivity"] == 2
    assert run(capsys, "localization", "pi-sphere", "3", "3", "5")[1] == "Z_(5)"
    assert run(capsys, "localization", "pi-sphere", "3", "5", "5")[1] == "0"
    assert run(capsys, "localization", "pi-sphere", "9", "3", "3")[0] == 2
    assert run(capsys, "localization", "fiber-connectivity", "loops-deg1", "3", "rational")[1] == "contractible"
    assert run(capsys, "localization", "obstructions", "sphere2", "1")[1] == "true"
    assert run(capsys, "localization", "connecting-map", "5")[1] == "0"
    assert run(capsys, "localization", "connecting-map", "2")[0] == 2


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "tetrahedron-boundary")
    assert code == 0 and "H_1 = Z/2" in out
    code, out, _ = run(capsys, "oracle", "tetrahedron-boundary", "--ordered", "--json")
    d = json.loads(out)
    assert [g["free_rank"] for g in d["groups"]] == [1, 0, 1]
    code, out, _ = run(capsys, "oracle", "tetrahedron-boundary", "--subdivide", "1", "--json")
    assert json.loads(out)["consistent"] is True
    code, _, err = run(capsys, "oracle", "torus-7", "--cell-budget", "10")
    assert code == 2 and "more than 10 cells" in err


def test_triangulation_file(capsys, tmp_path):
    path = tmp_path / "t.json"
    path.write_text(json.dumps(builtin("octahedron-boundary").to_json()))
    code, out, _ = run(capsys, "oracle", str(path))
    assert code == 0 and "H_1 = Z/2" in out


def test_descriptor_file(capsys, tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps(catalog("surface(2)").to_dict()))
    code, out, _ = run(capsys, "torsion", str(path), "4", "6", "1", "3", "--json")
    assert code == 0 and json.loads(out)["conditions"] == ["C3-even-dim", "C4-surface"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"name": "x", "dim": 3, "betti": [1, 0, 0, 0], "orientable": True,
                               "parallelizable": True}))
    code, _, err = run(capsys, "catalog", str(bad))
    assert code == 2


def test_audit(capsys):
    code, out, _ = run(capsys, "audit", "--p", "2,3,5", "--kmax", "100")
    assert code == 0 and out.endswith("PASS")
    code, out, _ = run(capsys, "audit", "--p", "3", "--kmax", "12", "--no-oracle", "--json")
    r = AuditReport.from_dict(json.loads(out))
    assert r.passed and not r.violations
    assert json.loads(out) == r.to_dict()


def test_audit_deterministic(capsys):
    a = run(capsys, "audit", "--p", "2,7", "--kmax", "30", "--json")
    b = run(capsys, "audit", "--p", "7,2", "--kmax", "30", "--json")
    assert a == b


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0 and "sphere(2)" in out
    code, out, _ = run(capsys, "catalog", "klein", "--json")
    assert json.loads(out)["euler"] == 0


@pytest.mark.parametrize("argv", [
    [],
    ["range"],
    ["range", "x"],
    ["torsion", "sphere2", "4", "6", "1"],
    ["torsion", "sphere2", "4", "6", "1", "4"],
    ["torsion", "nowhere", "4", "6", "1", "2"],
    ["audit", "--p", "2,x"],
    ["audit", "--p", "4"],
    ["sections", "intersection", "1", "a", "0", "1"],
    ["oracle", "no-such-complex"],
    ["bogus"],
])
def test_usage_errors(capsys, argv):
    assert main(argv) == 2
