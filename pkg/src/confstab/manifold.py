"""Closed manifold descriptors and a small catalog.

A descriptor records only what the stability theorems consume: dimension,
orientability, parallelizability and rational Betti numbers (hence the Euler
characteristic). Parallelizability is an input flag, never computed; catalog
entries set it to True only where it is a known fact, so a False flag means
"not known to be parallelizable".
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from math import comb
from pathlib import Path
from typing import NamedTuple

from .errors import DomainError, InvalidDescriptor


@dataclass(frozen=True)
class ManifoldDescriptor:
    name: str
    dim: int
    orientable: bool
    parallelizable: bool
    betti: tuple[int, ...]
    euler: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "betti", tuple(int(b) for b in self.betti))
        object.__setattr__(self, "euler", sum((-1) ** i * b for i, b in enumerate(self.betti)))
        violations = _violations(self)
        if violations:
            raise InvalidDescriptor(violations)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "orientable": self.orientable,
            "parallelizable": self.parallelizable,
            "betti": list(self.betti),
            "euler": self.euler,
        }

    @classmethod
    def from_dict(cls, d: dict) -> ManifoldDescriptor:
        # any "euler" key is ignored; it is always recomputed
        return make_descriptor(
            name=d.get("name", "unnamed"),
            dim=d["dim"],
            orientable=d["orientable"],
            parallelizable=d["parallelizable"],
            betti=d["betti"],
        )

    def __str__(self):
        return self.name


def _violations(m: ManifoldDescriptor) -> list[tuple[str, str]]:
    out = []
    if m.dim < 2:
        out.append(("dim", f"dimension must be at least 2, got {m.dim}"))
    if len(m.betti) != m.dim + 1:
        out.append(("betti-length", f"expected {m.dim + 1} Betti numbers, got {len(m.betti)}"))
        return out
    if any(b < 0 for b in m.betti):
        out.append(("betti-nonnegative", "Betti numbers must be non-negative"))
    if m.betti[0] != 1:
        out.append(("connected", f"b_0 must be 1, got {m.betti[0]}"))
    if m.dim % 2 == 1 and m.euler != 0:
        out.append(("odd-dim-euler", "odd-dimensional closed manifolds have χ=0"))
    if m.parallelizable and not m.orientable:
        out.append(("parallelizable-orientable", "parallelizable manifolds are orientable"))
    if m.orientable and m.betti[-1] != 1:
        out.append(("top-betti", "orientable closed manifolds have b_n = 1"))
    if not m.orientable and m.betti[-1] != 0:
        out.append(("top-betti", "non-orientable closed manifolds have b_n = 0"))
    if m.orientable and m.betti != m.betti[::-1]:
        out.append(("poincare-duality", "orientable closed manifolds have b_i = b_(n-i)"))
    return out


def make_descriptor(name: str, dim: int, orientable: bool, parallelizable: bool, betti) -> ManifoldDescriptor:
    """Build a validated descriptor; raises InvalidDescriptor listing every violation."""
    return ManifoldDescriptor(str(name), int(dim), bool(orientable), bool(parallelizable), tuple(betti))


def load_descriptor(path) -> ManifoldDescriptor:
    return ManifoldDescriptor.from_dict(json.loads(Path(path).read_text()))


# -- catalog -----------------------------------------------------------------

class _Raw(NamedTuple):
    # unvalidated factor data; products may use factors like S^1 that are
    # not themselves admissible descriptors
    name: str
    dim: int
    orientable: bool
    parallelizable: bool
    betti: tuple[int, ...]
    sphere: bool = False


def _sphere(n: int) -> _Raw:
    if n < 1:
        raise DomainError("sphere dimension must be positive")
    betti = (1,) + (0,) * (n - 1) + (1,)
    return _Raw(f"sphere({n})", n, True, n in (1, 3, 7), betti, sphere=True)


def _torus(n: int) -> _Raw:
    if n < 1:
        raise DomainError("torus dimension must be positive")
    return _Raw(f"torus({n})", n, True, True, tuple(comb(n, i) for i in range(n + 1)))


def _surface(g: int) -> _Raw:
    if g < 0:
        raise DomainError("genus must be non-negative")
    if g == 0:
        return _sphere(2)._replace(name="surface(0)")
    return _Raw(f"surface({g})", 2, True, g == 1, (1, 2 * g, 1))


def _nonorientable(g: int) -> _Raw:
    if g < 1:
        raise DomainError("non-orientable genus must be at least 1")
    return _Raw(f"nonorientable({g})", 2, False, False, (1, g - 1, 0))


def _real_projective(n: int) -> _Raw:
    if n < 1:
        raise DomainError("projective space dimension must be positive")
    odd = n % 2 == 1
    betti = (1,) + (0,) * (n - 1) + ((1,) if odd else (0,)) if n > 1 else (1, 1)
    return _Raw(f"real-projective({n})", n, odd, n in (1, 3, 7), betti)


def _product(a: _Raw, b: _Raw) -> _Raw:
    betti = [0] * (a.dim + b.dim + 1)
    for i, x in enumerate(a.betti):
        for j, y in enumerate(b.betti):
            betti[i + j] += x * y
    parallelizable = (a.parallelizable and b.parallelizable) or (
        # products of spheres with an odd-dimensional factor (Kervaire)
        a.sphere and b.sphere and (a.dim % 2 == 1 or b.dim % 2 == 1)
    )
    return _Raw(
        f"product({a.name},{b.name})",
        a.dim + b.dim,
        a.orientable and b.orientable,
        parallelizable,
        tuple(betti),
    )


_BUILDERS = {
    "sphere": _sphere,
    "torus": _torus,
    "surface": _surface,
    "nonorientable": _nonorientable,
    "real-projective": _real_projective,
    "rp": _real_projective,
}

_ALIASES = {"torus": "torus(2)", "klein": "nonorientable(2)", "klein-bottle": "nonorientable(2)"}


def _split_top_level(s: str) -> list[str]:
    parts, depth, cur = [], 0, ""
    for ch in s:
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
            continue
        depth += (ch == "(") - (ch == ")")
        cur += ch
    parts.append(cur)
    return [p.strip() for p in parts]


def _parse(label: str) -> _Raw:
    s = label.strip().lower().replace(" ", "")
    s = _ALIASES.get(s, s)
    m = re.fullmatch(r"([a-z-]+)(\d+)", s)
    if m and m.group(1) in _BUILDERS:
        s = f"{m.group(1)}({m.group(2)})"
    m = re.fullmatch(r"([a-z-]+)\((.*)\)", s)
    if not m:
        raise DomainError(f"unknown catalog entry {label!r}")
    head, body = m.groups()
    if head == "product":
        args = _split_top_level(body)
        if len(args) < 2 or not all(args):
            raise DomainError(f"product needs at least two factors: {label!r}")
        raw = _parse(args[0])
        for a in args[1:]:
            raw = _product(raw, _parse(a))
        return raw
    if head not in _BUILDERS or not body.isdigit():
        raise DomainError(f"unknown catalog entry {label!r}")
    return _BUILDERS[head](int(body))


def catalog(name: str) -> ManifoldDescriptor:
    """Look up a catalog manifold by label.

    Labels: ``sphere(n)``, ``torus(n)`` (``torus`` means n = 2),
    ``surface(g)``, ``nonorientable(g)`` (``klein``), ``real-projective(n)``
    (``rp(n)``), and ``product(A,B,...)`` of any of these. The compact form
    ``sphere2`` is accepted for ``sphere(2)``.
    """
    raw = _parse(name)
    # Stiefel: orientable 3-manifolds are parallelizable
    parallelizable = raw.parallelizable or (raw.dim == 3 and raw.orientable)
    return make_descriptor(raw.name, raw.dim, raw.orientable, parallelizable, raw.betti)


def resolve(arg: str) -> ManifoldDescriptor:
    """A catalog label, or a path to a descriptor JSON file."""
    p = Path(arg)
    if arg.endswith(".json") or p.is_file():
        return load_descriptor(p)
    return catalog(arg)


CATALOG_SAMPLES = (
    "sphere(2)", "sphere(3)", "sphere(4)", "sphere(5)", "sphere(7)",
    "torus(2)", "torus(3)", "surface(2)", "surface(3)",
    "nonorientable(1)", "nonorientable(2)", "nonorientable(3)",
    "real-projective(2)", "real-projective(3)", "real-projective(4)",
    "product(sphere(2),sphere(2))", "product(sphere(1),sphere(2))",
    "product(sphere(3),sphere(3))", "product(surface(2),sphere(2))",
)
