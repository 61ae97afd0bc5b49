"""Finite simplicial complexes, built-in triangulations, barycentric subdivision."""
from __future__ import annotations

import json
from itertools import combinations, permutations
from pathlib import Path

from ..errors import DomainError
from .chains import ChainComplex, SparseMatrix


class SimplicialComplex:
    """A complex given by vertex labels and facets.

    Simplices are stored as sorted tuples of vertex indices (positions in
    ``vertices``). Non-maximal facets in the input are dropped.
    """

    def __init__(self, vertices, facets):
        self.vertices = list(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise DomainError("duplicate vertex labels")
        index = {v: i for i, v in enumerate(self.vertices)}
        faces = set()
        tops = []
        for f in facets:
            try:
                s = tuple(sorted({index[v] for v in f}))
            except KeyError as e:
                raise DomainError(f"facet {f!r} uses unknown vertex {e.args[0]!r}") from None
            if not s:
                raise DomainError("empty facet")
            tops.append(s)
        for v in range(len(self.vertices)):
            faces.add((v,))
        for s in tops:
            for d in range(1, len(s) + 1):
                faces.update(combinations(s, d))
        dim = max((len(s) for s in faces), default=0) - 1
        self.simplices: list[list[tuple[int, ...]]] = [[] for _ in range(dim + 1)]
        for s in faces:
            self.simplices[len(s) - 1].append(s)
        for level in self.simplices:
            level.sort()
        proper = set()
        for s in set(tops):
            for d in range(1, len(s)):
                proper.update(combinations(s, d))
        self.facets = sorted(set(tops) - proper, key=lambda s: (len(s), s))

    @property
    def dim(self) -> int:
        return len(self.simplices) - 1

    @property
    def f_vector(self) -> list[int]:
        return [len(level) for level in self.simplices]

    @property
    def euler(self) -> int:
        return sum((-1) ** i * n for i, n in enumerate(self.f_vector))

    def faces(self):
        for level in self.simplices:
            yield from level

    def chain_complex(self) -> ChainComplex:
        pos = [{s: i for i, s in enumerate(level)} for level in self.simplices]
        bds = [SparseMatrix(0, len(self.simplices[0]))]
        for d in range(1, self.dim + 1):
            cols = []
            for s in self.simplices[d]:
                cols.append({pos[d - 1][s[:i] + s[i + 1:]]: (-1) ** i for i in range(len(s))})
            bds.append(SparseMatrix(len(self.simplices[d - 1]), len(self.simplices[d]), cols))
        return ChainComplex(self.f_vector, bds)

    def relabel(self, mapping) -> SimplicialComplex:
        m = mapping if callable(mapping) else mapping.__getitem__
        return SimplicialComplex(
            [m(v) for v in self.vertices],
            [[m(self.vertices[i]) for i in f] for f in self.facets],
        )

    def barycentric_subdivision(self) -> SimplicialComplex:
        """New vertices are the faces (as tuples of labels); facets are full flags."""
        def label(s):
            return tuple(self.vertices[i] for i in s)

        verts = [label(s) for s in self.faces()]
        facets = []
        for f in self.facets:
            for perm in permutations(f):
                facets.append([label(tuple(sorted(perm[: i + 1]))) for i in range(len(perm))])
        return SimplicialComplex(verts, facets)

    def to_json(self) -> dict:
        return {
            "vertices": [_jsonable(v) for v in self.vertices],
            "facets": [[_jsonable(self.vertices[i]) for i in f] for f in self.facets],
        }

    @classmethod
    def from_json(cls, d: dict) -> SimplicialComplex:
        def key(v):
            return tuple(map(key, v)) if isinstance(v, list) else v

        return cls([key(v) for v in d["vertices"]], [[key(v) for v in f] for f in d["facets"]])

    def __repr__(self):
        return f"SimplicialComplex(f_vector={self.f_vector})"


def _jsonable(v):
    return [_jsonable(x) for x in v] if isinstance(v, tuple) else v


def _boundary_of_simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex(range(n + 1), combinations(range(n + 1), n))


def _octahedron() -> SimplicialComplex:
    # vertices 2k, 2k+1 are antipodal on axis k
    facets = [(a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5)]
    return SimplicialComplex(range(6), facets)


def _torus7() -> SimplicialComplex:
    facets = []
    for i in range(7):
        facets.append((i, (i + 1) % 7, (i + 3) % 7))
        facets.append((i, (i + 2) % 7, (i + 3) % 7))
    return SimplicialComplex(range(7), facets)


def _rp2_6() -> SimplicialComplex:
    facets = [
        (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2),
        (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4),
    ]
    return SimplicialComplex(range(1, 7), facets)


BUILTINS = {
    "tetrahedron-boundary": lambda: _boundary_of_simplex(3),
    "triangle-boundary": lambda: _boundary_of_simplex(2),
    "octahedron-boundary": _octahedron,
    "torus-7": _torus7,
    "rp2-6": _rp2_6,
    "edge": lambda: SimplicialComplex(["v", "w"], [["v", "w"]]),
}


def builtin(name: str) -> SimplicialComplex:
    try:
        return BUILTINS[name]()
    except KeyError:
        raise DomainError(f"unknown built-in complex {name!r}; choose from {sorted(BUILTINS)}") from None


def load_complex(arg: str) -> SimplicialComplex:
    """A built-in name or a path to a triangulation JSON file."""
    if arg in BUILTINS:
        return builtin(arg)
    p = Path(arg)
    if not p.is_file():
        raise DomainError(f"{arg!r} is neither a built-in complex nor a file")
    return SimplicialComplex.from_json(json.loads(p.read_text()))
