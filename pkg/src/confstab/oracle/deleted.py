"""Deleted products and their free Z/2 quotients.

The deleted product of X is the union of the product cells s x t with s and t
disjoint simplices; it models the ordered configuration space of two points
in |X|. Swapping factors is a free cellular involution, and the quotient
models the unordered configuration space C_2(|X|).

Cells keep the product orientation, so

    d(s x t) = ds x t + (-1)^dim(s) s x dt

and the swap sends s x t to (-1)^(dim s * dim t) t x s.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import CellBudgetExceeded, DomainError, IntegrityError
from ..groups import FiniteAbelianGroup
from .chains import ChainComplex, SparseMatrix, homology
from .simplicial import SimplicialComplex

DEFAULT_CELL_BUDGET = 2_000_000

Cell = tuple[tuple[int, ...], tuple[int, ...]]


def _faces_of(s):
    # (sign, face) pairs of the simplicial boundary
    return [((-1) ** i, s[:i] + s[i + 1:]) for i in range(len(s))] if len(s) > 1 else []


def _cell_boundary(cell: Cell):
    s, t = cell
    out = [(sign, (f, t)) for sign, f in _faces_of(s)]
    ds = (-1) ** (len(s) - 1)
    out += [(ds * sign, (s, f)) for sign, f in _faces_of(t)]
    return out


@dataclass
class ProductCellComplex:
    """Cells of a deleted product grouped by dimension."""

    source: SimplicialComplex
    cells: list[list[Cell]]
    index: list[dict[Cell, int]] = field(init=False, repr=False)
    _chains: ChainComplex | None = field(init=False, repr=False, default=None)

    def __post_init__(self):
        self.index = [{c: i for i, c in enumerate(level)} for level in self.cells]
        for level in self.cells:
            for s, t in level:
                if set(s) & set(t):
                    raise IntegrityError(f"cell {(s, t)} is not in the deleted product")

    @property
    def counts(self) -> list[int]:
        return [len(level) for level in self.cells]

    @property
    def euler(self) -> int:
        return sum((-1) ** i * n for i, n in enumerate(self.counts))

    def swap_is_free(self) -> bool:
        return all((t, s) in self.index[d] and s != t for d, level in enumerate(self.cells) for s, t in level)

    def chain_complex(self) -> ChainComplex:
        if self._chains is None:
            self._chains = self._build_chains()
        return self._chains

    def _build_chains(self) -> ChainComplex:
        bds = [SparseMatrix(0, len(self.cells[0]) if self.cells else 0)]
        for d in range(1, len(self.cells)):
            below = self.index[d - 1]
            cols = []
            for cell in self.cells[d]:
                col: dict[int, int] = {}
                for sign, face in _cell_boundary(cell):
                    r = below[face]
                    col[r] = col.get(r, 0) + sign
                cols.append({r: v for r, v in col.items() if v})
            bds.append(SparseMatrix(len(self.cells[d - 1]), len(self.cells[d]), cols))
        C = ChainComplex(self.counts, bds)
        C.check()
        return C


def deleted_product(X: SimplicialComplex, cell_budget: int = DEFAULT_CELL_BUDGET) -> ProductCellComplex:
    faces = list(X.faces())
    masks = [sum(1 << v for v in s) for s in faces]
    levels: list[list[Cell]] = [[] for _ in range(2 * X.dim + 1)]
    count = 0
    for s, ms in zip(faces, masks):
        for t, mt in zip(faces, masks):
            if ms & mt:
                continue
            count += 1
            if count > cell_budget:
                raise CellBudgetExceeded(count, cell_budget, f"source f-vector {X.f_vector}")
            levels[len(s) + len(t) - 2].append((s, t))
    while levels and not levels[-1]:
        levels.pop()
    for level in levels:
        level.sort(key=lambda c: (len(c[0]), c))
    D = ProductCellComplex(X, levels)
    D.chain_complex()  # boundary-of-boundary check
    return D


def _canonical(cell: Cell) -> tuple[Cell, int]:
    """Orbit representative of ``cell`` and the sign with cell = sign * rep."""
    s, t = cell
    if (len(s), s) < (len(t), t):
        return cell, 1
    return (t, s), (-1) ** ((len(s) - 1) * (len(t) - 1))


def unordered_quotient(D: ProductCellComplex) -> ChainComplex:
    """Cellular chains of the deleted product modulo the swap involution."""
    if not D.swap_is_free():
        raise IntegrityError("swap does not act freely")
    reps = [[c for c in level if _canonical(c)[0] == c] for level in D.cells]
    index = [{c: i for i, c in enumerate(level)} for level in reps]
    bds = [SparseMatrix(0, len(reps[0]) if reps else 0)]
    for d in range(1, len(reps)):
        cols = []
        for cell in reps[d]:
            col: dict[int, int] = {}
            for sign, face in _cell_boundary(cell):
                rep, s2 = _canonical(face)
                r = index[d - 1][rep]
                col[r] = col.get(r, 0) + sign * s2
            cols.append({r: v for r, v in col.items() if v})
        bds.append(SparseMatrix(len(reps[d - 1]), len(reps[d]), cols))
    C = ChainComplex([len(level) for level in reps], bds)
    C.check()
    return C


@dataclass
class Config2Result:
    groups: list[FiniteAbelianGroup]
    ordered: bool
    subdivisions: int
    cell_counts: list[int]
    # homology one subdivision level coarser, when subdivisions >= 1
    previous_groups: list[FiniteAbelianGroup] | None = None

    @property
    def consistent(self) -> bool:
        return self.previous_groups is None or _trim(self.previous_groups) == _trim(self.groups)

    def to_dict(self) -> dict:
        d = {
            "ordered": self.ordered,
            "subdivisions": self.subdivisions,
            "cell_counts": self.cell_counts,
            "groups": [g.to_dict() for g in self.groups],
            "consistent": self.consistent,
        }
        if self.previous_groups is not None:
            d["previous_groups"] = [g.to_dict() for g in self.previous_groups]
        return d


def _trim(groups):
    g = list(groups)
    while g and g[-1].is_trivial():
        g.pop()
    return g


def _config2_once(X: SimplicialComplex, ordered: bool, cell_budget: int):
    D = deleted_product(X, cell_budget)
    C = D.chain_complex() if ordered else unordered_quotient(D)
    return homology(C), C.dims


def config2_homology(
    X: SimplicialComplex,
    ordered: bool = False,
    subdivisions: int = 0,
    cell_budget: int = DEFAULT_CELL_BUDGET,
) -> Config2Result:
    """Integral homology of the (un)ordered two-point configuration space model.

    With ``subdivisions >= 1`` the homology at the previous subdivision level
    is computed too, and ``result.consistent`` reports whether they agree.
    """
    if subdivisions < 0:
        raise DomainError("subdivisions must be non-negative")
    levels = [X]
    for _ in range(subdivisions):
        levels.append(levels[-1].barycentric_subdivision())
    groups, counts = _config2_once(levels[-1], ordered, cell_budget)
    prev = None
    if subdivisions >= 1:
        prev, _ = _config2_once(levels[-2], ordered, cell_budget)
    return Config2Result(groups, ordered, subdivisions, counts, prev)
