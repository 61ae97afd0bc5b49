"""Sparse integer chain complexes and their homology."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import IntegrityError
from ..groups import FiniteAbelianGroup
from .snf import elementary_divisors


@dataclass
class SparseMatrix:
    """Column-major sparse integer matrix; ``cols[c]`` maps row -> entry."""

    nrows: int
    ncols: int
    cols: list[dict[int, int]] = field(default_factory=list)

    def __post_init__(self):
        if not self.cols:
            self.cols = [{} for _ in range(self.ncols)]
        if len(self.cols) != self.ncols:
            raise ValueError("column count mismatch")

    @classmethod
    def from_dense(cls, A) -> SparseMatrix:
        nrows = len(A)
        ncols = len(A[0]) if nrows else 0
        cols = [{r: A[r][c] for r in range(nrows) if A[r][c]} for c in range(ncols)]
        return cls(nrows, ncols, cols)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for c, col in enumerate(self.cols):
            for r, v in col.items():
                out[r][c] = v
        return out

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def compose_is_zero(self, other: SparseMatrix) -> bool:
        """Whether ``self @ other`` vanishes."""
        for col in other.cols:
            acc: dict[int, int] = {}
            for r, v in col.items():
                for rr, w in self.cols[r].items():
                    acc[rr] = acc.get(rr, 0) + v * w
            if any(acc.values()):
                return False
        return True


def rank_and_torsion(M: SparseMatrix) -> tuple[int, list[int]]:
    """Rank of ``M`` and its elementary divisors greater than 1.

    Unit pivots are eliminated sparsely first (each one splits off a 1 in the
    Smith form); the residual block goes through the dense Smith form.
    """
    rows: dict[int, dict[int, int]] = {}
    colidx: dict[int, set[int]] = {}
    for c, col in enumerate(M.cols):
        for r, v in col.items():
            if v:
                rows.setdefault(r, {})[c] = v
                colidx.setdefault(c, set()).add(r)

    rank = 0
    progress = True
    while progress:
        progress = False
        for c in sorted(colidx, key=lambda c: len(colidx[c])):
            rs = colidx.get(c)
            if not rs:
                continue
            units = [r for r in rs if rows[r][c] in (1, -1)]
            if not units:
                continue
            r = min(units, key=lambda r: len(rows[r]))
            _eliminate(rows, colidx, r, c)
            rank += 1
            progress = True

    if not rows:
        return rank, []
    rkeys = sorted(rows)
    ckeys = sorted(colidx)
    cpos = {c: i for i, c in enumerate(ckeys)}
    dense = [[0] * len(ckeys) for _ in rkeys]
    for i, r in enumerate(rkeys):
        for c, v in rows[r].items():
            dense[i][cpos[c]] = v
    divs = elementary_divisors(dense)
    return rank + len(divs), [d for d in divs if d > 1]


def _eliminate(rows, colidx, r, c):
    pivot_row = rows.pop(r)
    u = pivot_row[c]
    for cc in pivot_row:
        colidx[cc].discard(r)
    for x in list(colidx[c]):
        row = rows[x]
        f = row[c] * u  # u = ±1 is its own inverse
        for cc, v in pivot_row.items():
            nv = row.get(cc, 0) - f * v
            if nv:
                if cc not in row:
                    colidx.setdefault(cc, set()).add(x)
                row[cc] = nv
            elif cc in row:
                del row[cc]
                colidx[cc].discard(x)
        if not row:
            del rows[x]
    del colidx[c]
    for cc in pivot_row:
        if cc in colidx and not colidx[cc]:
            del colidx[cc]


@dataclass
class ChainComplex:
    """``dims[i]`` cells in degree i; ``boundaries[i]`` is d_i: C_i -> C_{i-1} for i >= 1.

    ``boundaries[0]`` is unused and kept as a 0 x dims[0] matrix.
    """

    dims: list[int]
    boundaries: list[SparseMatrix]

    def __post_init__(self):
        if len(self.boundaries) != len(self.dims):
            raise ValueError("need one boundary matrix per degree")
        for i in range(1, len(self.dims)):
            b = self.boundaries[i]
            if (b.nrows, b.ncols) != (self.dims[i - 1], self.dims[i]):
                raise ValueError(f"d_{i} has shape {(b.nrows, b.ncols)}, expected {(self.dims[i - 1], self.dims[i])}")

    @classmethod
    def from_dense(cls, dims, mats) -> ChainComplex:
        """``mats[i-1]`` is the dense matrix of d_i."""
        bds = [SparseMatrix(0, dims[0]) if dims else SparseMatrix(0, 0)]
        for i in range(1, len(dims)):
            m = mats[i - 1]
            bds.append(SparseMatrix.from_dense(m) if dims[i] and dims[i - 1] else SparseMatrix(dims[i - 1], dims[i]))
        return cls(list(dims), bds)

    @property
    def euler(self) -> int:
        return sum((-1) ** i * n for i, n in enumerate(self.dims))

    def check(self):
        for i in range(2, len(self.dims)):
            if not self.boundaries[i - 1].compose_is_zero(self.boundaries[i]):
                raise IntegrityError(f"d_{i - 1} o d_{i} != 0")


def homology(C: ChainComplex) -> list[FiniteAbelianGroup]:
    """Integral homology H_0 .. H_top of a chain complex."""
    C.check()
    top = len(C.dims)
    ranks = [0] * (top + 1)
    torsion: list[list[int]] = [[] for _ in range(top + 1)]
    for i in range(1, top):
        ranks[i], torsion[i] = rank_and_torsion(C.boundaries[i])
    return [
        FiniteAbelianGroup(C.dims[i] - ranks[i] - ranks[i + 1], tuple(torsion[i + 1]))
        for i in range(top)
    ]
