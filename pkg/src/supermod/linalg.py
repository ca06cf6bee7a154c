"""Exact rational linear algebra: row reduction, kernels, square solves.

Matrices are stored densely, but elimination runs on sparse row dictionaries:
the systems built by the criteria have a handful of nonzeros per equation and
many more equations than unknowns, so rows are folded one at a time into a
reduced row-echelon basis and discarded when they reduce to zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Optional, Sequence

from .errors import DimensionMismatch

ZERO = Fraction(0)
ONE = Fraction(1)

SparseRow = dict[int, Fraction]


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]
    column_labels: tuple[Hashable, ...] = field(default=())

    def __post_init__(self):
        entries = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) != self.rows or any(len(r) != self.cols for r in entries):
            raise DimensionMismatch(f"entries do not form a {self.rows}x{self.cols} matrix")
        labels = tuple(self.column_labels) or tuple(range(self.cols))
        if len(labels) != self.cols:
            raise DimensionMismatch("one column label per column is required")
        object.__setattr__(self, "column_labels", labels)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], column_labels: Sequence[Hashable] = ()) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        cols = len(rows[0]) if rows else len(column_labels)
        return cls(len(rows), cols, tuple(tuple(r) for r in rows), tuple(column_labels))

    @classmethod
    def from_sparse(
        cls, rows: Iterable[Mapping[int, object]], cols: int, column_labels: Sequence[Hashable] = ()
    ) -> "RationalMatrix":
        dense = []
        for sparse in rows:
            row = [ZERO] * cols
            for j, v in sparse.items():
                row[j] = Fraction(v)
            dense.append(tuple(row))
        return cls(len(dense), cols, tuple(dense), tuple(column_labels))

    @classmethod
    def identity(cls, size: int) -> "RationalMatrix":
        return cls.from_rows([[ONE if i == j else ZERO for j in range(size)] for i in range(size)])

    def sparse_rows(self) -> list[SparseRow]:
        return [{j: v for j, v in enumerate(row) if v} for row in self.entries]

    def __matmul__(self, vector: Sequence) -> list[Fraction]:
        if len(vector) != self.cols:
            raise DimensionMismatch(f"vector of length {len(vector)} for {self.cols} columns")
        return [sum((a * b for a, b in zip(row, vector) if a), ZERO) for row in self.entries]


class EchelonBasis:
    """Reduced row-echelon basis of a growing row space.

    Invariant: every stored row has a pivot coefficient 1 and no other stored
    row has a nonzero entry in that pivot column.
    """

    def __init__(self, cols: int):
        self.cols = cols
        self.pivots: dict[int, SparseRow] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Mapping[int, object]) -> SparseRow:
        out = {j: Fraction(v) for j, v in row.items() if v}
        for col in [c for c in out if c in self.pivots]:
            coef = out.get(col)
            if not coef:
                continue
            for j, v in self.pivots[col].items():
                nv = out.get(j, ZERO) - coef * v
                if nv:
                    out[j] = nv
                else:
                    out.pop(j, None)
        return out

    def add(self, row: Mapping[int, object]) -> bool:
        """Fold ``row`` into the basis; return whether the rank grew."""
        red = self.reduce(row)
        if not red:
            return False
        pivot = min(red)
        scale = red[pivot]
        if scale != 1:
            red = {j: v / scale for j, v in red.items()}
        for other in self.pivots.values():
            coef = other.get(pivot)
            if coef:
                for j, v in red.items():
                    nv = other.get(j, ZERO) - coef * v
                    if nv:
                        other[j] = nv
                    else:
                        other.pop(j, None)
        self.pivots[pivot] = red
        return True

    def kernel_basis(self) -> list[list[Fraction]]:
        """One vector per free column ``f``: 1 at ``f``, minus the pivot-row entries."""
        free = [c for c in range(self.cols) if c not in self.pivots]
        basis = []
        for f in free:
            vec = [ZERO] * self.cols
            vec[f] = ONE
            for p, prow in self.pivots.items():
                v = prow.get(f)
                if v:
                    vec[p] = -v
            basis.append(vec)
        return basis

    def rref(self) -> list[list[Fraction]]:
        rows = []
        for p in sorted(self.pivots):
            dense = [ZERO] * self.cols
            for j, v in self.pivots[p].items():
                dense[j] = v
            rows.append(dense)
        return rows


def echelon(rows: Iterable[Mapping[int, object]], cols: int) -> EchelonBasis:
    basis = EchelonBasis(cols)
    for row in rows:
        basis.add(row)
    return basis


def rref(M: RationalMatrix) -> list[list[Fraction]]:
    return echelon(M.sparse_rows(), M.cols).rref()


def rank(M: RationalMatrix) -> int:
    return echelon(M.sparse_rows(), M.cols).rank


def kernel_basis(M: RationalMatrix) -> list[list[Fraction]]:
    """Basis of ``{y : M y = 0}``; deterministic (one vector per free column)."""
    return echelon(M.sparse_rows(), M.cols).kernel_basis()


def kernel_dimension(M: RationalMatrix) -> int:
    return M.cols - rank(M)


def solve_square(A: RationalMatrix, b: Sequence) -> Optional[list[Fraction]]:
    """Unique solution of ``A y = b``, or ``None`` when ``A`` is singular."""
    if A.rows != A.cols:
        raise DimensionMismatch(f"solve_square needs a square matrix, got {A.rows}x{A.cols}")
    if len(b) != A.rows:
        raise DimensionMismatch(f"right-hand side has length {len(b)}, expected {A.rows}")
    return gauss_jordan_solve([list(r) for r in A.entries], [Fraction(x) for x in b])


def gauss_jordan_solve(a: list[list[Fraction]], rhs: list[Fraction]) -> Optional[list[Fraction]]:
    """In-place Gauss-Jordan on a private copy; ``None`` if singular."""
    size = len(a)
    aug = [row[:] + [rhs[i]] for i, row in enumerate(a)]
    for col in range(size):
        piv = next((r for r in range(col, size) if aug[r][col]), None)
        if piv is None:
            return None
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
        prow = aug[col]
        inv = 1 / prow[col]
        if inv != 1:
            prow = [v * inv for v in prow]
            aug[col] = prow
        for r in range(size):
            if r != col:
                f = aug[r][col]
                if f:
                    aug[r] = [x - f * y for x, y in zip(aug[r], prow)]
    return [aug[i][size] for i in range(size)]


def is_multiple(vec: Sequence[Fraction], ref: Sequence[Fraction]) -> bool:
    """Whether ``vec = alpha * ref`` for some scalar alpha (``ref`` nonzero)."""
    k = next((i for i, r in enumerate(ref) if r), None)
    if k is None:
        return not any(vec)
    alpha = Fraction(vec[k]) / ref[k]
    return all(v == alpha * r for v, r in zip(vec, ref))
