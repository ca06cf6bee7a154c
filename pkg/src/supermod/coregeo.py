"""Marginal vectors, payoff arrays, core vertices and core structure."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterator, Optional, Sequence

from .errors import NegativeInput, NoMinRepresentation, NotSupermodular
from .gamecore import ZERO, Game, VariableSet, bits, is_supermodular, to_fraction
from .linalg import gauss_jordan_solve

Vector = tuple[Fraction, ...]


def enumerations(n: int) -> Iterator[tuple[int, ...]]:
    """All orderings of positions ``0..n-1``, lexicographic."""
    return itertools.permutations(range(n))


def chain(order: Sequence[int]) -> list[int]:
    """Masks of the maximal chain ``{}, {o1}, {o1,o2}, ..., N`` of an ordering."""
    out = [0]
    for i in order:
        out.append(out[-1] | (1 << i))
    return out


def marginal_vector(m: Game, order: Sequence[int]) -> Vector:
    """Payoff to each variable when variables join in ``order``."""
    vec = [ZERO] * m.n
    prefix = 0
    for i in order:
        nxt = prefix | (1 << i)
        vec[i] = m.values[nxt] - m.values[prefix]
        prefix = nxt
    return tuple(vec)


def coalition_sum(vec: Sequence[Fraction], mask: int) -> Fraction:
    return sum((vec[i] for i in bits(mask)), ZERO)


@dataclass(frozen=True)
class PayoffArray:
    """Rows of payoff vectors over a variable set.

    ``row_ids`` are enumerations (tuples of positions) for the full array and
    plain integers for pruned arrays.
    """

    ground: VariableSet
    row_ids: tuple[Hashable, ...]
    vectors: tuple[Vector, ...]

    def __post_init__(self):
        vectors = tuple(tuple(to_fraction(x) for x in v) for v in self.vectors)
        object.__setattr__(self, "vectors", vectors)
        if len(self.row_ids) != len(vectors):
            raise ValueError("one row id per row is required")
        if any(len(v) != self.ground.n for v in vectors):
            raise ValueError("row length must equal the number of variables")

    @classmethod
    def from_vectors(cls, ground: VariableSet, vectors) -> "PayoffArray":
        vectors = tuple(tuple(v) for v in vectors)
        return cls(ground, tuple(range(len(vectors))), vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    @property
    def rows(self) -> list[tuple[Hashable, Vector]]:
        return list(zip(self.row_ids, self.vectors))

    def distinct(self) -> set[Vector]:
        return set(self.vectors)

    def pruned(self) -> "PayoffArray":
        """Distinct rows, sorted lexicographically, re-indexed from 0."""
        return PayoffArray.from_vectors(self.ground, sorted(self.distinct()))

    def to_csv(self) -> str:
        lines = [",".join(self.ground.labels)]
        for vec in self.vectors:
            lines.append(",".join(f"{x.numerator}/{x.denominator}" for x in vec))
        return "\n".join(lines) + "\n"


def payoff_array(m: Game) -> PayoffArray:
    """One marginal vector per enumeration (``n!`` rows, lexicographic order)."""
    orders = list(enumerations(m.n))
    return PayoffArray(m.ground, tuple(orders), tuple(marginal_vector(m, o) for o in orders))


def game_from_chains(ground: VariableSet, orders: Sequence[Sequence[int]], vectors) -> Game:
    """Rebuild a game from marginal-vector rows through chain partial sums.

    Every subset must lie on the chain of at least one listed ordering; when a
    subset lies on several chains the first one is used.
    """
    values: list[Optional[Fraction]] = [None] * (1 << ground.n)
    values[0] = ZERO
    for order, vec in zip(orders, vectors):
        acc = ZERO
        prefix = 0
        for i in order:
            prefix |= 1 << i
            acc += vec[i]
            if values[prefix] is None:
                values[prefix] = acc
    if any(v is None for v in values):
        raise ValueError("the orderings do not cover every subset")
    return Game(ground, tuple(values))


def core_vertices(m: Game) -> PayoffArray:
    """Vertices of the core of a supermodular game: distinct marginal vectors."""
    if not is_supermodular(m):
        raise NotSupermodular("core vertices via marginal vectors need a supermodular game")
    return payoff_array(m).pruned()


def min_representation_holds(m: Game, x: PayoffArray) -> bool:
    """``m(S) = min over rows of the row sum on S`` for every ``S``."""
    if x.ground.n != m.n or not len(x):
        return False
    for s in range(1 << m.n):
        if min(coalition_sum(v, s) for v in x.vectors) != m.values[s]:
            return False
    return True


@dataclass(frozen=True)
class CoreRow:
    row_id: Hashable
    vector: Vector
    null_set: int
    tightness: frozenset[int]


@dataclass(frozen=True)
class CoreStructure:
    ground: VariableSet
    rows: tuple[CoreRow, ...]

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def vectors(self) -> list[Vector]:
        return [r.vector for r in self.rows]

    def classes(self) -> list[frozenset[int]]:
        return [r.tightness for r in self.rows]

    def to_dict(self) -> list[dict]:
        g = self.ground
        return [
            {
                "vertex": [str(x) for x in r.vector],
                "null_set": list(g.names(r.null_set)),
                "tightness": [list(g.names(s)) for s in sorted(r.tightness, key=lambda s: (bin(s).count("1"), s))],
            }
            for r in self.rows
        ]


def core_structure(m: Game, x: PayoffArray) -> CoreStructure:
    """Null sets and tightness classes of each row of a min-representing array."""
    if not min_representation_holds(m, x):
        raise NoMinRepresentation("the array does not give a min-representation of the game")
    rows = []
    for rid, vec in x.rows:
        null = sum(1 << i for i, v in enumerate(vec) if v == 0)
        tight = frozenset(s for s in range(1 << m.n) if coalition_sum(vec, s) == m.values[s])
        rows.append(CoreRow(rid, vec, null, tight))
    return CoreStructure(m.ground, tuple(rows))


def array_tightness(x: PayoffArray) -> list[frozenset[int]]:
    """Tightness classes read off the array alone: sets where a row attains the column minimum."""
    n = x.ground.n
    sums = [[coalition_sum(v, s) for s in range(1 << n)] for v in x.vectors]
    mins = [min(col) for col in zip(*sums)]
    return [frozenset(s for s in range(1 << n) if row[s] == mins[s]) for row in sums]


def general_core_vertices(m: Game) -> PayoffArray:
    """Vertices of the core of an arbitrary game, by square-subsystem enumeration.

    A vertex is the unique solution of ``sum_N v = m(N)`` together with ``n-1``
    coalition constraints taken with equality; feasible solutions are kept.
    An empty result means the core is empty.
    """
    n, full, vals = m.n, m.full, m.values
    coalitions = [s for s in range(1, full)]
    ones = [Fraction(1)] * n
    indicator = {s: [Fraction(1) if s >> i & 1 else ZERO for i in range(n)] for s in coalitions}
    found: set[Vector] = set()
    for combo in itertools.combinations(coalitions, n - 1):
        a = [ones] + [indicator[s] for s in combo]
        b = [vals[full]] + [vals[s] for s in combo]
        sol = gauss_jordan_solve(a, b)
        if sol is None:
            continue
        vec = tuple(sol)
        if vec in found:
            continue
        if all(coalition_sum(vec, s) >= vals[s] for s in coalitions):
            found.add(vec)
    return PayoffArray.from_vectors(m.ground, sorted(found))


def is_exact(m: Game) -> bool:
    """Balanced and every coalition bound is attained on the core."""
    verts = general_core_vertices(m)
    return bool(len(verts)) and min_representation_holds(m, verts)


def lovasz_extension(m: Game, y: Sequence) -> Fraction:
    """Piecewise-linear extension of ``m`` to the non-negative orthant.

    ``y`` is split along the chain of its upper level sets (components sorted
    descending, ties broken by position) and the chain values are combined
    linearly.
    """
    y = [to_fraction(v) for v in y]
    if len(y) != m.n:
        raise ValueError(f"expected a vector of length {m.n}")
    if any(v < 0 for v in y):
        raise NegativeInput("the extension is defined on non-negative vectors only")
    order = sorted(range(m.n), key=lambda i: (-y[i], i))
    total = ZERO
    prefix = 0
    for k, i in enumerate(order):
        prefix |= 1 << i
        nxt = y[order[k + 1]] if k + 1 < m.n else ZERO
        lam = y[i] - nxt
        if lam:
            total += lam * m.values[prefix]
    return total
