"""Extremality of standardized supermodular games.

The core-based test: take the vertices of the core, record for every vertex
which coordinates vanish and at which coalitions the vertex is tight, and ask
whether those combinatorial data pin the vertex array down up to a scalar.
That is a homogeneous linear system over unknowns ``y(vertex, variable)``:

* ``y(t, i) = 0`` whenever vertex ``t`` has ``x(t, i) = 0``;
* ``sum_S y(t, .) = sum_S y(p, .)`` whenever ``S`` is tight for both ``t`` and ``p``.

The game is extreme iff the solution space is one-dimensional.  An
independent check works on the facets of the cone instead: the smallest face
containing ``m`` is cut out by the elementary differences that vanish at
``m``, and ``m`` is extreme iff that face spans a line.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .coregeo import (
    CoreStructure,
    PayoffArray,
    core_structure,
    core_vertices,
    general_core_vertices,
    payoff_array,
)
from .errors import NotStandardized, NotSupermodular, ZeroGame
from .gamecore import (
    Game,
    bits,
    delta_masks,
    is_standardized,
    is_supermodular,
    popcount,
    standardize,
    triplet_masks,
)
from .linalg import RationalMatrix, echelon, is_multiple


class Status(str, enum.Enum):
    EXTREME = "Extreme"
    NOT_EXTREME = "NotExtreme"
    ZERO_GAME = "ZeroGame"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ExtremalityVerdict:
    status: Status
    kernel_dimension: int
    num_core_vertices: int
    witness: Optional[tuple[tuple[Fraction, ...], ...]] = None

    @property
    def is_extreme(self) -> bool:
        return self.status is Status.EXTREME

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "kernel_dimension": self.kernel_dimension,
            "num_core_vertices": self.num_core_vertices,
            "witness": None if self.witness is None else [[str(v) for v in row] for row in self.witness],
        }


def _ab_rows(cs: CoreStructure):
    n = cs.ground.n
    k = len(cs.rows)
    rows = []
    for t, row in enumerate(cs.rows):
        for i in bits(row.null_set):
            rows.append({t * n + i: 1})
    for t, p in itertools.combinations(range(k), 2):
        shared = cs.rows[t].tightness & cs.rows[p].tightness
        for s in sorted(shared):
            if s == 0:
                continue  # empty sums: 0 = 0
            eq = {}
            for i in bits(s):
                eq[t * n + i] = 1
                eq[p * n + i] = -1
            rows.append(eq)
    return rows


def build_ab_system(cs: CoreStructure) -> RationalMatrix:
    """Coefficient matrix of the vertex/variable system; columns are ``(row_id, label)``."""
    n = cs.ground.n
    labels = [(r.row_id, cs.ground.labels[i]) for r in cs.rows for i in range(n)]
    return RationalMatrix.from_sparse(_ab_rows(cs), len(labels), labels)


def ab_kernel(cs: CoreStructure) -> list[list[Fraction]]:
    n = cs.ground.n
    return echelon(_ab_rows(cs), len(cs.rows) * n).kernel_basis()


def _flat(cs: CoreStructure) -> list[Fraction]:
    return [v for r in cs.rows for v in r.vector]


def _unflatten(vec, n: int) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(vec[k:k + n]) for k in range(0, len(vec), n))


def structure_verdict(cs: CoreStructure) -> ExtremalityVerdict:
    """Kernel dimension of the system for a given core structure."""
    n = cs.ground.n
    x = _flat(cs)
    if not any(x):
        return ExtremalityVerdict(Status.ZERO_GAME, 0, len(cs.rows))
    basis = ab_kernel(cs)
    dim = len(basis)
    if dim == 1:
        return ExtremalityVerdict(Status.EXTREME, 1, len(cs.rows))
    witness = next((b for b in basis if not is_multiple(b, x)), None)
    return ExtremalityVerdict(
        Status.NOT_EXTREME, dim, len(cs.rows), None if witness is None else _unflatten(witness, n)
    )


def is_extreme(m: Game, full_array: bool = False) -> ExtremalityVerdict:
    """Decide whether ``m`` (after standardization) spans an extreme ray.

    With ``full_array=True`` the system is built on all ``n!`` marginal
    vectors, repeated rows included, instead of the distinct core vertices.
    """
    if not is_supermodular(m):
        raise NotSupermodular("the extremality criterion needs a supermodular game")
    s = standardize(m)
    if s.is_zero():
        return ExtremalityVerdict(Status.ZERO_GAME, 0, 1)
    x = payoff_array(s) if full_array else core_vertices(s)
    verdict = structure_verdict(core_structure(s, x))
    if full_array:
        verdict = ExtremalityVerdict(
            verdict.status, verdict.kernel_dimension, len(x.distinct()), verdict.witness
        )
    return verdict


def exact_game_verdict(m: Game) -> ExtremalityVerdict:
    """The same system on the core vertices of an exact, possibly non-supermodular game.

    No extremality claim is attached; the status only reports whether the
    kernel is one-dimensional.
    """
    verts = general_core_vertices(m)
    return structure_verdict(core_structure(m, verts))


def vanishing_triplets(m: Game) -> list[tuple[int, int, int]]:
    return [t for t in triplet_masks(m.n) if delta_masks(m.values, *t) == 0]


def face_dimension(m: Game) -> int:
    """Dimension of the smallest face of the standardized cone containing ``standardize(m)``."""
    s = standardize(m)
    n = s.n
    unknowns = [t for t in range(1 << n) if popcount(t) >= 2]
    col = {t: j for j, t in enumerate(unknowns)}
    rows = []
    for a, b, z in vanishing_triplets(s):
        eq: dict[int, int] = {}
        ba, bb = 1 << a, 1 << b
        for t, sign in ((z | ba | bb, 1), (z, 1), (z | ba, -1), (z | bb, -1)):
            if t in col:
                eq[col[t]] = eq.get(col[t], 0) + sign
        rows.append({j: v for j, v in eq.items() if v})
    return len(unknowns) - echelon(rows, len(unknowns)).rank


def facet_oracle_is_extreme(m: Game) -> bool:
    """Extremality via the facet description of the cone."""
    if not is_supermodular(m):
        raise NotSupermodular("the facet oracle needs a supermodular game")
    if standardize(m).is_zero():
        raise ZeroGame("the zero game does not span a ray")
    return face_dimension(m) == 1


def is_indecomposable_gp(m: Game) -> bool:
    """Indecomposability of the core of a standardized supermodular game as a polytope."""
    if not is_supermodular(m):
        raise NotSupermodular("the core must be a generalized permutohedron")
    if not is_standardized(m):
        raise NotStandardized("the polytope must be standardized")
    return m.is_zero() or is_extreme(m).status is Status.EXTREME


@dataclass(frozen=True)
class Decomposition:
    direction: Game
    epsilon: Fraction
    left: Game
    right: Game


def witness_game(m: Game, witness) -> Game:
    """Game whose marginal vectors reproduce a kernel element row by row.

    For every subset ``S`` pick an ordering whose chain passes through ``S``;
    the marginal vector of ``m`` for that ordering is a core vertex and the
    witness row of that vertex, summed over ``S``, gives the value.
    """
    s = standardize(m)
    verts = core_vertices(s)
    index = {v: k for k, v in enumerate(verts.vectors)}
    n = s.n
    values: list[Optional[Fraction]] = [None] * (1 << n)
    values[0] = Fraction(0)
    full = payoff_array(s)
    for order, vec in full.rows:
        row = witness[index[vec]]
        acc = Fraction(0)
        prefix = 0
        for i in order:
            prefix |= 1 << i
            acc += row[i]
            if values[prefix] is None:
                values[prefix] = acc
    return Game(s.ground, tuple(values))


def decomposition_witness(m: Game, max_halvings: int = 64) -> Optional[Decomposition]:
    """Split a non-extreme game into two supermodular games off its ray.

    Returns ``None`` for extreme games.  The step ``epsilon`` is halved from 1
    until both ``(1-e) m + e t`` and ``(1+e) m - e t`` are supermodular.
    """
    verdict = is_extreme(m)
    if verdict.status is not Status.NOT_EXTREME or verdict.witness is None:
        return None
    s = standardize(m)
    t = witness_game(s, verdict.witness)
    eps = Fraction(1)
    for _ in range(max_halvings):
        left = (1 - eps) * s + eps * t
        right = (1 + eps) * s - eps * t
        if is_supermodular(left) and is_supermodular(right):
            return Decomposition(t, eps, left, right)
        eps /= 2
    raise RuntimeError("no admissible step found; the witness is not a valid direction")


def full_array_structure(m: Game) -> CoreStructure:
    s = standardize(m)
    return core_structure(s, payoff_array(s))


def pruned_array(m: Game) -> PayoffArray:
    return core_vertices(standardize(m))
