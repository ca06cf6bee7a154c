"""Independent tests of supermodularity, one per classical characterization.

Each predicate below is written from its own definition and shares no code
path with the others beyond basic set-function evaluation, so agreement
between them is a meaningful consistency check.
"""

from __future__ import annotations

from itertools import product

from .coregeo import (
    coalition_sum,
    enumerations,
    general_core_vertices,
    marginal_vector,
    min_representation_holds,
    payoff_array,
)
from .gamecore import Game, submasks


def pairwise_inequality(m: Game) -> bool:
    """``m(A | B) + m(A & B) >= m(A) + m(B)`` for all ``A, B``."""
    v = m.values
    size = 1 << m.n
    return all(v[a | b] + v[a & b] >= v[a] + v[b] for a in range(size) for b in range(size))


def increasing_single_gains(m: Game) -> bool:
    """Gain from adding ``i`` grows along nested ``A <= B`` not containing ``i``."""
    v = m.values
    full = m.full
    for i in range(m.n):
        bit = 1 << i
        rest = full & ~bit
        for b in submasks(rest):
            gain_b = v[b | bit] - v[b]
            for a in submasks(b):
                if v[a | bit] - v[a] > gain_b:
                    return False
    return True


def local_gains(m: Game) -> bool:
    """The single-step version: ``B = A + j`` only."""
    v = m.values
    n = m.n
    for i, j in product(range(n), repeat=2):
        if i == j:
            continue
        bi, bj = 1 << i, 1 << j
        for a in submasks(m.full & ~(bi | bj)):
            if v[a | bi] - v[a] > v[a | bi | bj] - v[a | bj]:
                return False
    return True


def marginals_in_core(m: Game) -> bool:
    """Every marginal vector satisfies all coalition lower bounds (efficiency is automatic)."""
    v = m.values
    for order in enumerations(m.n):
        x = marginal_vector(m, order)
        if any(coalition_sum(x, s) < v[s] for s in range(1 << m.n)):
            return False
    return True


def tightness_lattices(m: Game) -> bool:
    """Core non-empty and each vertex's tight sets are closed under union and intersection.

    A point's tight sets are the intersection of those of the vertices of its
    minimal face, and an intersection of lattices of sets is again one, so
    vertices suffice.
    """
    verts = general_core_vertices(m)
    if not len(verts):
        return False
    v = m.values
    for x in verts.vectors:
        tight = [s for s in range(1 << m.n) if coalition_sum(x, s) == v[s]]
        tset = set(tight)
        for s in tight:
            for t in tight:
                if (s | t) not in tset or (s & t) not in tset:
                    return False
    return True


def core_equals_weber(m: Game) -> bool:
    """Core and Weber set share the same vertex set.

    Distinct marginal vectors are compared with the core vertices found by
    square-subsystem enumeration.  Equal vertex sets give equal polytopes; if
    the polytopes agree the game is supermodular and every distinct marginal
    vector is a vertex, so the comparison is exact.
    """
    verts = general_core_vertices(m)
    if not len(verts):
        return False
    return verts.distinct() == payoff_array(m).distinct()


def marginal_min_representation(m: Game) -> bool:
    """``m(S)`` is the minimum over marginal vectors of their sum on ``S``."""
    return min_representation_holds(m, payoff_array(m))


PREDICATES = {
    "i": pairwise_inequality,
    "iii": increasing_single_gains,
    "iv": local_gains,
    "vii": marginals_in_core,
    "ix": tightness_lattices,
    "x": core_equals_weber,
    "xi": marginal_min_representation,
}


def evaluate_all(m: Game) -> dict[str, bool]:
    return {key: f(m) for key, f in PREDICATES.items()}
