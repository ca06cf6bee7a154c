"""Three older extremality tests, kept as independent cross-checks.

* the canonical max-representation by modular lower bounds and its
  non-degeneracy system;
* the two-parameter test for convex measure games;
* the matroid-basis test for games whose core vertices are all 0/1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .coregeo import core_vertices
from .errors import (
    AlphaOutOfRange,
    CanonicityViolated,
    Negative,
    NotAdditive,
    NotApplicable,
    NotMatroidRank,
    NotStandardized,
    NotSupermodular,
)
from .gamecore import (
    ZERO,
    Game,
    bits,
    is_matroid_rank,
    is_modular,
    is_standardized,
    is_supermodular,
    popcount,
    support,
    to_fraction,
    to_rank_ci,
    to_rank_dual,
)
from .linalg import echelon


@dataclass(frozen=True)
class ModularFunction:
    """``l(S) = -constant + sum of weights over S`` with tightness data against a game."""

    index: int
    constant: Fraction
    weights: tuple[Fraction, ...]
    carrier: int
    tight: frozenset[int]
    tight_zero: frozenset[int]

    def __call__(self, mask: int) -> Fraction:
        return sum((self.weights[i] for i in bits(mask)), ZERO) - self.constant

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return (self.constant,) + self.weights


@dataclass(frozen=True)
class ModularRep:
    game: Game
    functions: tuple[ModularFunction, ...]

    def __len__(self) -> int:
        return len(self.functions)

    def value(self, mask: int) -> Fraction:
        return max(f(mask) for f in self.functions)

    def to_dict(self) -> list[dict]:
        g = self.game.ground
        return [
            {
                "index": list(g.names(f.index)),
                "constant": str(f.constant),
                "weights": [str(w) for w in f.weights],
                "tight": [g.format(s) for s in sorted(f.tight, key=lambda s: (popcount(s), s))],
            }
            for f in self.functions
        ]


def _require_rw_domain(m: Game) -> None:
    if not is_supermodular(m):
        raise NotSupermodular("the max-representation needs a supermodular game")
    if not is_standardized(m):
        raise NotStandardized("the max-representation is built for standardized games")
    if any(v < 0 for v in m.values):
        raise Negative("the max-representation needs a non-negative game")


def _modular_at(m: Game, t: int) -> tuple[Fraction, tuple[Fraction, ...]]:
    vals = m.values
    weights = tuple(vals[t] - vals[t & ~(1 << i)] if t >> i & 1 else ZERO for i in range(m.n))
    constant = sum(weights, ZERO) - vals[t]
    return constant, weights


def _with_tightness(m: Game, t: int, constant, weights) -> ModularFunction:
    carrier = sum(1 << i for i, w in enumerate(weights) if w > 0)
    tight, tight_zero = set(), set()
    for s in range(1 << m.n):
        val = sum((weights[i] for i in bits(s)), ZERO) - constant
        if val == m.values[s]:
            tight.add(s)
            if val == 0:
                tight_zero.add(s)
    return ModularFunction(t, constant, weights, carrier, frozenset(tight), frozenset(tight_zero))


def rw_candidates(m: Game) -> list[ModularFunction]:
    """One modular lower bound per subset, duplicates removed (smallest index kept)."""
    seen: dict[tuple, ModularFunction] = {}
    for t in range(1 << m.n):
        constant, weights = _modular_at(m, t)
        key = (constant,) + weights
        if key not in seen:
            seen[key] = _with_tightness(m, t, constant, weights)
    return list(seen.values())


def rw_canonical_representation(m: Game) -> ModularRep:
    """Canonical max-representation of a standardized supermodular game."""
    _require_rw_domain(m)
    cands = rw_candidates(m)
    kept = []
    for k, f in enumerate(cands):
        dominated = False
        for j, g in enumerate(cands):
            if j == k:
                continue
            if f.tight < g.tight or (f.tight == g.tight and j < k):
                dominated = True
                break
        if not dominated:
            kept.append(f)
    return ModularRep(m, tuple(kept))


def tuft(mask: int) -> set[int]:
    return {mask} | {mask & ~(1 << i) for i in bits(mask)}


def rw_conditions(rep: ModularRep) -> tuple[bool, bool, bool]:
    """Whether the three canonicity conditions hold for ``rep``."""
    n = rep.game.n
    fs = rep.functions
    first = all(tuft(f.carrier) <= f.tight for f in fs)
    second = all(any(tuft(s) <= f.tight for f in fs) for s in range(1 << n))
    third = all(not (f.tight <= g.tight) for f, g in itertools.permutations(fs, 2))
    return first, second, third


def _rw_rows(rep: ModularRep) -> list[dict[int, int]]:
    n = rep.game.n
    width = n + 1  # column 0 holds the constant term, 1..n the weights
    rows: list[dict[int, int]] = []
    fs = rep.functions

    def level(k: int, s: int) -> dict[int, int]:
        eq = {k * width: -1}
        for i in bits(s):
            eq[k * width + 1 + i] = 1
        return eq

    for k, f in enumerate(fs):
        for i in range(n):
            if not f.carrier >> i & 1:
                rows.append({k * width + 1 + i: 1})
    for k, p in itertools.combinations(range(len(fs)), 2):
        for s in sorted(fs[k].tight & fs[p].tight):
            eq = level(k, s)
            for j, v in level(p, s).items():
                eq[j] = eq.get(j, 0) - v
            rows.append({j: v for j, v in eq.items() if v})
    for k, f in enumerate(fs):
        for s in sorted(f.tight_zero):
            rows.append(level(k, s))
    return rows


def rw_kernel_dimension(rep: ModularRep) -> int:
    cols = len(rep.functions) * (rep.game.n + 1)
    return cols - echelon(_rw_rows(rep), cols).rank


def rw_nondegenerate(m: Game, rep: Optional[ModularRep] = None) -> bool:
    """Non-degeneracy of the canonical max-representation (kernel dimension one)."""
    rep = rep or rw_canonical_representation(m)
    return rw_kernel_dimension(rep) == 1


# convex measure games


def _check_measure(mu: Game, alpha) -> Fraction:
    alpha = to_fraction(alpha)
    if not is_modular(mu):
        raise NotAdditive("the measure must be additive")
    if any(v < 0 for v in mu.values) or mu.values[mu.full] != 1:
        raise NotAdditive("the measure must be non-negative with total mass 1")
    if not 0 < alpha < 1:
        raise AlphaOutOfRange(f"alpha must lie strictly between 0 and 1, got {alpha}")
    for i in range(mu.n):
        if mu.values[1 << i] > 1 - alpha:
            raise CanonicityViolated(
                f"mass of {mu.ground.labels[i]!r} exceeds 1 - alpha; the representation is not canonical"
            )
    return alpha


def convex_measure_game(mu: Game, alpha) -> Game:
    """``S -> max(mu(S) - alpha, 0) / (1 - alpha)``."""
    alpha = _check_measure(mu, alpha)
    return Game(mu.ground, tuple(max(v - alpha, ZERO) / (1 - alpha) for v in mu.values))


def convex_measure_tight_sets(mu: Game, alpha) -> list[int]:
    alpha = _check_measure(mu, alpha)
    return [s for s in range(1 << mu.n) if mu.values[s] == alpha]


def convex_measure_extreme(mu: Game, alpha) -> bool:
    """Whether the sets of measure exactly ``alpha`` force every solution of their sum equations to zero.

    The verdict concerns non-negative supermodular games with ``m(N) = 1``.  It
    coincides with the cone criterion only when every point mass is at most
    ``alpha``, i.e. when the game is standardized; otherwise recover the
    parameters of the standardized game first.
    """
    tight = convex_measure_tight_sets(mu, alpha)
    rows = [{i: 1 for i in bits(s)} for s in tight]
    return echelon(rows, mu.n).rank == mu.n


# matroids


@dataclass(frozen=True)
class MatroidBases:
    bases: frozenset[int]
    support: int

    def named(self, ground) -> list[str]:
        return sorted(ground.format(b) for b in self.bases)


def matroid_bases(r: Game) -> MatroidBases:
    """Sets ``B`` with ``r(B) = |B| = r(N)``, and their union."""
    if not is_matroid_rank(r):
        raise NotMatroidRank("not the rank function of a matroid")
    top = r.values[r.full]
    bases = frozenset(b for b in range(1 << r.n) if popcount(b) == top and r.values[b] == top)
    union = 0
    for b in bases:
        union |= b
    return MatroidBases(bases, union)


def zero_one_gate(m: Game) -> bool:
    """Arithmetic test for a 0/1 core: integer values and ``m(N) - m(N minus i) <= 1``."""
    if not m.is_integer_valued():
        return False
    top = m.values[m.full]
    return all(top - m.values[m.full & ~(1 << i)] <= 1 for i in range(m.n))


def _constants_only(vectors: list[tuple[int, ...]], positions: list[int]) -> bool:
    """Kernel of the pairwise-difference system restricted to ``positions`` is the constants."""
    col = {p: k for k, p in enumerate(positions)}
    rows = []
    base = vectors[0]
    # differences against one fixed vector span every pairwise difference
    for v in vectors[1:]:
        rows.append({col[i]: v[i] - base[i] for i in positions if v[i] != base[i]})
    return len(positions) - echelon(rows, len(positions)).rank == 1


def nguyen_extreme(m: Game, route: str = "core") -> bool:
    """Matroid-based extremality test, applicable when the core has 0/1 vertices.

    ``route`` selects how the 0/1 vectors are obtained: ``"core"`` uses the core
    vertices directly, ``"rank_ci"`` and ``"rank_dual"`` use the bases of the
    matroid rank function attached to ``m`` by the corresponding transform.
    """
    if not is_supermodular(m):
        raise NotSupermodular("the matroid criterion needs a supermodular game")
    if not is_standardized(m):
        raise NotStandardized("the matroid criterion needs a standardized game")
    if not zero_one_gate(m):
        raise NotApplicable("core vertices are not all 0/1")
    supp = support(m)
    if not supp:
        raise NotApplicable("the game has empty support")
    positions = list(bits(supp))
    if route == "core":
        vectors = [tuple(int(x) for x in v) for v in core_vertices(m).vectors]
    elif route in ("rank_ci", "rank_dual"):
        rank = to_rank_ci(m) if route == "rank_ci" else to_rank_dual(m)
        mb = matroid_bases(rank)
        vectors = [tuple(b >> i & 1 for i in range(m.n)) for b in sorted(mb.bases)]
    else:
        raise ValueError(f"unknown route {route!r}")
    return _constants_only(vectors, positions)


def convex_measure_parameters(m: Game) -> Optional[tuple[Game, Fraction]]:
    """Recover the canonical ``(mu, alpha)`` of ``m / m(N)``, or ``None`` if there is none.

    Under canonicity every ``N minus i`` has measure at least ``alpha``, so the
    drops ``m(N) - m(N minus i)`` are proportional to the point masses; their
    normalized sum fixes ``alpha``.  The candidate is accepted only if it
    rebuilds the game exactly.
    """
    top = m.values[m.full]
    if top <= 0:
        return None
    g = m / top
    drops = [g.values[g.full] - g.values[g.full & ~(1 << i)] for i in range(g.n)]
    total = sum(drops, ZERO)
    if total <= 1 or any(d < 0 for d in drops):
        return None
    alpha = 1 - 1 / total
    from .gamecore import modular_game

    mu = modular_game(g.ground, [d / total for d in drops])
    try:
        rebuilt = convex_measure_game(mu, alpha)
    except (NotAdditive, AlphaOutOfRange, CanonicityViolated):
        return None
    return (mu, alpha) if rebuilt == g else None
