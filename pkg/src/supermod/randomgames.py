"""Seeded random games for cross-checking the criteria."""

from __future__ import annotations

import itertools
import random
from typing import Iterator, Optional

from .catalog import NAMED, default_labels
from .gamecore import Game, VariableSet, is_supermodular, modular_game, popcount, standardize


def unanimity(ground: VariableSet, t: int) -> Game:
    return Game.from_function(ground, lambda s: 1 if s & t == t else 0)


def threshold(ground: VariableSet, t: int, k: int) -> Game:
    """``max(|S & T| - k, 0)``: a convex function of a count, hence supermodular."""
    return Game.from_function(ground, lambda s: max(popcount(s & t) - k, 0))


def candidate_pool(n: int) -> list[Game]:
    """Standardized supermodular building blocks on ``n`` variables, deduplicated."""
    ground = VariableSet(default_labels(n))
    pool: dict[tuple, Game] = {}

    def add(g: Game) -> None:
        g = standardize(g)
        if not g.is_zero() and is_supermodular(g):
            pool.setdefault(g.values, g)

    for t in range(1 << n):
        if popcount(t) >= 2:
            add(unanimity(ground, t))
            for k in range(1, popcount(t)):
                add(threshold(ground, t, k))
    for make in NAMED.values():
        g = make()
        if g.n != n:
            continue
        for order in itertools.permutations(range(n)):
            add(Game(ground, g.permuted(order).values))
    return list(pool.values())


def random_supermodular(
    n: int, rng: random.Random, pool: Optional[list[Game]] = None, modular: bool = True
) -> Game:
    """Non-negative integer combination of a few pool games plus an optional modular part."""
    pool = pool or candidate_pool(n)
    ground = pool[0].ground
    terms = rng.choice((1, 1, 2, 2, 3, 4))
    g = Game.zero(ground)
    for base in rng.sample(pool, min(terms, len(pool))):
        g = g + rng.randint(1, 3) * base
    if modular:
        g = g + modular_game(ground, [rng.randint(-2, 2) for _ in range(n)])
    return g


def random_game(n: int, rng: random.Random, low: int = -3, high: int = 6) -> Game:
    """Uniform integer values on non-empty sets; rarely supermodular for ``n >= 3``."""
    ground = VariableSet(default_labels(n))
    vals = (0,) + tuple(rng.randint(low, high) for _ in range((1 << n) - 1))
    return Game(ground, vals)


def mixed_games(count: int, seed: int, sizes=(2, 3, 4)) -> Iterator[Game]:
    """Half supermodular, half arbitrary, over the given ground-set sizes."""
    rng = random.Random(seed)
    pools = {n: candidate_pool(n) for n in sizes}
    for k in range(count):
        n = rng.choice(sizes)
        if k % 2 == 0:
            yield random_supermodular(n, rng, pools[n])
        else:
            yield random_game(n, rng)


def supermodular_games(count: int, seed: int, n=4) -> Iterator[Game]:
    """``n`` is a size or a tuple of sizes to draw from."""
    rng = random.Random(seed)
    sizes = (n,) if isinstance(n, int) else tuple(n)
    pools = {k: candidate_pool(k) for k in sizes}
    for _ in range(count):
        k = rng.choice(sizes) if len(sizes) > 1 else sizes[0]
        yield random_supermodular(k, rng, pools[k])


def small_integer_games(n: int, bound: int) -> Iterator[Game]:
    """All standardized integer games with values in ``0..bound`` on sets of size at least two."""
    ground = VariableSet(default_labels(n))
    big = [s for s in range(1 << n) if popcount(s) >= 2]
    for combo in itertools.product(range(bound + 1), repeat=len(big)):
        vals = [0] * (1 << n)
        for s, v in zip(big, combo):
            vals[s] = v
        yield Game(ground, tuple(vals))
