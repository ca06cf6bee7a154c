"""Hypothesis strategies and brute-force reference implementations shared by the tests."""

import itertools
import random
from fractions import Fraction

from hypothesis import strategies as st

from supermod.catalog import default_labels
from supermod.gamecore import Game, VariableSet
from supermod.randomgames import candidate_pool, random_supermodular

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def games(draw, min_n=2, max_n=4, values=small_rationals):
    n = draw(st.integers(min_n, max_n))
    ground = VariableSet(default_labels(n))
    vals = [Fraction(0)] + [draw(values) for _ in range((1 << n) - 1)]
    return Game(ground, tuple(vals))


_POOLS: dict[int, list] = {}


@st.composite
def supermodular(draw, min_n=2, max_n=4, modular=True):
    n = draw(st.integers(min_n, max_n))
    pool = _POOLS.setdefault(n, candidate_pool(n))
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    return random_supermodular(n, rng, pool, modular=modular)


def brute_mobius(m: Game) -> list[Fraction]:
    return [
        sum(((-1) ** bin(s & ~t).count("1") * m.values[t] for t in range(s + 1) if t & s == t), Fraction(0))
        for s in range(1 << m.n)
    ]


def brute_support(m: Game) -> int:
    best = m.full
    for cand in range(1 << m.n):
        if bin(cand).count("1") < bin(best).count("1") and all(
            m.values[s] == m.values[s & cand] for s in range(1 << m.n)
        ):
            best = cand
    return best


def all_orders(n):
    return list(itertools.permutations(range(n)))
