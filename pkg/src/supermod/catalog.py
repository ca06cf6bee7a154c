"""Named games and parametric families used by the CLI and the test-suite."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .errors import UnknownFamily
from .gamecore import Game, VariableSet, make_game, popcount, to_fraction

ABC = ("a", "b", "c")
ABCD = ("a", "b", "c", "d")


def default_labels(n: int) -> tuple[str, ...]:
    if n <= 26:
        return tuple(chr(ord("a") + i) for i in range(n))
    return tuple(f"x{i}" for i in range(n))


def cardinality(n: int, labels=None) -> Game:
    """``m(S) = |S| - 1`` on non-empty sets."""
    ground = VariableSet(tuple(labels or default_labels(n)))
    return Game.from_function(ground, lambda s: max(popcount(s) - 1, 0))


def permutohedron(n: int, labels=None) -> Game:
    """``m(S) = |S|(|S|-1)/2``; every elementary difference equals 1."""
    ground = VariableSet(tuple(labels or default_labels(n)))
    return Game.from_function(ground, lambda s: popcount(s) * (popcount(s) - 1) // 2)


def squared_index_sum(n: int = 3, labels=None) -> Game:
    """``t(S) = (sum of 1-based positions in S)^2``; supermodular, not standardized."""
    ground = VariableSet(tuple(labels or default_labels(n)))
    return Game.from_function(
        ground, lambda s: sum(i + 1 for i in range(n) if s >> i & 1) ** 2
    )


def exact_mixture(lam) -> Game:
    """``(1 - lam) * m0 + lam * m1`` for the two exact summands of the 13-vertex game."""
    lam = to_fraction(lam)
    m0 = make_game(ABCD, {"a,b,c,d": 2, "a,b,c": 1, "a,b,d": 1, "a,c,d": 1, "b,c,d": 1,
                          "a,c": 1, "b,c": 1, "b,d": 1})
    m1 = make_game(ABCD, {"a,b,c,d": 2, "a,b,c": 1, "a,b,d": 1, "a,c,d": 1, "b,c,d": 1,
                          "a,b": 1, "a,d": 1})
    return (1 - lam) * m0 + lam * m1


def _simplex() -> Game:
    return cardinality(3)


def _squares() -> Game:
    return squared_index_sum(3)


def _exact_nonconvex() -> Game:
    return make_game(ABCD, {"a,b,c,d": 4, "a,b,c": 3, "a,b,d": 2, "a,c,d": 2, "b,c,d": 2,
                            "a,b": 2, "a,c": 2, "b,c": 2})


def _thirteen() -> Game:
    return make_game(ABCD, {"a,b,c,d": 4, "a,b,c": 2, "a,b,d": 2, "a,c,d": 2, "b,c,d": 2,
                            "a,b": 1, "a,c": 1, "a,d": 1, "b,c": 1, "b,d": 1})


def _pairs() -> Game:
    return make_game(ABC, {"a,b,c": 2, "a,b": 1, "a,c": 1, "b,c": 1})


def _measure() -> Game:
    half = Fraction(1, 2)
    return make_game(ABCD, {"a,b,c,d": 1, "a,b,c": half, "a,b,d": half, "a,c,d": half})


def _matroid() -> Game:
    return make_game(ABCD, {"a,b,c,d": 2, "a,b,c": 1, "a,b,d": 1, "a,c,d": 1, "b,c,d": 1,
                            "a,b": 1})


def _loop_matroid_rank() -> Game:
    """Matroid rank on {a,b,c} with bases {a} and {b}."""
    return make_game(ABC, {"a,b,c": 1, "a,b": 1, "a,c": 1, "b,c": 1, "a": 1, "b": 1})


def _loop_matroid() -> Game:
    # standardized game whose CI-preserving rank counterpart is the rank above
    from .gamecore import from_rank_ci

    return from_rank_ci(_loop_matroid_rank())


def _split_sum() -> Game:
    return make_game(ABCD, {"a,b,c,d": 2, "a,b,c": 1, "b,c,d": 1})


NAMED: dict[str, Callable[[], Game]] = {
    "simplex": _simplex,
    "squares": _squares,
    "exact-nonconvex": _exact_nonconvex,
    "thirteen": _thirteen,
    "pairs": _pairs,
    "measure": _measure,
    "matroid": _matroid,
    "loop-matroid": _loop_matroid,
    "loop-matroid-rank": _loop_matroid_rank,
    "split-sum": _split_sum,
}


def named(key: str) -> Game:
    key = key.strip().lower()
    if key not in NAMED:
        raise UnknownFamily(f"unknown named game {key!r}; choose from {', '.join(NAMED)}")
    return NAMED[key]()


def convex_measure(weights, alpha, labels=None) -> Game:
    from .altcriteria import convex_measure_game
    from .gamecore import modular_game

    w = [to_fraction(x) for x in weights]
    total = sum(w)
    ground = VariableSet(tuple(labels or default_labels(len(w))))
    mu = modular_game(ground, [x / total for x in w])
    return convex_measure_game(mu, alpha)


FAMILIES = ("cardinality", "permutohedron", "convex-measure", "example")


def generate(family: str, params: list[str]) -> Game:
    """Dispatch used by ``supermod generate``."""
    if family == "cardinality":
        return cardinality(int(params[0]))
    if family == "permutohedron":
        return permutohedron(int(params[0]))
    if family == "convex-measure":
        if len(params) < 2:
            raise UnknownFamily("convex-measure needs ALPHA then one weight per variable")
        return convex_measure(params[1:], params[0])
    if family == "example":
        if not params:
            raise UnknownFamily(f"{family} needs an id; choose from {', '.join(NAMED)}")
        return named(params[0])
    raise UnknownFamily(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
