"""Set functions on a finite variable set, stored exactly.

Subsets are integer bitmasks; bit ``i`` stands for the ``i``-th label of the
:class:`VariableSet`.  Values are :class:`fractions.Fraction` throughout.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Union

from .errors import (
    DuplicateSubset,
    GameInputError,
    InvalidTriplet,
    NonzeroEmptySet,
    NotRankStandardized,
    NotStandardized,
    UnknownLabel,
)

MIN_VARIABLES = 2
DEFAULT_MAX_VARIABLES = 12

ZERO = Fraction(0)

SubsetLike = Union[int, str, Iterable[str]]


def max_variables() -> int:
    """Hard cap on the number of variables (``SUPERMOD_MAX_N`` overrides it)."""
    raw = os.environ.get("SUPERMOD_MAX_N")
    if raw is None:
        return DEFAULT_MAX_VARIABLES
    try:
        value = int(raw)
    except ValueError:
        raise GameInputError(f"SUPERMOD_MAX_N must be an integer, got {raw!r}") from None
    return max(value, MIN_VARIABLES)


def to_fraction(value) -> Fraction:
    """Convert an exact scalar (int, Fraction, or ``"p/q"`` string) to Fraction.

    Floats are refused: they would silently smuggle rounding error into an
    exact computation.
    """
    if isinstance(value, bool):
        raise GameInputError(f"not a rational value: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise GameInputError(f"not a rational value: {value!r}") from None
    raise GameInputError(f"not an exact rational value: {value!r}")


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> Iterator[int]:
    """Positions of the set bits of ``mask``, ascending."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask`` (including ``mask`` and 0), descending."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class VariableSet:
    """Ordered, distinct variable labels; the order fixes bit positions."""

    labels: tuple[str, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        cap = max_variables()
        if not MIN_VARIABLES <= len(labels) <= cap:
            raise GameInputError(
                f"need between {MIN_VARIABLES} and {cap} variables, got {len(labels)}"
            )
        for label in labels:
            if not isinstance(label, str) or not label.strip():
                raise GameInputError(f"variable labels must be non-empty strings: {label!r}")
            if "," in label:
                raise GameInputError(f"variable labels may not contain commas: {label!r}")
        if len(set(labels)) != len(labels):
            raise GameInputError(f"variable labels must be distinct: {labels}")

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << len(self.labels)) - 1

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownLabel(f"unknown variable {label!r}; known: {', '.join(self.labels)}") from None

    def position(self, var: int | str) -> int:
        if isinstance(var, str):
            return self.index(var)
        if not 0 <= var < self.n:
            raise UnknownLabel(f"variable position {var} out of range")
        return var

    def mask(self, subset: SubsetLike) -> int:
        """Bitmask of a subset given as a mask, ``"a,b"`` string or label iterable."""
        if isinstance(subset, int):
            if not 0 <= subset <= self.full:
                raise GameInputError(f"subset mask {subset} out of range")
            return subset
        if isinstance(subset, str):
            parts = [p.strip() for p in subset.split(",")] if subset.strip() else []
        else:
            parts = list(subset)
        mask = 0
        for label in parts:
            bit = 1 << self.index(label)
            if mask & bit:
                raise GameInputError(f"label {label!r} repeated in subset {subset!r}")
            mask |= bit
        return mask

    def names(self, mask: int) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in bits(mask))

    def format(self, mask: int, sep: str = ",") -> str:
        return sep.join(self.names(mask))

    def subsets(self) -> range:
        return range(1 << self.n)


def as_ground(ground: VariableSet | Sequence[str]) -> VariableSet:
    return ground if isinstance(ground, VariableSet) else VariableSet(tuple(ground))


@dataclass(frozen=True, eq=True)
class Game:
    """A set function with ``m(emptyset) = 0`` and exact rational values.

    ``values[S]`` is the value at subset mask ``S``.
    """

    ground: VariableSet
    values: tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(to_fraction(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if len(values) != 1 << self.ground.n:
            raise GameInputError(
                f"expected {1 << self.ground.n} values for {self.ground.n} variables, got {len(values)}"
            )
        if values[0] != 0:
            raise NonzeroEmptySet(f"value of the empty set must be 0, got {values[0]}")

    # -- construction ---------------------------------------------------
    @classmethod
    def zero(cls, ground: VariableSet | Sequence[str]) -> "Game":
        ground = as_ground(ground)
        return cls(ground, (ZERO,) * (1 << ground.n))

    @classmethod
    def from_function(cls, ground: VariableSet | Sequence[str], f: Callable[[int], object]) -> "Game":
        ground = as_ground(ground)
        return cls(ground, tuple(f(s) for s in ground.subsets()))

    # -- access ---------------------------------------------------------
    @property
    def n(self) -> int:
        return self.ground.n

    @property
    def full(self) -> int:
        return self.ground.full

    @property
    def labels(self) -> tuple[str, ...]:
        return self.ground.labels

    def __getitem__(self, subset: SubsetLike) -> Fraction:
        if isinstance(subset, int):
            return self.values[subset]
        return self.values[self.ground.mask(subset)]

    def items(self) -> Iterator[tuple[int, Fraction]]:
        return enumerate(self.values)

    def nonzero(self) -> dict[int, Fraction]:
        return {s: v for s, v in enumerate(self.values) if v != 0}

    def is_zero(self) -> bool:
        return not any(self.values)

    def is_integer_valued(self) -> bool:
        return all(v.denominator == 1 for v in self.values)

    # -- linear structure ----------------------------------------------
    def _check_same_ground(self, other: "Game") -> None:
        if self.ground != other.ground:
            raise GameInputError("games live on different variable sets")

    def __add__(self, other: "Game") -> "Game":
        if not isinstance(other, Game):
            return NotImplemented
        self._check_same_ground(other)
        return Game(self.ground, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "Game") -> "Game":
        if not isinstance(other, Game):
            return NotImplemented
        self._check_same_ground(other)
        return Game(self.ground, tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "Game":
        return Game(self.ground, tuple(-a for a in self.values))

    def __mul__(self, scalar) -> "Game":
        if isinstance(scalar, Game):
            return NotImplemented
        q = to_fraction(scalar)
        return Game(self.ground, tuple(q * a for a in self.values))

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "Game":
        q = to_fraction(scalar)
        return Game(self.ground, tuple(a / q for a in self.values))

    def permuted(self, order: Sequence[int]) -> "Game":
        """Rename variables: the variable at position ``i`` moves to ``order[i]``."""
        n = self.n
        if sorted(order) != list(range(n)):
            raise GameInputError(f"not a permutation of positions: {order}")
        new = [ZERO] * (1 << n)
        for s, v in enumerate(self.values):
            t = 0
            for i in bits(s):
                t |= 1 << order[i]
            new[t] = v
        return Game(self.ground, tuple(new))

    def __repr__(self) -> str:
        terms = [f"{v}*d[{self.ground.format(s, '')}]" for s, v in self.nonzero().items()]
        body = " + ".join(terms) if terms else "0"
        return f"Game({','.join(self.labels)}: {body})"


def make_game(ground: VariableSet | Sequence[str], entries: Mapping[SubsetLike, object]) -> Game:
    """Build a game from sparse ``subset -> value`` entries; missing subsets are 0.

    Subset keys may be ``"a,b"`` strings or iterables of labels.  Two keys that
    denote the same subset raise :class:`DuplicateSubset`.
    """
    ground = as_ground(ground)
    values = [ZERO] * (1 << ground.n)
    seen: set[int] = set()
    for key, raw in entries.items():
        if isinstance(key, int):
            raise GameInputError("subset keys must be label strings or label collections")
        mask = ground.mask(key)
        if mask in seen:
            raise DuplicateSubset(f"subset {{{ground.format(mask)}}} listed twice")
        seen.add(mask)
        value = to_fraction(raw)
        if mask == 0 and value != 0:
            raise NonzeroEmptySet(f"value of the empty set must be 0, got {value}")
        values[mask] = value
    return Game(ground, tuple(values))


def modular_game(ground: VariableSet | Sequence[str], weights: Sequence) -> Game:
    """The additive game ``S -> sum of weights[i] for i in S``."""
    ground = as_ground(ground)
    w = [to_fraction(x) for x in weights]
    if len(w) != ground.n:
        raise GameInputError(f"need {ground.n} weights, got {len(w)}")
    return Game.from_function(ground, lambda s: sum((w[i] for i in bits(s)), ZERO))


# -- Moebius inversion -------------------------------------------------------

@dataclass(frozen=True)
class MobiusCoefficients:
    ground: VariableSet
    coeffs: tuple[Fraction, ...]

    def __getitem__(self, subset: SubsetLike) -> Fraction:
        if isinstance(subset, int):
            return self.coeffs[subset]
        return self.coeffs[self.ground.mask(subset)]

    def zeta(self) -> Game:
        """Subset-sum transform; inverts :func:`mobius`."""
        return Game(self.ground, tuple(zeta_transform(self.coeffs, self.ground.n)))


def zeta_transform(values: Sequence[Fraction], n: int) -> list[Fraction]:
    out = list(values)
    for i in range(n):
        bit = 1 << i
        for s in range(1 << n):
            if s & bit:
                out[s] += out[s ^ bit]
    return out


def mobius_transform(values: Sequence[Fraction], n: int) -> list[Fraction]:
    out = list(values)
    for i in range(n):
        bit = 1 << i
        for s in range(1 << n):
            if s & bit:
                out[s] -= out[s ^ bit]
    return out


def mobius(m: Game) -> MobiusCoefficients:
    """Moebius inversion ``A -> sum_{B <= A} (-1)^{|A\\B|} m(B)`` in O(n 2^n)."""
    return MobiusCoefficients(m.ground, tuple(mobius_transform(m.values, m.n)))


# -- elementary differences ---------------------------------------------------

def triplet_masks(n: int) -> Iterator[tuple[int, int, int]]:
    """All ``(a, b, Z)`` with ``a < b`` positions and ``Z`` avoiding both.

    Order: by ``(a, b)`` lexicographically, then ``Z`` ascending.
    """
    full = (1 << n) - 1
    for a in range(n):
        for b in range(a + 1, n):
            rest = full & ~((1 << a) | (1 << b))
            for z in sorted(submasks(rest)):
                yield a, b, z


def delta_masks(values: Sequence[Fraction], a: int, b: int, z: int) -> Fraction:
    ba, bb = 1 << a, 1 << b
    return values[z | ba | bb] + values[z] - values[z | ba] - values[z | bb]


def delta(m: Game, a: int | str, b: int | str, z: SubsetLike = 0) -> Fraction:
    """``m(abZ) + m(Z) - m(aZ) - m(bZ)`` for distinct ``a, b`` outside ``Z``."""
    ground = m.ground
    pa, pb = ground.position(a), ground.position(b)
    zm = ground.mask(z)
    if pa == pb:
        raise InvalidTriplet("the two variables of a triplet must differ")
    if zm & ((1 << pa) | (1 << pb)):
        raise InvalidTriplet("the conditioning set must avoid both variables")
    return delta_masks(m.values, pa, pb, zm)


def is_supermodular(m: Game) -> bool:
    """All elementary differences are non-negative."""
    vals = m.values
    return all(delta_masks(vals, a, b, z) >= 0 for a, b, z in triplet_masks(m.n))


def is_submodular(m: Game) -> bool:
    vals = m.values
    return all(delta_masks(vals, a, b, z) <= 0 for a, b, z in triplet_masks(m.n))


def is_modular(m: Game) -> bool:
    vals = m.values
    return all(delta_masks(vals, a, b, z) == 0 for a, b, z in triplet_masks(m.n))


def is_standardized(m: Game) -> bool:
    return all(m.values[1 << i] == 0 for i in range(m.n))


def standardize(m: Game) -> Game:
    """Subtract the modular game through the singleton values."""
    singles = [m.values[1 << i] for i in range(m.n)]
    return Game(
        m.ground,
        tuple(v - sum((singles[i] for i in bits(s)), ZERO) for s, v in enumerate(m.values)),
    )


def support(m: Game) -> int:
    """Least ``M`` with ``m(S) = m(S & M)`` for all ``S``, as a mask."""
    vals = m.values
    out = 0
    for i in range(m.n):
        bit = 1 << i
        if any(vals[s | bit] != vals[s] for s in range(1 << m.n) if not s & bit):
            out |= bit
    return out


# -- dualities between standardized games and rank-like functions --------------

def _require_standardized(m: Game) -> None:
    if not is_standardized(m):
        raise NotStandardized("game has a nonzero singleton value; standardize it first")


def is_rank_standardized(r: Game) -> bool:
    """``r(N) = r(N minus i)`` for every variable ``i``."""
    full = r.full
    return all(r.values[full] == r.values[full & ~(1 << i)] for i in range(r.n))


def to_rank_ci(m: Game) -> Game:
    """Map a standardized game to its CI-preserving rank counterpart.

    ``r(T) = -m(T) + |T| m(N) - sum_{i in T} m(N - i)``.
    """
    _require_standardized(m)
    vals, full = m.values, m.full
    drop = [vals[full & ~(1 << i)] for i in range(m.n)]
    top = vals[full]
    return Game(
        m.ground,
        tuple(
            -vals[t] + popcount(t) * top - sum((drop[i] for i in bits(t)), ZERO)
            for t in range(1 << m.n)
        ),
    )


def from_rank_ci(r: Game) -> Game:
    """Inverse of :func:`to_rank_ci`: ``m(S) = -r(S) + sum_{i in S} r({i})``."""
    if not is_rank_standardized(r):
        raise NotRankStandardized("r(N) must equal r(N - i) for every variable i")
    singles = [r.values[1 << i] for i in range(r.n)]
    return Game(
        r.ground,
        tuple(-v + sum((singles[i] for i in bits(s)), ZERO) for s, v in enumerate(r.values)),
    )


def to_rank_dual(m: Game) -> Game:
    """``r*(T) = m(N) - m(N - T)`` for a standardized game."""
    _require_standardized(m)
    vals, full = m.values, m.full
    return Game(m.ground, tuple(vals[full] - vals[full & ~t] for t in range(1 << m.n)))


def from_rank_dual(r: Game) -> Game:
    """Inverse of :func:`to_rank_dual`: ``m(S) = r*(N) - r*(N - S)``."""
    if not is_rank_standardized(r):
        raise NotRankStandardized("r(N) must equal r(N - i) for every variable i")
    vals, full = r.values, r.full
    return Game(r.ground, tuple(vals[full] - vals[full & ~s] for s in range(1 << r.n)))


def rank_self_dual(r: Game) -> Game:
    """Involution ``r*(T) = r(N - T) - r(N) + sum_{i in T} r({i})``."""
    if not is_rank_standardized(r):
        raise NotRankStandardized("r(N) must equal r(N - i) for every variable i")
    vals, full = r.values, r.full
    singles = [vals[1 << i] for i in range(r.n)]
    return Game(
        r.ground,
        tuple(
            vals[full & ~t] - vals[full] + sum((singles[i] for i in bits(t)), ZERO)
            for t in range(1 << r.n)
        ),
    )


def is_matroid_rank(r: Game) -> bool:
    """Integer valued, non-decreasing, submodular, singletons at most 1."""
    vals = r.values
    if not r.is_integer_valued():
        return False
    if any(vals[1 << i] > 1 for i in range(r.n)):
        return False
    for s in range(1 << r.n):
        for i in range(r.n):
            bit = 1 << i
            if not s & bit and vals[s | bit] < vals[s]:
                return False
    return is_submodular(r)
