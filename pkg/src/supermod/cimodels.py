"""Conditional-independence models induced by supermodular games."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, NamedTuple

from .errors import GameInputError, NotDisjoint, NotSupermodular
from .gamecore import (
    Game,
    VariableSet,
    delta_masks,
    is_supermodular,
    submasks,
    triplet_masks,
)


class ElementaryTriplet(NamedTuple):
    a: int
    b: int
    z: int

    def format(self, ground: VariableSet) -> str:
        cond = ",".join(ground.names(self.z))
        return f"{ground.labels[self.a]} ⊥ {ground.labels[self.b]} | {cond}"


def canonical_triplet(a: int, b: int, z: int) -> ElementaryTriplet:
    if a == b or (z >> a & 1) or (z >> b & 1):
        raise NotDisjoint("a triplet needs two distinct variables outside the conditioning set")
    return ElementaryTriplet(min(a, b), max(a, b), z)


def all_triplets(n: int) -> list[ElementaryTriplet]:
    return [ElementaryTriplet(*t) for t in triplet_masks(n)]


def triplet_count(n: int) -> int:
    return comb(n, 2) * 2 ** (n - 2)


# games are immutable and hashable; repeated CI queries on one game are common
_is_supermodular = lru_cache(maxsize=64)(is_supermodular)


def _require_supermodular(*games: Game) -> None:
    for m in games:
        if not _is_supermodular(m):
            raise NotSupermodular("CI models are defined for supermodular games")


def dependence(m: Game, x: int, y: int, z: int) -> object:
    """``m(XYZ) + m(Z) - m(XZ) - m(YZ)`` for disjoint masks."""
    v = m.values
    return v[x | y | z] + v[z] - v[x | z] - v[y | z]


def ci_holds(m: Game, x, y, z) -> bool:
    """``X`` is independent of ``Y`` given ``Z`` under ``m``."""
    x, y, z = (m.ground.mask(s) for s in (x, y, z))
    if x & y or x & z or y & z:
        raise NotDisjoint("X, Y and Z must be pairwise disjoint")
    _require_supermodular(m)
    return dependence(m, x, y, z) == 0


@dataclass(frozen=True)
class CIModel:
    ground: VariableSet
    triplets: frozenset[ElementaryTriplet]

    def __len__(self) -> int:
        return len(self.triplets)

    def __contains__(self, t) -> bool:
        return t in self.triplets

    def sorted(self) -> list[ElementaryTriplet]:
        return sorted(self.triplets, key=lambda t: (t.a, t.b, bin(t.z).count("1"), t.z))

    def to_text(self) -> str:
        return "".join(t.format(self.ground) + "\n" for t in self.sorted())

    @classmethod
    def from_text(cls, ground: VariableSet, text: str) -> "CIModel":
        out = set()
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line:
                continue
            try:
                left, cond = line.split("|", 1)
                a, b = (s.strip() for s in left.split("⊥"))
            except ValueError:
                raise GameInputError(f"line {lineno}: expected 'a ⊥ b | Z'") from None
            cond = cond.strip()
            z = ground.mask(cond) if cond else 0
            out.add(canonical_triplet(ground.index(a), ground.index(b), z))
        return cls(ground, frozenset(out))


def ci_model(m: Game) -> CIModel:
    """All elementary triplets on which the elementary difference vanishes."""
    _require_supermodular(m)
    v = m.values
    return CIModel(
        m.ground, frozenset(ElementaryTriplet(*t) for t in triplet_masks(m.n) if delta_masks(v, *t) == 0)
    )


def face_leq(m1: Game, m2: Game) -> bool:
    """The face generated by ``m1`` lies inside the face generated by ``m2``."""
    _require_supermodular(m1, m2)
    return ci_model(m1).triplets >= ci_model(m2).triplets


def equivalent(m1: Game, m2: Game) -> bool:
    _require_supermodular(m1, m2)
    return ci_model(m1).triplets == ci_model(m2).triplets


def is_coatom(m: Game) -> bool:
    """Whether ``I(m)`` is a co-atom among structural models; decided by extremality."""
    from .extremality import Status, is_extreme

    return is_extreme(m).status is Status.EXTREME


def coatom_by_models(m: Game, candidates: Iterable[Game]) -> bool:
    """Brute-force variant over a finite pool of supermodular games.

    ``I(m)`` is a co-atom in the pool if it is not complete and every candidate
    model strictly containing it is the complete model.  Only meaningful when
    the pool is rich enough to realize the models in between.
    """
    full = frozenset(all_triplets(m.n))
    own = ci_model(m).triplets
    if own == full:
        return False
    for g in candidates:
        other = ci_model(g).triplets
        if other > own and other != full:
            return False
    return True


def elementary_reduction(m: Game, x: int, y: int, z: int) -> bool:
    """``X`` independent of ``Y`` given ``Z`` via elementary statements only."""
    v = m.values
    for a in range(m.n):
        if not x >> a & 1:
            continue
        for b in range(m.n):
            if not y >> b & 1:
                continue
            rest = (x | y) & ~((1 << a) | (1 << b))
            for extra in submasks(rest):
                if delta_masks(v, min(a, b), max(a, b), z | extra) != 0:
                    return False
    return True
