import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import supermodular
from supermod import altcriteria as alt
from supermod.catalog import cardinality, convex_measure, named, permutohedron
from supermod.errors import (
    AlphaOutOfRange,
    CanonicityViolated,
    Negative,
    NotAdditive,
    NotApplicable,
    NotMatroidRank,
    NotStandardized,
    NotSupermodular,
)
from supermod.extremality import Status, is_extreme
from supermod.gamecore import Game, is_supermodular, modular_game, standardize, to_rank_ci
from supermod.randomgames import small_integer_games

F = Fraction


class TestMaxRepresentation:
    def test_preconditions(self):
        with pytest.raises(NotSupermodular):
            alt.rw_canonical_representation(named("exact-nonconvex"))
        with pytest.raises(NotStandardized):
            alt.rw_canonical_representation(named("squares"))
        # standardized supermodular games are monotone, so only a supermodular
        # game with a negative value on a large set and zero singletons remains
        negative = Game(cardinality(2).ground, (0, 0, 0, F(-1)))
        assert not is_supermodular(negative)
        with pytest.raises(NotSupermodular):
            alt.rw_canonical_representation(negative)

    def test_negative_game_is_refused(self, monkeypatch):
        m = named("simplex")
        monkeypatch.setattr(alt, "is_supermodular", lambda g: True)
        with pytest.raises(Negative):
            alt.rw_canonical_representation(-m)

    def test_simplex(self):
        rep = alt.rw_canonical_representation(named("simplex"))
        assert len(rep) == 2
        assert alt.rw_nondegenerate(named("simplex"))

    def test_squares_is_degenerate(self):
        assert not alt.rw_nondegenerate(standardize(named("squares")))

    def test_zero_game(self):
        z = Game.zero(("a", "b", "c"))
        rep = alt.rw_canonical_representation(z)
        assert len(rep) == 1
        assert alt.rw_kernel_dimension(rep) == 0
        assert not alt.rw_nondegenerate(z)

    def test_tuft(self):
        assert alt.tuft(0b101) == {0b101, 0b100, 0b001}
        assert alt.tuft(0) == {0}

    @given(supermodular(max_n=4))
    @settings(max_examples=60)
    def test_representation_properties(self, m):
        s = standardize(m)
        rep = alt.rw_canonical_representation(s)
        assert all(rep.value(x) == s.values[x] for x in range(1 << s.n))
        assert all(f(x) <= s.values[x] for f in rep.functions for x in range(1 << s.n))
        assert alt.rw_conditions(rep) == (True, True, True)

    @given(supermodular(max_n=4))
    @settings(max_examples=60)
    def test_agrees_with_core_criterion(self, m):
        s = standardize(m)
        if s.is_zero():
            return
        assert alt.rw_nondegenerate(s) == is_extreme(s).is_extreme


class TestConvexMeasure:
    def test_uniform_two_variables(self):
        mu = modular_game(("a", "b"), [F(1, 2), F(1, 2)])
        assert alt.convex_measure_game(mu, F(1, 2)) == Game(mu.ground, (0, 0, 0, 1))
        assert alt.convex_measure_tight_sets(mu, F(1, 2)) == [0b01, 0b10]
        assert alt.convex_measure_extreme(mu, F(1, 2))

    def test_empty_tight_class(self):
        mu = modular_game(("a", "b", "c"), [F(1, 3)] * 3)
        assert alt.convex_measure_tight_sets(mu, F(1, 2)) == []
        assert not alt.convex_measure_extreme(mu, F(1, 2))
        assert is_extreme(alt.convex_measure_game(mu, F(1, 2))).status is Status.NOT_EXTREME

    @pytest.mark.parametrize(
        "weights, alpha, error",
        [
            ([F(1, 2), F(1, 2)], 1, AlphaOutOfRange),
            ([F(1, 2), F(1, 2)], 0, AlphaOutOfRange),
            ([F(3, 4), F(1, 4)], F(1, 2), CanonicityViolated),
            ([F(1, 2), F(1, 4)], F(1, 4), NotAdditive),
            ([F(3, 2), F(-1, 2)], F(1, 4), NotAdditive),
        ],
    )
    def test_preconditions(self, weights, alpha, error):
        mu = modular_game(("a", "b"), weights)
        with pytest.raises(error):
            alt.convex_measure_game(mu, alpha)

    def test_non_additive_measure(self):
        with pytest.raises(NotAdditive):
            alt.convex_measure_game(named("simplex") / 2, F(1, 4))

    def test_parameter_recovery(self):
        mu, alpha = alt.convex_measure_parameters(named("measure"))
        assert alpha == F(3, 5)
        assert [mu.values[1 << i] for i in range(4)] == [F(2, 5), F(1, 5), F(1, 5), F(1, 5)]
        mu, alpha = alt.convex_measure_parameters(standardize(named("squares")))
        assert alpha == F(1, 2) and alt.convex_measure_tight_sets(mu, alpha) == []
        assert alt.convex_measure_parameters(permutohedron(4)) is None
        assert alt.convex_measure_parameters(Game.zero(("a", "b"))) is None

    @given(
        st.lists(st.integers(1, 5), min_size=2, max_size=5),
        st.fractions(min_value=F(1, 20), max_value=F(19, 20), max_denominator=20),
    )
    @settings(max_examples=80)
    def test_measure_games(self, weights, alpha):
        total = sum(weights)
        if max(weights) > (1 - alpha) * total:
            return
        m = convex_measure(weights, alpha)
        assert is_supermodular(m)
        mu, got = alt.convex_measure_parameters(m)
        assert got == alpha
        assert alt.convex_measure_game(mu, got) == m
        # the measure test speaks about non-negative games with m(N) = 1; it
        # matches the cone criterion once the game is standardized
        s = standardize(m)
        params = alt.convex_measure_parameters(s)
        if params is not None and alt.convex_measure_tight_sets(*params):
            assert alt.convex_measure_extreme(*params) == is_extreme(s).is_extreme
        if s == m and alt.convex_measure_tight_sets(mu, alpha):
            assert alt.convex_measure_extreme(mu, alpha) == is_extreme(m).is_extreme

    def test_non_standardized_measure_game(self):
        # m = s + (1/3) x_e: decomposable among non-negative games, while s is extreme
        mu = modular_game("abcde", [F(1, 7)] * 4 + [F(3, 7)])
        m = alt.convex_measure_game(mu, F(1, 7))
        assert not alt.convex_measure_extreme(mu, F(1, 7))
        s = standardize(m)
        assert is_extreme(m).is_extreme
        smu, salpha = alt.convex_measure_parameters(s)
        assert salpha == F(1, 5)
        assert alt.convex_measure_extreme(smu, salpha)


class TestMatroidCriterion:
    def test_bases(self):
        r = named("loop-matroid-rank")
        mb = alt.matroid_bases(r)
        assert mb.named(r.ground) == ["a", "b"]
        assert mb.support == 0b011
        with pytest.raises(NotMatroidRank):
            alt.matroid_bases(named("squares"))

    def test_examples(self):
        for key in ("matroid", "loop-matroid", "simplex"):
            for route in ("core", "rank_ci", "rank_dual"):
                assert alt.nguyen_extreme(named(key), route)

    def test_not_applicable(self):
        with pytest.raises(NotApplicable):
            alt.nguyen_extreme(standardize(named("squares")))
        with pytest.raises(NotApplicable):
            alt.nguyen_extreme(Game.zero(("a", "b", "c")))
        with pytest.raises(ValueError):
            alt.nguyen_extreme(named("simplex"), route="other")

    def test_gate(self):
        assert alt.zero_one_gate(named("matroid"))
        assert not alt.zero_one_gate(named("simplex") / 2)

    def test_routes_agree_with_core_criterion(self):
        checked = 0
        pool = itertools.chain(small_integer_games(3, 2), small_integer_games(4, 1))
        for m in pool:
            if m.is_zero() or not is_supermodular(m) or not alt.zero_one_gate(m):
                continue
            verdicts = {alt.nguyen_extreme(m, r) for r in ("core", "rank_ci", "rank_dual")}
            assert verdicts == {is_extreme(m).is_extreme}
            rank = to_rank_ci(m)
            assert alt.matroid_bases(rank).support == alt.support(m)
            checked += 1
        assert checked >= 10
