"""Region bounds, threshold-equivalence intervals, and the brute-force sweep."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given

from threeway import (
    ApproximationSpace,
    Concept,
    DegenerateRegionsError,
    EmptinessCase,
    IdentityExpr,
    Interval,
    NonMonotoneExpressionError,
    RegionBounds,
    StepExpr,
    Thresholds,
    builtin,
    candidate_thresholds,
    check_bounds_ordering,
    coincides_with_pawlak,
    delta_regions,
    equivalent_threshold_intervals,
    linguistic_regions,
    pawlak_rough_set,
    probabilistic_regions,
    region_bounds,
    rough_set_from_tripartition,
    sweep_equivalence_oracle,
    verify_equivalence,
)

from conftest import block_union, community_instance
from test_expressions import MEDIUM_HUMP
from test_regions import spaces_with_concepts, threshold_pairs

TH_COMMUNITY = Thresholds(Fraction("0.8"), Fraction("0.2"))
TH_TWENTY = Thresholds(Fraction("0.7"), Fraction("0.3"))


class TestRegionBounds:
    def test_community_not_small(self, community):
        space, sport = community
        bounds = region_bounds(space, sport, builtin("not_small"), TH_COMMUNITY)
        assert bounds.as_tuple() == (
            Fraction(0), Fraction(1, 7), Fraction(1, 5), Fraction(2, 5),
        )

    def test_twenty_very_big(self, twenty):
        space, concept = twenty
        bounds = region_bounds(space, concept, builtin("very_big"), TH_TWENTY)
        assert bounds.as_tuple() == (
            Fraction(0), Fraction(9, 10), Fraction(9, 10), Fraction(1),
        )

    def test_thirty_negative_empty(self, thirty):
        space, concept = thirty
        bounds = region_bounds(space, concept, builtin("very_big"),
                               Thresholds(Fraction("0.8"), Fraction("0.4")))
        assert bounds.neg_max is None
        assert bounds.bnd_min == Fraction(9, 10)
        assert bounds.bnd_max == Fraction(9, 10)
        assert bounds.pos_min == Fraction(1)

    def test_crisp_cutoff_boundary_absent(self, twenty):
        space, concept = twenty
        bounds = region_bounds(space, concept, StepExpr(Fraction(1, 2)),
                               Thresholds(Fraction("0.7"), Fraction("0.2")))
        assert bounds.neg_max == Fraction(0)
        assert bounds.bnd_min is None
        assert bounds.bnd_max is None
        assert bounds.pos_min == Fraction(9, 10)

    def test_bounds_are_attained(self, community):
        space, sport = community
        bounds = region_bounds(space, sport, builtin("not_small"), TH_COMMUNITY)
        ratios = set(space.block_ratios(sport).values())
        for value in bounds.as_tuple():
            assert value in ratios


class TestBoundsOrdering:
    def test_golden_ordering(self, community):
        space, sport = community
        bounds = region_bounds(space, sport, builtin("not_small"), TH_COMMUNITY)
        assert check_bounds_ordering(bounds, expr_increasing=True)

    def test_all_zero_fails_strictness(self):
        zeros = RegionBounds(Fraction(0), Fraction(0), Fraction(0), Fraction(0))
        assert not check_bounds_ordering(zeros, expr_increasing=True)

    def test_missing_bound_rejected(self):
        partial = RegionBounds(Fraction(0), None, None, Fraction(1))
        with pytest.raises(ValueError, match="all four bounds"):
            check_bounds_ordering(partial, expr_increasing=True)

    def test_requires_increasing_flag(self, community):
        space, sport = community
        bounds = region_bounds(space, sport, builtin("not_small"), TH_COMMUNITY)
        with pytest.raises(ValueError, match="increasing"):
            check_bounds_ordering(bounds, expr_increasing=False)


class TestInterval:
    def test_endpoint_semantics(self):
        half_open = Interval(Fraction(1, 5), Fraction(2, 5), True, False)
        assert half_open.contains(Fraction(2, 5))
        assert not half_open.contains(Fraction(1, 5))
        assert half_open.contains(Fraction(3, 10))
        left_closed = Interval(Fraction(0), Fraction(1, 7), False, True)
        assert left_closed.contains(0)
        assert not left_closed.contains(Fraction(1, 7))

    def test_rendering(self):
        assert str(Interval(Fraction(1, 5), Fraction(2, 5), True, False)) == (
            "(1/5 ≈ 0.2, 2/5 ≈ 0.4]"
        )

    def test_out_of_order_rejected(self):
        with pytest.raises(ValueError):
            Interval(Fraction(1), Fraction(0), False, False)


class TestEquivalentIntervals:
    def test_all_nonempty_case(self, community):
        space, sport = community
        result = equivalent_threshold_intervals(space, sport, builtin("not_small"), TH_COMMUNITY)
        assert result.case is EmptinessCase.ALL_NONEMPTY
        assert not result.coupled
        assert result.alpha_interval == Interval(Fraction(1, 5), Fraction(2, 5), True, False)
        assert result.beta_interval == Interval(Fraction(0), Fraction(1, 7), False, True)

    def test_boundary_empty_coupled_case(self, twenty):
        space, concept = twenty
        result = equivalent_threshold_intervals(
            space, concept, StepExpr(Fraction(1, 2)), Thresholds(Fraction("0.7"), Fraction("0.2"))
        )
        assert result.case is EmptinessCase.BND_EMPTY
        assert result.coupled
        assert result.alpha_interval.lo == Fraction(0)
        assert result.alpha_interval.hi == Fraction(9, 10)
        assert result.admits(Fraction(9, 10), Fraction(0))
        assert result.admits(Fraction(1, 2), Fraction(1, 4))
        assert not result.admits(Fraction(19, 20), Fraction(0))
        assert not result.admits(Fraction(1, 2), Fraction(1, 2))

    def test_negative_empty_case(self, thirty):
        space, concept = thirty
        result = equivalent_threshold_intervals(
            space, concept, builtin("very_big"), Thresholds(Fraction("0.8"), Fraction("0.4"))
        )
        assert result.case is EmptinessCase.NEG_EMPTY
        assert result.beta_interval == Interval(Fraction(0), Fraction(9, 10), False, True)
        assert result.alpha_interval == Interval(Fraction(9, 10), Fraction(1), True, False)
        assert result.admits(Fraction("0.95"), Fraction("0.8"))

    def test_positive_empty_case(self, thirty_modified):
        space, concept = thirty_modified
        result = equivalent_threshold_intervals(
            space, concept, builtin("very_big"), Thresholds(Fraction("0.7"), Fraction("0.2"))
        )
        assert result.case is EmptinessCase.POS_EMPTY
        assert result.beta_interval == Interval(Fraction(1, 2), Fraction(9, 10), False, True)
        assert result.alpha_interval == Interval(Fraction(9, 10), Fraction(1), True, False)
        assert result.admits(Fraction("0.95"), Fraction("0.6"))

    def test_non_monotone_rejected(self, community):
        space, sport = community
        with pytest.raises(NonMonotoneExpressionError):
            equivalent_threshold_intervals(space, sport, MEDIUM_HUMP, TH_COMMUNITY)

    def test_degenerate_rejected(self, community):
        space, _ = community
        everyone = Concept(frozenset(space.elements), label="U")
        with pytest.raises(DegenerateRegionsError, match="non-empty"):
            equivalent_threshold_intervals(space, everyone, builtin("not_small"), TH_COMMUNITY)

    def test_degenerate_all_rejected_on_empty_concept(self):
        space, _ = community_instance()
        nothing = Concept(frozenset(), label="nothing")
        with pytest.raises(DegenerateRegionsError):
            equivalent_threshold_intervals(space, nothing, builtin("not_small"), TH_COMMUNITY)

    def test_admitted_pairs_respect_strict_order(self, community):
        space, sport = community
        result = equivalent_threshold_intervals(space, sport, builtin("not_small"), TH_COMMUNITY)
        for alpha in candidate_thresholds(list(space.block_ratios(sport).values())):
            for beta in candidate_thresholds(list(space.block_ratios(sport).values())):
                if result.admits(alpha, beta):
                    assert beta < alpha


class TestVerifyEquivalence:
    def test_inside_pair_passes(self, community):
        space, sport = community
        assert verify_equivalence(
            space, sport, builtin("not_small"), TH_COMMUNITY, Fraction("0.3"), Fraction("0.1")
        )

    def test_outside_pair_fails(self, community):
        space, sport = community
        assert not verify_equivalence(
            space, sport, builtin("not_small"), TH_COMMUNITY, Fraction("0.5"), Fraction("0.1")
        )
        # the failure is real: at alpha'=0.5 the 2/5-ratio block leaves the
        # positive region
        tp = probabilistic_regions(space, sport, Thresholds(Fraction("0.5"), Fraction("0.1")))
        assert tp.pos == block_union(space, "C4", "C5")
        assert tp.bnd == block_union(space, "C2", "C3", "C6")

    @given(spaces_with_concepts(), threshold_pairs())
    def test_identity_same_thresholds_always_passes(self, space_concept, thresholds):
        space, concept = space_concept
        assert verify_equivalence(
            space, concept, IdentityExpr(), thresholds, thresholds.alpha, thresholds.beta
        )

    def test_validates_probe_order(self, community):
        space, sport = community
        with pytest.raises(Exception):
            verify_equivalence(space, sport, builtin("not_small"), TH_COMMUNITY,
                               Fraction("0.1"), Fraction("0.3"))


class TestSweep:
    def test_candidate_set(self, community):
        space, sport = community
        ratios = list(space.block_ratios(sport).values())
        candidates = candidate_thresholds(ratios)
        expected = (
            Fraction(0), Fraction(1, 14), Fraction(1, 7), Fraction(6, 35),
            Fraction(1, 5), Fraction(3, 10), Fraction(2, 5), Fraction(1, 2),
            Fraction(3, 5), Fraction(7, 10), Fraction(4, 5), Fraction(1),
        )
        assert candidates == expected

    def test_community_verdicts(self, community):
        space, sport = community
        sweep = sweep_equivalence_oracle(space, sport, builtin("not_small"), TH_COMMUNITY)
        admitted = {(e.alpha, e.beta) for e in sweep.admitted()}
        assert admitted == {
            (Fraction(3, 10), Fraction(0)),
            (Fraction(3, 10), Fraction(1, 14)),
            (Fraction(2, 5), Fraction(0)),
            (Fraction(2, 5), Fraction(1, 14)),
        }

    def test_community_agrees_with_intervals(self, community):
        space, sport = community
        sweep = sweep_equivalence_oracle(space, sport, builtin("not_small"), TH_COMMUNITY)
        intervals = equivalent_threshold_intervals(space, sport, builtin("not_small"), TH_COMMUNITY)
        assert sweep.agrees_with(intervals)

    def test_twenty_very_big_agrees(self, twenty):
        space, concept = twenty
        sweep = sweep_equivalence_oracle(space, concept, builtin("very_big"), TH_TWENTY)
        intervals = equivalent_threshold_intervals(space, concept, builtin("very_big"), TH_TWENTY)
        assert sweep.agrees_with(intervals)
        alphas = {e.alpha for e in sweep.admitted()}
        betas = {e.beta for e in sweep.admitted()}
        assert alphas == {Fraction(19, 20), Fraction(1)}
        assert betas == {Fraction(0), Fraction(9, 20)}

    def test_singleton_blocks_empty_concept(self):
        ids = [f"e{i}" for i in range(5)]
        space_single = ApproximationSpace(ids, [[e] for e in ids])
        nothing = Concept(frozenset(), label="nothing")
        sweep = sweep_equivalence_oracle(
            space_single, nothing, builtin("not_small"), Thresholds(Fraction(1, 2), Fraction(1, 4))
        )
        # every ratio is 0, both routes reject everything, so every candidate
        # pair reproduces the regions
        assert sweep.entries
        assert all(e.equivalent for e in sweep.entries)

    def test_no_monotonicity_requirement(self, community):
        space, sport = community
        sweep = sweep_equivalence_oracle(space, sport, MEDIUM_HUMP, TH_COMMUNITY)
        assert sweep.entries


class TestDeltaRegions:
    def test_twenty_at_half(self, twenty):
        space, concept = twenty
        tp = delta_regions(space, concept, Fraction(1, 2))
        assert tp.pos == block_union(space, "C2", "C3")
        assert tp.neg == block_union(space, "C1")
        assert tp.bnd == frozenset()

    def test_zero_cutoff_accepts_everyone(self, community):
        space, sport = community
        tp = delta_regions(space, sport, 0)
        assert tp.pos == frozenset(space.elements)

    def test_unit_cutoff_matches_classical_lower(self, twenty):
        space, concept = twenty
        tp = delta_regions(space, concept, 1)
        assert tp.pos == pawlak_rough_set(space, concept).lower

    @given(spaces_with_concepts(), threshold_pairs())
    def test_threshold_independence(self, space_concept, thresholds):
        space, concept = space_concept
        cutoff = Fraction(1, 2)
        direct = delta_regions(space, concept, cutoff)
        via_regions = linguistic_regions(space, concept, StepExpr(cutoff), thresholds)
        assert direct.same_regions(via_regions)
        assert direct.degrees == via_regions.degrees

    def test_cutoff_validation(self, twenty):
        space, concept = twenty
        with pytest.raises(ValueError):
            delta_regions(space, concept, Fraction(3, 2))


class TestPawlakCoincidence:
    def test_twenty_instance_coincides(self, twenty):
        space, concept = twenty
        bounds = region_bounds(space, concept, builtin("very_big"), TH_TWENTY)
        assert coincides_with_pawlak(bounds)
        tp = linguistic_regions(space, concept, builtin("very_big"), TH_TWENTY)
        assert rough_set_from_tripartition(tp) == pawlak_rough_set(space, concept)

    def test_community_does_not(self, community):
        space, sport = community
        bounds = region_bounds(space, sport, builtin("not_small"), TH_COMMUNITY)
        assert not coincides_with_pawlak(bounds)

    def test_low_ratio_in_negative_region_blocks_coincidence(self):
        ids = [f"e{i}" for i in range(30)]
        blocks = [ids[:10], ids[10:20], ids[20:]]
        space = ApproximationSpace(ids, blocks)
        concept = Concept(frozenset(ids[:1] + ids[10:15] + ids[20:]), label="X")
        ratios = space.block_ratios(concept)
        assert sorted(ratios.values()) == [Fraction(1, 10), Fraction(1, 2), Fraction(1)]
        bounds = region_bounds(space, concept, IdentityExpr(),
                               Thresholds(Fraction("0.8"), Fraction("0.2")))
        assert bounds.neg_max == Fraction(1, 10)
        assert not coincides_with_pawlak(bounds)

    def test_requires_all_bounds(self):
        partial = RegionBounds(Fraction(0), None, None, Fraction(1))
        with pytest.raises(ValueError, match="all four bounds"):
            coincides_with_pawlak(partial)
