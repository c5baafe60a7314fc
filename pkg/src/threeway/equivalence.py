"""Region bounds and the threshold pairs under which both region routes agree.

Given a linguistic tri-partition built from an increasing expression, the
inclusion ratios attained inside each region pin down four bounds:

* ``neg_max``  - highest ratio in the negative region,
* ``bnd_min``  - lowest ratio in the boundary region,
* ``bnd_max``  - highest ratio in the boundary region,
* ``pos_min``  - lowest ratio in the positive region,

each absent exactly when its region is empty.  With all three regions
non-empty and the expression increasing they interleave strictly:
``0 <= neg_max < bnd_min <= bnd_max < pos_min <= 1``.

Those bounds characterize every probabilistic threshold pair (alpha', beta')
that reproduces the linguistic regions exactly:

* all regions non-empty:  alpha' in (bnd_max, pos_min],  beta' in [neg_max, bnd_min);
* boundary empty:         the coupled constraint neg_max <= beta' < alpha' <= pos_min;
* negative empty:         beta' in [0, bnd_min),  alpha' in (bnd_max, pos_min];
* positive empty:         beta' in [neg_max, bnd_min),  alpha' in (bnd_max, 1].

Two or more empty regions is rejected as degenerate.  Everything is exact:
ratios, interval endpoints, and the open/closed flags all live in rational
arithmetic, because the content of the characterization is precisely which
endpoints are attained.

An independent brute-force check is provided alongside: the sweep oracle
enumerates every decision-relevant candidate pair - region membership only
depends on where a threshold sits relative to the finite ratio set, so the
attained ratios, the midpoints between consecutive ones, and 0 and 1 hit
every equivalence cell of threshold space - and verifies each pair by direct
region comparison.  For an increasing expression the verdict table must match
the interval characterization on 100% of candidates.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .expressions import Numeric, as_exact, is_increasing
from .regions import Thresholds, TriPartition, linguistic_regions, probabilistic_regions
from .spaces import ApproximationSpace, Concept


class NonMonotoneExpressionError(ValueError):
    """The expression failed the increasing-function requirement."""


class DegenerateRegionsError(ValueError):
    """Two or more regions are empty; no meaningful interval characterization."""


class EmptinessCase(Enum):
    """Which regions of the source tri-partition are empty."""

    ALL_NONEMPTY = "all_nonempty"
    BND_EMPTY = "bnd_empty"
    NEG_EMPTY = "neg_empty"
    POS_EMPTY = "pos_empty"


@dataclass(frozen=True)
class RegionBounds:
    """Extreme inclusion ratios attained per region; None for empty regions."""

    neg_max: Optional[Fraction]
    bnd_min: Optional[Fraction]
    bnd_max: Optional[Fraction]
    pos_min: Optional[Fraction]

    def as_tuple(self) -> tuple:
        return (self.neg_max, self.bnd_min, self.bnd_max, self.pos_min)

    def all_present(self) -> bool:
        return all(v is not None for v in self.as_tuple())


@dataclass(frozen=True)
class Interval:
    """A rational interval with explicit open/closed endpoints."""

    lo: Fraction
    hi: Fraction
    lo_open: bool
    hi_open: bool

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"interval endpoints out of order: {self.lo} > {self.hi}")

    def contains(self, value: Numeric) -> bool:
        lo_ok = value > self.lo if self.lo_open else value >= self.lo
        hi_ok = value < self.hi if self.hi_open else value <= self.hi
        return lo_ok and hi_ok

    def to_json_dict(self) -> dict:
        return {
            "lo": float(self.lo),
            "lo_open": self.lo_open,
            "hi": float(self.hi),
            "hi_open": self.hi_open,
        }

    def __str__(self) -> str:
        left = "(" if self.lo_open else "["
        right = ")" if self.hi_open else "]"
        return f"{left}{format_endpoint(self.lo)}, {format_endpoint(self.hi)}{right}"


def format_endpoint(value: Fraction) -> str:
    """Render an endpoint as an exact fraction with its decimal, e.g. ``1/7 ≈ 0.142857``."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator} ≈ {float(value):.6g}"


@dataclass(frozen=True)
class ThresholdEquivalence:
    """The set of probabilistic threshold pairs reproducing the source regions.

    When ``coupled`` is true (empty boundary region) the admissible set is
    the joint wedge ``alpha_interval.lo <= beta' < alpha' <= alpha_interval.hi``
    rather than the product of the two intervals; :meth:`admits` applies the
    correct test either way.
    """

    case: EmptinessCase
    alpha_interval: Interval
    beta_interval: Interval
    coupled: bool

    def admits(self, alpha_p: Numeric, beta_p: Numeric) -> bool:
        if not beta_p < alpha_p:
            return False
        if self.coupled:
            return self.alpha_interval.lo <= beta_p and alpha_p <= self.alpha_interval.hi
        return self.alpha_interval.contains(alpha_p) and self.beta_interval.contains(beta_p)

    def to_json_dict(self, sweep_agrees: Optional[bool] = None) -> dict:
        data = {
            "case": self.case.value,
            "alpha_interval": self.alpha_interval.to_json_dict(),
            "beta_interval": self.beta_interval.to_json_dict(),
            "coupled": self.coupled,
        }
        if sweep_agrees is not None:
            data["sweep_agrees"] = sweep_agrees
        return data

    def describe(self) -> str:
        if self.coupled:
            lo = format_endpoint(self.alpha_interval.lo)
            hi = format_endpoint(self.alpha_interval.hi)
            return f"{lo} <= beta' < alpha' <= {hi} (coupled)"
        return f"alpha' in {self.alpha_interval}, beta' in {self.beta_interval}"


def _bounds_from(tp: TriPartition, ratios: dict[int, Fraction], space: ApproximationSpace) -> RegionBounds:
    per_region: dict[str, list[Fraction]] = {"pos": [], "neg": [], "bnd": []}
    for idx, block in enumerate(space.blocks):
        per_region[tp.region_of(block[0])].append(ratios[idx])
    return RegionBounds(
        neg_max=max(per_region["neg"], default=None),
        bnd_min=min(per_region["bnd"], default=None),
        bnd_max=max(per_region["bnd"], default=None),
        pos_min=min(per_region["pos"], default=None),
    )


def region_bounds(
    space: ApproximationSpace, concept: Concept, expr, thresholds: Thresholds
) -> RegionBounds:
    """The four extreme ratios of the linguistic tri-partition's regions."""
    tp = linguistic_regions(space, concept, expr, thresholds)
    return _bounds_from(tp, space.block_ratios(concept), space)


def check_bounds_ordering(bounds: RegionBounds, expr_increasing: bool) -> bool:
    """Whether the strict interleaving 0 <= neg_max < bnd_min <= bnd_max < pos_min <= 1 holds.

    Only meaningful when all three regions were non-empty and the expression
    increasing; both are preconditions.
    """
    if not expr_increasing:
        raise ValueError("ordering check requires an increasing expression")
    if not bounds.all_present():
        raise ValueError("ordering check requires all four bounds (no empty region)")
    return (
        0 <= bounds.neg_max < bounds.bnd_min <= bounds.bnd_max < bounds.pos_min <= 1
    )


def equivalent_threshold_intervals(
    space: ApproximationSpace,
    concept: Concept,
    expr,
    thresholds: Thresholds,
    grid_step: Numeric = Fraction(1, 1000),
) -> ThresholdEquivalence:
    """Characterize all (alpha', beta') whose probabilistic regions equal the linguistic ones.

    Raises :class:`NonMonotoneExpressionError` when the expression fails the
    grid monotonicity scan, and :class:`DegenerateRegionsError` when two or
    more regions of the source tri-partition are empty.
    """
    if not is_increasing(expr, grid_step):
        raise NonMonotoneExpressionError(
            f"expression {getattr(expr, 'name', expr)!r} is not increasing; "
            "the interval characterization only covers increasing expressions"
        )
    tp = linguistic_regions(space, concept, expr, thresholds)
    empty = tp.empty_regions
    if len(empty) >= 2:
        present = next(name for name in ("pos", "neg", "bnd") if name not in empty)
        raise DegenerateRegionsError(
            f"only the {present!r} region is non-empty (it covers the whole universe); "
            "the threshold characterization needs at least two non-empty regions"
        )
    bounds = _bounds_from(tp, space.block_ratios(concept), space)

    if not empty:
        return ThresholdEquivalence(
            case=EmptinessCase.ALL_NONEMPTY,
            alpha_interval=Interval(bounds.bnd_max, bounds.pos_min, True, False),
            beta_interval=Interval(bounds.neg_max, bounds.bnd_min, False, True),
            coupled=False,
        )
    if empty == ("bnd",):
        # beta' and alpha' interact: neg_max <= beta' < alpha' <= pos_min.
        # The stored intervals are the projections of that wedge.
        return ThresholdEquivalence(
            case=EmptinessCase.BND_EMPTY,
            alpha_interval=Interval(bounds.neg_max, bounds.pos_min, True, False),
            beta_interval=Interval(bounds.neg_max, bounds.pos_min, False, True),
            coupled=True,
        )
    if empty == ("neg",):
        return ThresholdEquivalence(
            case=EmptinessCase.NEG_EMPTY,
            alpha_interval=Interval(bounds.bnd_max, bounds.pos_min, True, False),
            beta_interval=Interval(Fraction(0), bounds.bnd_min, False, True),
            coupled=False,
        )
    return ThresholdEquivalence(
        case=EmptinessCase.POS_EMPTY,
        alpha_interval=Interval(bounds.bnd_max, Fraction(1), True, False),
        beta_interval=Interval(bounds.neg_max, bounds.bnd_min, False, True),
        coupled=False,
    )


def verify_equivalence(
    space: ApproximationSpace,
    concept: Concept,
    expr,
    thresholds: Thresholds,
    alpha_p: Numeric,
    beta_p: Numeric,
) -> bool:
    """Direct check: do the two routes produce identical pos/neg/bnd sets?"""
    probe = Thresholds(alpha_p, beta_p)
    lingual = linguistic_regions(space, concept, expr, thresholds)
    probabilistic = probabilistic_regions(space, concept, probe)
    return lingual.same_regions(probabilistic)


@dataclass(frozen=True)
class SweepEntry:
    alpha: Fraction
    beta: Fraction
    equivalent: bool


@dataclass(frozen=True)
class SweepResult:
    """Brute-force verdicts over every decision-relevant candidate pair."""

    candidates: tuple[Fraction, ...]
    entries: tuple[SweepEntry, ...]

    def agrees_with(self, equivalence: ThresholdEquivalence) -> bool:
        """True when every verdict matches the interval characterization."""
        return all(
            entry.equivalent == equivalence.admits(entry.alpha, entry.beta)
            for entry in self.entries
        )

    def admitted(self) -> tuple[SweepEntry, ...]:
        return tuple(e for e in self.entries if e.equivalent)


def candidate_thresholds(ratios: list[Fraction]) -> tuple[Fraction, ...]:
    """Attained ratios, midpoints of consecutive ratios, and the extremes 0 and 1.

    Region membership is a function of where a threshold falls relative to the
    attained ratio set, so threshold space splits into finitely many cells
    (each ratio itself, and each open gap between neighbours); this set hits
    every cell, which makes the sweep verdict table exhaustive at cell level.
    """
    distinct = sorted(set(ratios))
    values = {Fraction(0), Fraction(1), *distinct}
    values.update(
        (lo + hi) / 2 for lo, hi in zip(distinct, distinct[1:])
    )
    return tuple(sorted(values))


def sweep_equivalence_oracle(
    space: ApproximationSpace,
    concept: Concept,
    expr,
    thresholds: Thresholds,
) -> SweepResult:
    """Evaluate :func:`verify_equivalence` on every candidate pair (beta' < alpha').

    Makes no monotonicity assumption; this is the independent route the
    interval characterization is checked against.
    """
    ratios = list(space.block_ratios(concept).values())
    candidates = candidate_thresholds(ratios)
    lingual = linguistic_regions(space, concept, expr, thresholds)
    entries = []
    for alpha_p in candidates:
        for beta_p in candidates:
            if beta_p >= alpha_p:
                continue
            probabilistic = probabilistic_regions(space, concept, Thresholds(alpha_p, beta_p))
            entries.append(SweepEntry(alpha_p, beta_p, lingual.same_regions(probabilistic)))
    return SweepResult(candidates, tuple(entries))


def delta_regions(space: ApproximationSpace, concept: Concept, cutoff: Numeric) -> TriPartition:
    """Crisp split at ``cutoff``: blocks at or above it are accepted, the rest rejected.

    The boundary region is empty and the outcome does not depend on any
    (alpha, beta) pair; degrees are the crisp 0/1 values so the result is
    identical to ``linguistic_regions`` with a step expression at ``cutoff``.
    """
    cut = as_exact(cutoff, "cutoff")
    if not 0 <= cut <= 1:
        raise ValueError(f"cutoff must lie in [0, 1], got {cutoff}")
    ratios = space.block_ratios(concept)
    pos: set[str] = set()
    neg: set[str] = set()
    degrees: dict[str, float] = {}
    for idx, block in enumerate(space.blocks):
        hit = ratios[idx] >= cut
        (pos if hit else neg).update(block)
        for element in block:
            degrees[element] = 1.0 if hit else 0.0
    return TriPartition(frozenset(pos), frozenset(neg), frozenset(), degrees, space)


def coincides_with_pawlak(bounds: RegionBounds) -> bool:
    """Whether the linguistic rough set collapses to the classical one.

    Requires all three regions non-empty (all four bounds present): the
    collapse happens exactly when the negative region attains only ratio 0
    and the positive region only ratio 1.
    """
    if not bounds.all_present():
        raise ValueError("the coincidence test requires all four bounds (no empty region)")
    return bounds.neg_max == 0 and bounds.pos_min == 1
