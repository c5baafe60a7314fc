"""Shared fixtures: the four golden instances and the acceptance summary hook."""

from __future__ import annotations

import re
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from threeway import ApproximationSpace, Concept

settings.register_profile(
    "deterministic",
    derandomize=True,
    database=None,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("deterministic")


def users(lo: int, hi: int) -> list[str]:
    """u<lo> .. u<hi>, inclusive."""
    return [f"u{i}" for i in range(lo, hi + 1)]


def community_instance() -> tuple[ApproximationSpace, Concept]:
    """32 users in six communities, with the users interested in sport.

    Block inclusion ratios for the sport concept come out as the exact
    fractions 0, 1/5, 2/5, 3/5, 4/5, and 1/7.
    """
    blocks = {
        "C1": users(1, 5),
        "C2": users(6, 10),
        "C3": users(11, 15),
        "C4": users(16, 20),
        "C5": users(21, 25),
        "C6": users(26, 32),
    }
    space = ApproximationSpace(users(1, 32), blocks.values(), labels=list(blocks))
    sport = Concept(
        frozenset("u10 u11 u12 u18 u19 u20 u21 u22 u23 u24 u26".split()),
        label="sport",
    )
    return space, sport


def twenty_instance() -> tuple[ApproximationSpace, Concept]:
    """20 elements in three classes; ratios 0, 1, and 9/10."""
    blocks = {"C1": users(1, 5), "C2": users(6, 10), "C3": users(11, 20)}
    space = ApproximationSpace(users(1, 20), blocks.values(), labels=list(blocks))
    concept = Concept(frozenset(users(6, 19)), label="X")
    return space, concept


def thirty_instance() -> tuple[ApproximationSpace, Concept]:
    """30 elements in three classes; ratios 1, 1, and 9/10 (negative region empty)."""
    blocks = {"C1": users(1, 5), "C2": users(6, 10), "C3": users(11, 30)}
    space = ApproximationSpace(users(1, 30), blocks.values(), labels=list(blocks))
    concept = Concept(frozenset(users(1, 28)), label="X")
    return space, concept


def thirty_instance_modified() -> tuple[ApproximationSpace, Concept]:
    """30 elements regrouped so the ratios are exactly 1/2, 1/2, and 9/10.

    Half-ratios need even block sizes, hence the 6/4/20 split; the positive
    region is empty for the very-big expression at (0.7, 0.2).
    """
    blocks = {"C1": users(1, 6), "C2": users(7, 10), "C3": users(11, 30)}
    space = ApproximationSpace(users(1, 30), blocks.values(), labels=list(blocks))
    concept = Concept(
        frozenset(users(1, 3) + users(7, 8) + users(11, 28)),
        label="X",
    )
    return space, concept


@pytest.fixture
def community():
    return community_instance()


@pytest.fixture
def twenty():
    return twenty_instance()


@pytest.fixture
def thirty():
    return thirty_instance()


@pytest.fixture
def thirty_modified():
    return thirty_instance_modified()


def labels_of(space: ApproximationSpace, elements) -> set[str]:
    """Block labels touched by a set of elements."""
    return {space.label_of(e) for e in elements}


def block_union(space: ApproximationSpace, *labels: str) -> frozenset[str]:
    by_label = dict(zip(space.labels, space.blocks))
    out: set[str] = set()
    for label in labels:
        out.update(by_label[label])
    return frozenset(out)


# ---------------------------------------------------------------------------
# Exact-rational oracle for the piecewise formulas (independent of the
# library's float evaluation path).
# ---------------------------------------------------------------------------

def oracle_quad_up(x: Fraction, a: str, d: str) -> Fraction:
    return (x - Fraction(a)) ** 2 / Fraction(d)


def oracle_quad_down(x: Fraction, a: str, d: str) -> Fraction:
    return 1 - (Fraction(a) - x) ** 2 / Fraction(d)


def oracle_not_small(x: Fraction) -> Fraction:
    if x >= Fraction("0.275"):
        return Fraction(1)
    if x > Fraction("0.16"):
        return oracle_quad_down(x, "0.275", "0.02305")
    if x > Fraction("0.0745"):
        return oracle_quad_up(x, "0.0745", "0.01714")
    return Fraction(0)


def oracle_very_big(x: Fraction) -> Fraction:
    if x >= Fraction("0.9575"):
        return Fraction(1)
    if x >= Fraction("0.895"):
        return oracle_quad_down(x, "0.9575", "0.00796")
    if x > Fraction("0.83"):
        return oracle_quad_up(x, "0.83", "0.00828")
    return Fraction(0)


def oracle_extremely_big(x: Fraction) -> Fraction:
    if x >= Fraction("0.995"):
        return Fraction(1)
    if x >= Fraction("0.95"):
        return oracle_quad_down(x, "0.995", "0.00495")
    if x > Fraction("0.885"):
        return oracle_quad_up(x, "0.885", "0.00715")
    return Fraction(0)


ORACLES = {
    "not_small": oracle_not_small,
    "very_big": oracle_very_big,
    "extremely_big": oracle_extremely_big,
}


# ---------------------------------------------------------------------------
# Acceptance summary: one pass/fail line per criterion at the end of the run.
# ---------------------------------------------------------------------------

ACCEPTANCE_LABELS = {
    1: "golden run: ratios, degrees, regions, runtime",
    2: "region bounds and their strict interleaving",
    3: "equivalence intervals, verification, sweep agreement",
    4: "20-element instance: bounds, classical coincidence",
    5: "crisp-cutoff regions and the empty-negative case",
    6: "empty-positive case intervals",
    7: "randomized property suite (1000 instances)",
    8: "built-in expression checks",
}

_CRITERION_PATTERN = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    outcomes: dict[int, str] = {}
    for status, word in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL")):
        for report in terminalreporter.stats.get(status, []):
            match = _CRITERION_PATTERN.search(report.nodeid)
            if match:
                number = int(match.group(1))
                outcomes[number] = "FAIL" if outcomes.get(number) == "FAIL" else word
    if not outcomes:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for number in sorted(outcomes):
        label = ACCEPTANCE_LABELS.get(number, "")
        terminalreporter.write_line(f"criterion {number}: {outcomes[number]} - {label}")
