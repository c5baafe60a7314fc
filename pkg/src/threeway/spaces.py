"""Finite universes, equivalence partitions, concepts, and inclusion ratios.

The central object is the :class:`ApproximationSpace`: a finite set of
element identifiers together with an equivalence partition into blocks.  All
set sizes are compared through exact integer fractions; nothing here touches
floating point, so threshold comparisons downstream never suffer rounding
ties.  Spaces are immutable after construction and safe to share.

A partition can be given explicitly (a list of blocks) or derived from an
attribute table: two elements share a block exactly when their key-column
tuples are equal.  Both paths normalize to the same canonical form, blocks
ordered by their lexicographically smallest element.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence


class DataError(ValueError):
    """Input data violates its contract (bad table, unknown id/column, ...)."""


@dataclass(frozen=True)
class Concept:
    """A subset of the universe under study, with a display label."""

    members: frozenset[str]
    label: str = "X"

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", frozenset(self.members))


def relative_cardinality(part: Iterable[str], whole: Iterable[str]) -> Fraction:
    """Share of ``whole`` that also lies in ``part``, as an exact fraction.

    With ``whole`` = the universe this is the normalized size measure used
    throughout: it is 0 on the empty set, 1 on the universe, and monotone
    under inclusion.
    """
    whole = frozenset(whole)
    if not whole:
        raise DataError("relative cardinality against an empty set is undefined")
    part = frozenset(part)
    return Fraction(len(part & whole), len(whole))


class ApproximationSpace:
    """A finite universe plus an equivalence partition of it.

    ``elements`` keeps the caller's order (e.g. CSV row order); ``blocks``
    are canonical: each block sorted, blocks ordered by smallest element.
    Every element belongs to exactly one block, blocks are non-empty and
    pairwise disjoint, and their union is the universe; construction rejects
    anything else.
    """

    __slots__ = ("elements", "blocks", "labels", "_block_of")

    def __init__(
        self,
        elements: Sequence[str],
        blocks: Iterable[Iterable[str]],
        labels: Optional[Sequence[str]] = None,
    ) -> None:
        elements = tuple(elements)
        if not elements:
            raise DataError("the universe must be non-empty")
        if len(set(elements)) != len(elements):
            dupes = sorted({e for e in elements if list(elements).count(e) > 1})
            raise DataError(f"duplicate element id(s): {', '.join(dupes)}")

        raw_blocks = [tuple(sorted(b)) for b in blocks]
        if labels is not None and len(labels) != len(raw_blocks):
            raise DataError("one label per block is required")
        order = sorted(range(len(raw_blocks)), key=lambda i: raw_blocks[i][0] if raw_blocks[i] else "")
        raw_blocks = [raw_blocks[i] for i in order]
        if labels is None:
            labels = [f"B{i + 1}" for i in range(len(raw_blocks))]
        else:
            labels = [labels[i] for i in order]

        universe = frozenset(elements)
        seen: dict[str, int] = {}
        for idx, block in enumerate(raw_blocks):
            if not block:
                raise DataError("partition blocks must be non-empty")
            for e in block:
                if e not in universe:
                    raise DataError(f"block element {e!r} is not in the universe")
                if e in seen:
                    raise DataError(f"element {e!r} appears in more than one block")
                seen[e] = idx
        if len(seen) != len(universe):
            missing = sorted(universe - seen.keys())
            raise DataError(f"partition does not cover: {', '.join(missing)}")

        self.elements: tuple[str, ...] = elements
        self.blocks: tuple[tuple[str, ...], ...] = tuple(raw_blocks)
        self.labels: tuple[str, ...] = tuple(labels)
        self._block_of: dict[str, int] = seen

    # -- queries ------------------------------------------------------------

    def __contains__(self, element: str) -> bool:
        return element in self._block_of

    def __len__(self) -> int:
        return len(self.elements)

    def block_index(self, element: str) -> int:
        try:
            return self._block_of[element]
        except KeyError:
            raise DataError(f"unknown element {element!r}") from None

    def block_of(self, element: str) -> tuple[str, ...]:
        """The equivalence class of an element."""
        return self.blocks[self.block_index(element)]

    def label_of(self, element: str) -> str:
        return self.labels[self.block_index(element)]

    def check_concept(self, concept: Concept) -> Concept:
        """Validate that a concept's members all belong to this universe."""
        stray = concept.members - frozenset(self.elements)
        if stray:
            raise DataError(
                f"concept {concept.label!r} has members outside the universe: "
                f"{', '.join(sorted(stray))}"
            )
        return concept

    def inclusion_ratio(self, concept: Concept, element: str) -> Fraction:
        """Share of the element's block that lies in the concept.

        Blocks are non-empty (every element belongs to its own class), so the
        ratio is always defined.
        """
        block = self.block_of(element)
        return relative_cardinality(concept.members, block)

    def block_ratios(self, concept: Concept) -> dict[int, Fraction]:
        """Inclusion ratio per block index; constant across a block by construction."""
        self.check_concept(concept)
        return {
            i: Fraction(len(concept.members.intersection(block)), len(block))
            for i, block in enumerate(self.blocks)
        }

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"ApproximationSpace({len(self.elements)} elements, {len(self.blocks)} blocks)"


Row = Mapping[str, str]


def from_attribute_table(
    rows: Sequence[Row],
    key_columns: Sequence[str],
    id_column: Optional[str] = None,
) -> ApproximationSpace:
    """Derive a space from a row-per-element table.

    Two elements land in the same block exactly when their ``key_columns``
    tuples are equal.  Block labels are the joined key values, so a single
    "community" column yields block labels like ``C3``.
    """
    if not rows:
        raise DataError("the table is empty")
    if not key_columns:
        raise DataError("at least one key column is required")
    if id_column is None:
        id_column = next(iter(rows[0].keys()))
    elements: list[str] = []
    groups: dict[tuple[str, ...], list[str]] = {}
    for row in rows:
        if id_column not in row:
            raise DataError(f"unknown column {id_column!r}")
        element = row[id_column]
        for col in key_columns:
            if col not in row:
                raise DataError(f"unknown column {col!r}")
        elements.append(element)
        key = tuple(row[col] for col in key_columns)
        groups.setdefault(key, []).append(element)
    if len(set(elements)) != len(elements):
        dupes = sorted({e for e in elements if elements.count(e) > 1})
        raise DataError(f"duplicate element id(s): {', '.join(dupes)}")
    keys = list(groups)
    return ApproximationSpace(
        elements,
        [groups[k] for k in keys],
        labels=[",".join(k) for k in keys],
    )


_TRUE_WORDS = {"1", "true", "yes", "y"}
_FALSE_WORDS = {"0", "false", "no", "n", ""}


def concept_from_column(rows: Sequence[Row], column: str, id_column: Optional[str] = None) -> Concept:
    """Read a concept from a boolean column of the table."""
    if not rows:
        raise DataError("the table is empty")
    if id_column is None:
        id_column = next(iter(rows[0].keys()))
    members = set()
    for row in rows:
        if column not in row:
            raise DataError(f"unknown column {column!r}")
        word = row[column].strip().lower()
        if word in _TRUE_WORDS:
            members.add(row[id_column])
        elif word not in _FALSE_WORDS:
            raise DataError(
                f"column {column!r} is not boolean: {row[column]!r} for {row[id_column]!r}"
            )
    return Concept(frozenset(members), label=column)


def load_table(path: str) -> list[dict[str, str]]:
    """Read a CSV table: header row required, first column is the element id."""
    with open(path, "r", encoding="utf-8", newline="") as handle:
        reader = csv.DictReader(handle)
        if reader.fieldnames is None:
            raise DataError(f"{path} has no header row")
        rows = [dict(row) for row in reader]
    if not rows:
        raise DataError(f"{path} has no data rows")
    return rows
