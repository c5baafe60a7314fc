"""Evaluative linguistic expressions as piecewise functions on [0, 1].

An expression maps a relative size (a value in [0, 1]) to the degree, also in
[0, 1], to which that size fits a natural-language judgment such as "not
small", "very big", or "extremely big".  The three built-ins are piecewise
quadratic; custom expressions are restricted to the same three segment forms
(constant, upward quadratic, downward quadratic), which is enough to express
every hedge shape this library supports without a symbolic hedge calculus.

Step expressions (``at least t``) are the crisp special case: they output
exactly 0 or 1 and are compared without any floating-point conversion.

A note on monotonicity: the built-ins' published coefficients are rounded, so
adjacent pieces meet only approximately.  Two interior breakpoints hide
downward jumps (depth ~2.6e-4 at 0.16 for "not small", ~1.0e-3 at 0.895 for
"very big"; the affected input windows are a few 1e-5 to ~1.3e-4 wide).
``is_increasing`` therefore samples a grid; at the coarsest permitted step
(1e-3) each dip is smaller than a single-step rise and all built-ins classify
as increasing.  Two distinct block ratios can only straddle one of those dip
windows when a block has more than ~88 elements.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

Numeric = Union[int, float, Fraction]

#: Adjacent segments must agree at shared breakpoints within this gap
#: (rounded published coefficients leave mismatches of order 1e-3).
BREAKPOINT_GAP_TOLERANCE = 0.02

#: Coarsest (and default) sampling step for the monotonicity scan.
DEFAULT_GRID_STEP = Fraction(1, 1000)

#: A grid sample may fall below its predecessor by at most this much and
#: still count as non-decreasing.
MONOTONE_SLACK = 1e-9

_RANGE_SLOP = 1e-9

BUILTIN_NAMES = ("not_small", "very_big", "extremely_big")

SEGMENT_FORMS = ("const", "quad_up", "quad_down")


class ExpressionError(ValueError):
    """An expression definition violates its construction contract."""


class DomainError(ValueError):
    """An evaluation argument lies outside [0, 1]."""


def as_exact(value: Numeric | str, what: str = "value") -> Fraction:
    """Convert a number to an exact Fraction.

    Strings and floats are read as the decimal they display as
    (``as_exact("0.4") == as_exact(0.4) == Fraction(2, 5)``), which is what a
    human writing ``0.4`` means; ints and Fractions pass through unchanged.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float) or isinstance(value, str):
        try:
            return Fraction(str(value))
        except ValueError as exc:
            raise ExpressionError(f"cannot read {what} {value!r} as a number") from exc
    raise ExpressionError(f"cannot read {what} {value!r} as a number")


def _check_unit_interval(x: Numeric, what: str = "argument") -> None:
    if not 0 <= x <= 1:
        raise DomainError(f"{what} must lie in [0, 1], got {x}")


@dataclass(frozen=True)
class Segment:
    """One piece of a piecewise expression on a sub-interval of [0, 1].

    ``form`` selects the formula:

    * ``"const"``     -> c
    * ``"quad_up"``   -> (x - a)^2 / d
    * ``"quad_down"`` -> 1 - (a - x)^2 / d

    Bounds are exact rationals so that breakpoint ownership (which piece an
    input belongs to) never depends on binary rounding.
    """

    lo: Fraction
    hi: Fraction
    lo_inclusive: bool
    hi_inclusive: bool
    form: str
    a: float = 0.0
    d: float = 1.0
    c: float = 0.0

    def __post_init__(self) -> None:
        if self.form not in SEGMENT_FORMS:
            raise ExpressionError(f"unknown segment form {self.form!r}")
        if not (0 <= self.lo < self.hi <= 1):
            raise ExpressionError(
                f"segment bounds must satisfy 0 <= lo < hi <= 1, got [{self.lo}, {self.hi}]"
            )
        if self.form == "const":
            if not 0 <= self.c <= 1:
                raise ExpressionError(f"constant segment value {self.c} outside [0, 1]")
        elif self.d <= 0:
            raise ExpressionError(f"quadratic segment needs d > 0, got {self.d}")
        self._check_range()

    def contains(self, x: Numeric) -> bool:
        lo_ok = x >= self.lo if self.lo_inclusive else x > self.lo
        hi_ok = x <= self.hi if self.hi_inclusive else x < self.hi
        return lo_ok and hi_ok

    def value(self, x: Numeric) -> float:
        """Formula value at ``x``; defined on the closed hull [lo, hi]."""
        xf = float(x)
        if self.form == "const":
            return self.c
        if self.form == "quad_up":
            return (xf - self.a) ** 2 / self.d
        return 1.0 - (self.a - xf) ** 2 / self.d

    def _check_range(self) -> None:
        # Quadratics are monotone away from their vertex, so the extremes on
        # [lo, hi] occur at the endpoints or at the vertex if it is interior.
        probes = [float(self.lo), float(self.hi)]
        if self.form != "const" and float(self.lo) < self.a < float(self.hi):
            probes.append(self.a)
        for x in probes:
            v = self.value(x)
            if not -_RANGE_SLOP <= v <= 1 + _RANGE_SLOP:
                raise ExpressionError(
                    f"segment [{self.lo}, {self.hi}] leaves [0, 1]: value {v:.6g} at x={x:.6g}"
                )


@dataclass(frozen=True)
class EvalExpr:
    """A piecewise expression whose segments tile [0, 1] exactly.

    Construction validates the tiling (no gaps, no overlaps), the output
    range, near-continuity at interior breakpoints, and - when
    ``declared_monotone`` is given - that the declaration matches a grid scan.
    Instances are immutable; evaluation is pure.
    """

    name: str
    segments: tuple[Segment, ...]
    declared_monotone: Optional[bool] = None

    def __post_init__(self) -> None:
        if not self.segments:
            raise ExpressionError("an expression needs at least one segment")
        segs = sorted(self.segments, key=lambda s: (s.lo, s.hi))
        object.__setattr__(self, "segments", tuple(segs))
        self._check_tiling()
        self._check_breakpoint_gaps()
        if self.declared_monotone is not None:
            scanned = is_increasing(self)
            if scanned != self.declared_monotone:
                raise ExpressionError(
                    f"expression {self.name!r} declared "
                    f"{'increasing' if self.declared_monotone else 'non-increasing'} "
                    f"but the grid scan says otherwise"
                )

    def _check_tiling(self) -> None:
        first, last = self.segments[0], self.segments[-1]
        if first.lo != 0 or not first.lo_inclusive:
            raise ExpressionError("segments must start at 0 (inclusive)")
        if last.hi != 1 or not last.hi_inclusive:
            raise ExpressionError("segments must end at 1 (inclusive)")
        for left, right in zip(self.segments, self.segments[1:]):
            if left.hi != right.lo:
                raise ExpressionError(
                    f"segments leave a gap or overlap between {left.hi} and {right.lo}"
                )
            if left.hi_inclusive == right.lo_inclusive:
                side = "both claim" if left.hi_inclusive else "neither claims"
                raise ExpressionError(f"breakpoint {left.hi}: {side} the point")

    def _check_breakpoint_gaps(self) -> None:
        for left, right in zip(self.segments, self.segments[1:]):
            gap = abs(left.value(left.hi) - right.value(right.lo))
            if gap > BREAKPOINT_GAP_TOLERANCE:
                raise ExpressionError(
                    f"expression {self.name!r} jumps by {gap:.4g} at {left.hi} "
                    f"(limit {BREAKPOINT_GAP_TOLERANCE})"
                )

    def evaluate(self, x: Numeric) -> float:
        """Degree of the expression at ``x`` in [0, 1].

        Fraction inputs get exact breakpoint ownership; the quadratic itself
        is evaluated in floating point.
        """
        _check_unit_interval(x)
        for seg in self.segments:
            if seg.contains(x):
                return seg.value(x)
        raise AssertionError(f"tiling admitted no segment for {x}")  # pragma: no cover

    __call__ = evaluate


@dataclass(frozen=True)
class StepExpr:
    """Crisp threshold expression: 1 when the input reaches ``cutoff``, else 0.

    Comparisons are exact (no float conversion of the input), so
    ``StepExpr(Fraction(1, 3)).evaluate(Fraction(1, 3)) == 1.0`` holds without
    tolerance.
    """

    cutoff: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "cutoff", as_exact(self.cutoff, "cutoff"))
        if not 0 <= self.cutoff <= 1:
            raise ExpressionError(f"cutoff must lie in [0, 1], got {self.cutoff}")

    @property
    def name(self) -> str:
        return f"at least {self.cutoff}"

    def evaluate(self, x: Numeric) -> float:
        _check_unit_interval(x)
        return 1.0 if x >= self.cutoff else 0.0

    __call__ = evaluate


@dataclass(frozen=True)
class IdentityExpr:
    """The identity judgment: the degree of a size is the size itself.

    Evaluation returns the input unchanged (a Fraction stays a Fraction), so
    regions computed through it coincide exactly with the plain
    conditional-probability regions.
    """

    name: str = "identity"

    def evaluate(self, x: Numeric) -> Numeric:
        _check_unit_interval(x)
        return x

    __call__ = evaluate


def is_increasing(expr, grid_step: Numeric = DEFAULT_GRID_STEP) -> bool:
    """Decide non-decreasingness by scanning an evenly spaced grid.

    The grid is {0, h, 2h, ...} capped with 1, where h is the exact decimal
    reading of ``grid_step`` (0 < h <= 1/1000).  A sample may fall below its
    predecessor by at most ``MONOTONE_SLACK``.
    """
    step = as_exact(grid_step, "grid_step")
    if not 0 < step <= Fraction(1, 1000):
        raise ValueError(f"grid_step must lie in (0, 1e-3], got {grid_step}")
    prev = None
    x = Fraction(0)
    while True:
        v = expr.evaluate(x)
        if prev is not None and v < prev - MONOTONE_SLACK:
            return False
        prev = v
        if x == 1:
            return True
        x = min(x + step, Fraction(1))


def _seg(lo: str, lo_inc: bool, hi: str, hi_inc: bool, form: str, **kw) -> Segment:
    return Segment(Fraction(lo), Fraction(hi), lo_inc, hi_inc, form, **kw)


def _make_builtins() -> dict[str, EvalExpr]:
    not_small = EvalExpr(
        "not_small",
        (
            _seg("0", True, "0.0745", True, "const", c=0.0),
            _seg("0.0745", False, "0.16", True, "quad_up", a=0.0745, d=0.01714),
            _seg("0.16", False, "0.275", False, "quad_down", a=0.275, d=0.02305),
            _seg("0.275", True, "1", True, "const", c=1.0),
        ),
    )
    very_big = EvalExpr(
        "very_big",
        (
            _seg("0", True, "0.83", True, "const", c=0.0),
            _seg("0.83", False, "0.895", False, "quad_up", a=0.83, d=0.00828),
            _seg("0.895", True, "0.9575", False, "quad_down", a=0.9575, d=0.00796),
            _seg("0.9575", True, "1", True, "const", c=1.0),
        ),
    )
    extremely_big = EvalExpr(
        "extremely_big",
        (
            _seg("0", True, "0.885", True, "const", c=0.0),
            _seg("0.885", False, "0.95", False, "quad_up", a=0.885, d=0.00715),
            _seg("0.95", True, "0.995", False, "quad_down", a=0.995, d=0.00495),
            _seg("0.995", True, "1", True, "const", c=1.0),
        ),
    )
    return {e.name: e for e in (not_small, very_big, extremely_big)}


_BUILTINS = _make_builtins()


def builtin(name: str) -> EvalExpr:
    """Return one of the built-in expressions by name.

    Valid names: ``not_small``, ``very_big``, ``extremely_big``.
    """
    try:
        return _BUILTINS[name]
    except KeyError:
        raise ExpressionError(
            f"unknown built-in expression {name!r}; choose from {', '.join(BUILTIN_NAMES)}"
        ) from None


#: Fuzzy-quantifier reading of specific expressions; only these four carry one.
QUANTIFIERS = {
    "not_small": "many",
    "very_big": "most",
    "extremely_big": "almost all",
}


def quantifier_for(expr) -> Optional[str]:
    """The quantifier an expression corresponds to, if it has one.

    The three built-ins read as "many" / "most" / "almost all"; the crisp
    cutoff at 1 reads as "all".  Everything else returns None.
    """
    if isinstance(expr, StepExpr):
        return "all" if expr.cutoff == 1 else None
    return QUANTIFIERS.get(getattr(expr, "name", None))


# ---------------------------------------------------------------------------
# JSON form for custom expressions
# ---------------------------------------------------------------------------

def expression_to_json_dict(expr: EvalExpr) -> dict:
    """Serialize a piecewise expression to its JSON dictionary form."""
    return {
        "name": expr.name,
        "segments": [
            {
                "lo": float(s.lo),
                "lo_inclusive": s.lo_inclusive,
                "hi": float(s.hi),
                "hi_inclusive": s.hi_inclusive,
                "form": s.form,
                "a": s.a,
                "d": s.d,
                "c": s.c,
            }
            for s in expr.segments
        ],
    }


def expression_from_json_dict(data: dict) -> EvalExpr:
    """Build and validate a piecewise expression from its JSON dictionary form.

    Schema: ``{"name": str, "segments": [{"lo": num, "lo_inclusive": bool,
    "hi": num, "hi_inclusive": bool, "form": "const"|"quad_up"|"quad_down",
    "a": num, "d": num, "c": num}]}``.  ``a``/``d`` may be omitted for
    constant segments and ``c`` for quadratic ones.
    """
    if not isinstance(data, dict):
        raise ExpressionError("expression JSON must be an object")
    name = data.get("name")
    if not isinstance(name, str) or not name:
        raise ExpressionError("expression JSON needs a non-empty 'name'")
    raw_segments = data.get("segments")
    if not isinstance(raw_segments, list) or not raw_segments:
        raise ExpressionError("expression JSON needs a non-empty 'segments' list")
    segments = []
    for i, raw in enumerate(raw_segments):
        if not isinstance(raw, dict):
            raise ExpressionError(f"segment {i} must be an object")
        try:
            segments.append(
                Segment(
                    lo=as_exact(raw["lo"], f"segment {i} lo"),
                    hi=as_exact(raw["hi"], f"segment {i} hi"),
                    lo_inclusive=bool(raw["lo_inclusive"]),
                    hi_inclusive=bool(raw["hi_inclusive"]),
                    form=raw["form"],
                    a=float(raw.get("a", 0.0)),
                    d=float(raw.get("d", 1.0)),
                    c=float(raw.get("c", 0.0)),
                )
            )
        except KeyError as exc:
            raise ExpressionError(f"segment {i} is missing field {exc.args[0]!r}") from None
    declared = data.get("declared_monotone")
    if declared is not None and not isinstance(declared, bool):
        raise ExpressionError("'declared_monotone' must be a boolean when present")
    return EvalExpr(name, tuple(segments), declared_monotone=declared)


def load_expression(path: str) -> EvalExpr:
    """Read a custom expression from a JSON file."""
    with open(path, "r", encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ExpressionError(f"{path} is not valid JSON: {exc}") from exc
    return expression_from_json_dict(data)
