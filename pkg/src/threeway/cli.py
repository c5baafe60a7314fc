"""Command-line interface.

Subcommands: ``regions``, ``bounds``, ``equivalence``, ``verify``, ``sweep``.
Input is a CSV with a header row whose first column is the element id; the
partition comes from ``--key`` columns, the concept from a boolean column or
an explicit id list, and the expression from
``not_small | very_big | extremely_big | delta:<t> | identity | file:<path>``.

Numeric flags are parsed as exact decimals, so ``--alpha 0.4`` means the
rational 2/5 and lands on interval endpoints exactly.  JSON output is
deterministic byte-for-byte for a fixed input and configuration.

Exit codes: 0 success (for ``verify``: tri-partitions coincide), 1 ``verify``
mismatch, 2 configuration error, 3 data error, 4 non-monotone expression
where an increasing one is required, 5 degenerate tri-partition (two or more
empty regions).
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from typing import Optional

import click

from . import equivalence as eq
from . import explain as xp
from .expressions import (
    BUILTIN_NAMES,
    DomainError,
    ExpressionError,
    IdentityExpr,
    StepExpr,
    as_exact,
    builtin,
    load_expression,
)
from .regions import Thresholds, ThresholdError, TriPartition, linguistic_regions
from .spaces import (
    ApproximationSpace,
    Concept,
    DataError,
    concept_from_column,
    from_attribute_table,
    load_table,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_CONFIG = 2
EXIT_DATA = 3
EXIT_NON_MONOTONE = 4
EXIT_DEGENERATE = 5


class ConfigError(ValueError):
    """A flag value is unusable (bad expression spec, bad thresholds, ...)."""


def parse_expression(spec: str):
    """Resolve an ``--expr`` value to an expression object."""
    if spec in BUILTIN_NAMES:
        return builtin(spec)
    if spec == "identity":
        return IdentityExpr()
    if spec.startswith("delta:"):
        raw = spec.split(":", 1)[1]
        try:
            cutoff = as_exact(raw, "delta cutoff")
            return StepExpr(cutoff)
        except (ExpressionError, ValueError) as exc:
            raise ConfigError(f"bad delta cutoff {raw!r}: {exc}") from exc
    if spec.startswith("file:"):
        path = spec.split(":", 1)[1]
        try:
            return load_expression(path)
        except FileNotFoundError:
            raise ConfigError(f"expression file not found: {path}") from None
        except ExpressionError as exc:
            raise ConfigError(f"bad expression file {path}: {exc}") from exc
    raise ConfigError(
        f"unknown expression {spec!r}; expected one of "
        f"{' | '.join(BUILTIN_NAMES)} | delta:<t> | identity | file:<path>"
    )


def parse_decimal(raw: str, what: str) -> Fraction:
    try:
        value = Fraction(raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"{what} must be a number, got {raw!r}") from exc
    if not 0 <= value <= 1:
        raise ConfigError(f"{what} must lie in [0, 1], got {raw}")
    return value


def parse_concept(rows, concept_spec: str, id_column: str) -> Concept:
    """``--concept`` is a boolean column name or ``ids:a,b,c``."""
    if concept_spec.startswith("ids:"):
        members = [m for m in concept_spec[4:].split(",") if m]
        if not members:
            raise ConfigError("empty id list in --concept")
        return Concept(frozenset(members), label="concept")
    return concept_from_column(rows, concept_spec, id_column)


def load_inputs(input_path: str, key: str, concept_spec: str):
    rows = load_table(input_path)
    id_column = next(iter(rows[0].keys()))
    key_columns = [c.strip() for c in key.split(",") if c.strip()]
    if not key_columns:
        raise ConfigError("--key needs at least one column name")
    space = from_attribute_table(rows, key_columns, id_column)
    concept = space.check_concept(parse_concept(rows, concept_spec, id_column))
    return space, concept


def warn_on_threshold_ties(tp: TriPartition, thresholds: Thresholds) -> None:
    attained = set(tp.degrees.values())
    for name, value in (("alpha", thresholds.alpha), ("beta", thresholds.beta)):
        if any(value == degree for degree in attained):
            click.echo(
                f"warning: {name}={value} exactly equals an attained degree; "
                "the assignment at that boundary is tie-sensitive",
                err=True,
            )


def emit(report: xp.AnalysisReport, fmt: str) -> None:
    if fmt == "json":
        click.echo(json.dumps(report.to_json_dict(), indent=2, sort_keys=True))
    else:
        click.echo(report.to_text(), nl=False)


def _fail(code: int, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def run_guarded(fn):
    try:
        fn()
    except ConfigError as exc:
        _fail(EXIT_CONFIG, str(exc))
    except (ThresholdError, ExpressionError, DomainError) as exc:
        _fail(EXIT_CONFIG, str(exc))
    except DataError as exc:
        _fail(EXIT_DATA, str(exc))
    except eq.NonMonotoneExpressionError as exc:
        _fail(EXIT_NON_MONOTONE, str(exc))
    except eq.DegenerateRegionsError as exc:
        _fail(EXIT_DEGENERATE, str(exc))
    except OSError as exc:
        _fail(EXIT_DATA, str(exc))


input_option = click.option("--input", "input_path", required=True, help="CSV file; first column is the element id.")
key_option = click.option("--key", required=True, help="comma-separated key column(s) defining the partition")
concept_option = click.option("--concept", "concept_spec", required=True, help="boolean column name, or ids:a,b,c")
expr_option = click.option("--expr", "expr_spec", required=True, help="not_small | very_big | extremely_big | delta:<t> | identity | file:<path>")
alpha_option = click.option("--alpha", required=True, help="acceptance threshold in [0, 1]")
beta_option = click.option("--beta", required=True, help="rejection threshold in [0, 1], below alpha")
format_option = click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
seed_option = click.option("--seed", type=int, default=None, help="seed for randomized commands (reserved)")


@click.group()
def main() -> None:
    """Three-way decision regions, threshold equivalence, and explanations."""


@main.command()
@input_option
@key_option
@concept_option
@expr_option
@alpha_option
@beta_option
@format_option
@seed_option
def regions(input_path, key, concept_spec, expr_spec, alpha, beta, fmt, seed) -> None:
    """Compute the three regions and explain each block's assignment."""

    def run() -> None:
        space, concept = load_inputs(input_path, key, concept_spec)
        expr = parse_expression(expr_spec)
        thresholds = Thresholds(parse_decimal(alpha, "--alpha"), parse_decimal(beta, "--beta"))
        tp = linguistic_regions(space, concept, expr, thresholds)
        warn_on_threshold_ties(tp, thresholds)
        emit(xp.report(tp, expr, thresholds, concept), fmt)

    run_guarded(run)


@main.command()
@input_option
@key_option
@concept_option
@expr_option
@alpha_option
@beta_option
@format_option
@seed_option
def bounds(input_path, key, concept_spec, expr_spec, alpha, beta, fmt, seed) -> None:
    """Print the extreme inclusion ratios attained inside each region."""

    def run() -> None:
        space, concept = load_inputs(input_path, key, concept_spec)
        expr = parse_expression(expr_spec)
        thresholds = Thresholds(parse_decimal(alpha, "--alpha"), parse_decimal(beta, "--beta"))
        tp = linguistic_regions(space, concept, expr, thresholds)
        bounds_ = eq.region_bounds(space, concept, expr, thresholds)
        emit(xp.report(tp, expr, thresholds, concept, bounds=bounds_), fmt)

    run_guarded(run)


@main.command()
@input_option
@key_option
@concept_option
@expr_option
@alpha_option
@beta_option
@format_option
@seed_option
def equivalence(input_path, key, concept_spec, expr_spec, alpha, beta, fmt, seed) -> None:
    """Bounds, the equivalent probabilistic threshold intervals, and the sweep check."""

    def run() -> None:
        space, concept = load_inputs(input_path, key, concept_spec)
        expr = parse_expression(expr_spec)
        thresholds = Thresholds(parse_decimal(alpha, "--alpha"), parse_decimal(beta, "--beta"))
        tp = linguistic_regions(space, concept, expr, thresholds)
        bounds_ = eq.region_bounds(space, concept, expr, thresholds)
        equivalence_ = eq.equivalent_threshold_intervals(space, concept, expr, thresholds)
        sweep_ = eq.sweep_equivalence_oracle(space, concept, expr, thresholds)
        emit(
            xp.report(tp, expr, thresholds, concept, bounds=bounds_,
                      equivalence=equivalence_, sweep=sweep_),
            fmt,
        )

    run_guarded(run)


@main.command()
@input_option
@key_option
@concept_option
@expr_option
@alpha_option
@beta_option
@click.option("--prob-alpha", required=True, help="probabilistic acceptance threshold to verify")
@click.option("--prob-beta", required=True, help="probabilistic rejection threshold to verify")
@seed_option
def verify(input_path, key, concept_spec, expr_spec, alpha, beta, prob_alpha, prob_beta, seed) -> None:
    """Exit 0 when the probabilistic pair reproduces the linguistic regions, 1 otherwise."""

    def run() -> None:
        space, concept = load_inputs(input_path, key, concept_spec)
        expr = parse_expression(expr_spec)
        thresholds = Thresholds(parse_decimal(alpha, "--alpha"), parse_decimal(beta, "--beta"))
        pa = parse_decimal(prob_alpha, "--prob-alpha")
        pb = parse_decimal(prob_beta, "--prob-beta")
        if not pb < pa:
            raise ConfigError("--prob-beta must be strictly below --prob-alpha")
        from .regions import probabilistic_regions

        lingual = linguistic_regions(space, concept, expr, thresholds)
        warn_on_threshold_ties(lingual, thresholds)
        probabilistic = probabilistic_regions(space, concept, Thresholds(pa, pb))
        if lingual.same_regions(probabilistic):
            click.echo("tri-partitions coincide")
            sys.exit(EXIT_OK)
        for label, block in zip(space.labels, space.blocks):
            e = block[0]
            left, right = lingual.region_of(e), probabilistic.region_of(e)
            if left != right:
                click.echo(
                    f"tri-partitions differ: block {label} is {left!r} "
                    f"linguistically but {right!r} probabilistically"
                )
                break
        sys.exit(EXIT_MISMATCH)

    run_guarded(run)


@main.command()
@input_option
@key_option
@concept_option
@expr_option
@alpha_option
@beta_option
@format_option
@seed_option
def sweep(input_path, key, concept_spec, expr_spec, alpha, beta, fmt, seed) -> None:
    """Brute-force verdict table over every decision-relevant candidate pair."""

    def run() -> None:
        space, concept = load_inputs(input_path, key, concept_spec)
        expr = parse_expression(expr_spec)
        thresholds = Thresholds(parse_decimal(alpha, "--alpha"), parse_decimal(beta, "--beta"))
        result = eq.sweep_equivalence_oracle(space, concept, expr, thresholds)
        if fmt == "json":
            payload = {
                "candidates": [float(c) for c in result.candidates],
                "verdicts": [
                    {
                        "alpha": float(entry.alpha),
                        "beta": float(entry.beta),
                        "equivalent": entry.equivalent,
                    }
                    for entry in result.entries
                ],
            }
            click.echo(json.dumps(payload, indent=2, sort_keys=True))
            return
        click.echo(f"{len(result.candidates)} candidate values, {len(result.entries)} pairs")
        for entry in result.entries:
            mark = "=" if entry.equivalent else "x"
            click.echo(
                f"  {mark} alpha'={eq.format_endpoint(entry.alpha)} "
                f"beta'={eq.format_endpoint(entry.beta)}"
            )

    run_guarded(run)


if __name__ == "__main__":  # pragma: no cover
    main()
