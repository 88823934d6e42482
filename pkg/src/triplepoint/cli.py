"""Command-line interface.

Exit codes: 0 success, 2 invalid input, 3 search cap exceeded, 4 verifier
mismatch.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from functools import wraps
from typing import Optional

import click

from .circle import CircleInstance, CircleSolution, DEFAULT_CAP, is_consecutive, solve_circle
from .counterexamples import (
    facets_vertex_adjacent,
    octahedron_cover_search,
    verify_figure1,
    verify_nonconvex_example,
)
from .errors import CapExceeded, InputError
from .instancefile import generate, parse_instance
from .lines import LineInstance, solve_lines
from .oracle import ORACLE_CAP, oracle_solve
from .render import render_svg
from .space3d import verify_convex_position_3d, verify_table

EXIT_INVALID_INPUT = 2
EXIT_CAP_EXCEEDED = 3
EXIT_VERIFIER_MISMATCH = 4


def _with_exit_codes(fn):
    @wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except InputError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_INVALID_INPUT)
        except CapExceeded as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_CAP_EXCEEDED)

    return wrapper


@click.group()
def main():
    """Exact solver and verifiers for colorful triple partitions of lines
    and circle points."""


def _read_instance(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _parse_hint(hint: Optional[str]):
    if hint is None:
        return None
    parts = hint.split()
    if len(parts) != 2:
        raise click.BadParameter("hint must be two rationals, e.g. '1/3 -2/5'")
    return (Fraction(parts[0]), Fraction(parts[1]))


def _rat_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _echo_trace(solution: CircleSolution) -> None:
    for step in solution.trace:
        click.echo(
            f"gamma-iter {step.iteration} before={step.count_before} "
            f"after={step.count_after} touched={','.join(map(str, step.touched))}"
        )


def _echo_circle_solution(solution: CircleSolution) -> None:
    inst = solution.instance
    for pos, info in enumerate(solution.annotated.triples, start=1):
        labels = ",".join(str(i) for i in info.indices)
        kind = "bounding" if info.bounding else f"unbounding middle={info.middle}"
        click.echo(f"triple {pos}: points {labels} [{kind}]")
    if solution.annotated.gamma_ends is not None:
        s, e = solution.annotated.gamma_ends
        click.echo(f"middle arc: clockwise from point {s} to point {e}")
    click.echo(f"minimum unbounding triples: {solution.min_unbounding}")
    click.echo(f"consecutive: {is_consecutive(solution.annotated, inst)}")


def _write_svg(svg_out: Optional[str], result) -> None:
    if svg_out:
        with open(svg_out, "w", encoding="utf-8") as fh:
            fh.write(render_svg(result))
        click.echo(f"wrote {svg_out}")


@main.command("solve-lines")
@click.argument("instance", type=str)
@click.option("--cap", default=DEFAULT_CAP, show_default=True, help="max k for the exact search")
@click.option("--hint", default=None, help="interior point of a witness cell, two rationals")
@click.option("--svg-out", default=None, type=str, help="write an SVG rendering here")
@click.option("--trace", is_flag=True, help="log the arc-shrinking iterations")
@_with_exit_codes
def solve_lines_cmd(instance, cap, hint, svg_out, trace):
    """Partition colored lines into colorful triples with a common point."""
    parsed = parse_instance(_read_instance(instance))
    if not isinstance(parsed.instance, LineInstance):
        raise click.UsageError("solve-lines needs a lines2d instance")
    hint_point = _parse_hint(hint) if hint else parsed.hint
    solution = solve_lines(parsed.instance, cap=cap, hint=hint_point)
    if trace:
        _echo_trace(solution.circle)
    for pos, triple in enumerate(solution.triples, start=1):
        labels = ",".join(str(i) for i in triple)
        click.echo(f"triple {pos}: lines {labels}")
    away = ",".join(map(str, solution.away_lines)) or "none"
    click.echo(f"far-side lines: {away}")
    click.echo(
        f"witness: ({_rat_str(solution.witness[0])}, {_rat_str(solution.witness[1])})"
    )
    _write_svg(svg_out, solution)


@main.command("solve-circle")
@click.argument("instance", type=str)
@click.option("--cap", default=DEFAULT_CAP, show_default=True)
@click.option("--svg-out", default=None, type=str)
@click.option("--trace", is_flag=True)
@_with_exit_codes
def solve_circle_cmd(instance, cap, svg_out, trace):
    """Partition colored circle points into colorful triples with
    consecutive middle points."""
    parsed = parse_instance(_read_instance(instance))
    if not isinstance(parsed.instance, CircleInstance):
        raise click.UsageError("solve-circle needs a circle instance")
    solution = solve_circle(parsed.instance, cap=cap)
    if trace:
        _echo_trace(solution)
    _echo_circle_solution(solution)
    _write_svg(svg_out, solution)


@main.command("oracle")
@click.argument("instance", type=str)
@click.option("--cap", default=ORACLE_CAP, show_default=True)
@_with_exit_codes
def oracle_cmd(instance, cap):
    """List every colorful partition with consecutive middle points."""
    parsed = parse_instance(_read_instance(instance))
    if not isinstance(parsed.instance, CircleInstance):
        raise click.UsageError("oracle needs a circle instance")
    found = oracle_solve(parsed.instance, cap=cap)
    click.echo(f"{len(found)} partitions with consecutive middle points")
    for ann in found:
        triples = " ".join(
            "(" + ",".join(map(str, t)) + ")" for t in ann.partition.triples
        )
        click.echo(triples)


@main.command("verify-figure1")
@_with_exit_codes
def verify_figure1_cmd():
    """Check the bundled six-line set: every colorful partition gives two
    disjoint triangles, and the set is not in convex position."""
    report = verify_figure1()
    for verdict in report.partitions:
        first = ",".join(map(str, verdict.first))
        second = ",".join(map(str, verdict.second))
        status = "disjoint" if verdict.disjoint else "INTERSECTING"
        click.echo(f"{{{first}}} | {{{second}}}: {status}")
    click.echo(f"not in convex position: {report.not_convex_position}")
    if not report.ok:
        click.echo("verification FAILED", err=True)
        sys.exit(EXIT_VERIFIER_MISMATCH)
    click.echo("all 4 partitions verified")


@main.command("verify-octahedron")
@click.option("--max-t", default=4, show_default=True)
@click.option("--cap", default=4, show_default=True)
@_with_exit_codes
def verify_octahedron_cmd(max_t, cap):
    """Search facet multisets covering every octahedron vertex exactly t
    times; feasible only for even t."""
    failed = False
    for t in range(1, max_t + 1):
        result = octahedron_cover_search(t, cap=cap)
        expected = t % 2 == 0
        status = "feasible" if result.feasible else "infeasible"
        ok = result.feasible == expected
        if result.feasible:
            counts = result.witness_multiplicities()
            support = sorted(counts)
            adjacent = all(
                facets_vertex_adjacent(f, g)
                for i, f in enumerate(support)
                for g in support[i + 1 :]
            )
            detail = " witness=" + ",".join(
                f"{f}x{counts[f]}" for f in support
            ) + f" vertex-adjacent={adjacent}"
            ok = ok and adjacent and len(support) == 4
        else:
            detail = ""
        click.echo(f"t={t}: {status}{detail} [{'ok' if ok else 'MISMATCH'}]")
        failed = failed or not ok
    if failed:
        sys.exit(EXIT_VERIFIER_MISMATCH)


@main.command("verify-3d")
@_with_exit_codes
def verify_3d_cmd():
    """Recompute the eight-row sign-vector table for the bundled tangent
    planes and print it in row format."""
    position = verify_convex_position_3d()
    click.echo(f"general and convex position: {position.ok}")
    report = verify_table()
    for row in report.rows:
        partition = "(" + ",".join(str(i + 1) for i in row.partition) + ")"
        quad = "(" + ",".join(str(i + 1) for i in row.quad) + ")"
        status = "ok" if row.ok else "MISMATCH"
        click.echo(f"{partition} {row.computed_sum} {quad} [{status}]")
    if not (report.ok and position.ok):
        click.echo("verification FAILED", err=True)
        sys.exit(EXIT_VERIFIER_MISMATCH)
    click.echo("all 8 rows verified")


@main.command("verify-nonconvex")
@_with_exit_codes
def verify_nonconvex_cmd():
    """Check that the bundled non-convex six-line set admits an
    intersecting colorful partition for all 15 balanced colorings."""
    report = verify_nonconvex_example()
    for verdict in report.verdicts:
        colors = "".join(map(str, verdict.coloring))
        if verdict.ok:
            first, second = verdict.partition
            click.echo(
                f"coloring {colors}: {{{','.join(map(str, first))}}} | "
                f"{{{','.join(map(str, second))}}} intersect"
            )
        else:
            click.echo(f"coloring {colors}: NO intersecting partition")
    click.echo(f"not in convex position: {report.not_convex_position}")
    if not report.ok:
        click.echo("verification FAILED", err=True)
        sys.exit(EXIT_VERIFIER_MISMATCH)
    click.echo("all 15 colorings verified")


@main.command("gen")
@click.argument("kind", type=click.Choice(["lines2d", "circle", "planes3d"]))
@click.argument("k", type=int)
@click.option("--seed", default=0, show_default=True)
@click.option("--out", "-o", default=None, type=str)
@_with_exit_codes
def gen_cmd(kind, k, seed, out):
    """Generate a valid random instance file."""
    text = generate(kind, k, seed)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


@main.command("render")
@click.argument("instance", type=str)
@click.option("--cap", default=DEFAULT_CAP, show_default=True)
@click.option("--svg-out", required=True, type=str)
@_with_exit_codes
def render_cmd(instance, cap, svg_out):
    """Solve an instance and write an SVG rendering."""
    parsed = parse_instance(_read_instance(instance))
    if isinstance(parsed.instance, LineInstance):
        result = solve_lines(parsed.instance, cap=cap, hint=parsed.hint)
    elif isinstance(parsed.instance, CircleInstance):
        result = solve_circle(parsed.instance, cap=cap)
    else:
        raise click.UsageError("render needs a lines2d or circle instance")
    _write_svg(svg_out, result)


if __name__ == "__main__":
    main()
