"""Plain-text instance files with exact rational coordinates, plus the
seeded instance generators.

Format: a header (`kind`, `k`, `colors`), one record line per object, and
an optional `hint` line for lines2d instances. Rationals are written as
`num` or `num/den` tokens; floats are rejected.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .circle import CircleInstance
from .coloring import Coloring
from .errors import BadPartition, ParseError, ValidationError
from .geom import CirclePoint, Line2
from .lines import LineInstance, Point2, find_witness_cell
from .space3d import PLANE_COLORING, Plane3, builtin_tangent_planes

KINDS = ("lines2d", "circle", "planes3d")

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


@dataclass(frozen=True)
class PlanesConfig:
    """A planes3d instance: 8 planes with a 4-coloring."""

    planes: tuple[Plane3, ...]
    coloring: tuple[int, ...]
    color_names: tuple[str, ...]


@dataclass(frozen=True)
class ParsedInstance:
    kind: str
    color_names: tuple[str, ...]
    instance: CircleInstance | LineInstance | PlanesConfig
    hint: Optional[Point2] = None


def _parse_rational(token: str, line_no: int, column: int) -> Fraction:
    if not _RATIONAL_RE.match(token):
        raise ParseError(
            f"expected rational 'num' or 'num/den', got {token!r}", line_no, column
        )
    if "/" in token:
        num, den = token.split("/")
        if int(den) == 0:
            raise ParseError("zero denominator", line_no, column)
        return Fraction(int(num), int(den))
    return Fraction(int(token))


def parse_instance(text: str) -> ParsedInstance:
    """Parse and eagerly validate an instance file."""
    kind: Optional[str] = None
    k: Optional[int] = None
    color_names: Optional[tuple[str, ...]] = None
    records: list[tuple[int, list[str]]] = []
    hint: Optional[Point2] = None

    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        tokens = stripped.split()
        keyword, args = tokens[0], tokens[1:]
        if keyword == "kind":
            if len(args) != 1 or args[0] not in KINDS:
                raise ParseError(
                    f"kind must be one of {', '.join(KINDS)}", line_no, 1
                )
            kind = args[0]
        elif keyword == "k":
            if len(args) != 1 or not args[0].isdigit() or int(args[0]) < 1:
                raise ParseError("k must be a positive integer", line_no, 1)
            k = int(args[0])
        elif keyword == "colors":
            color_names = tuple(args)
        elif keyword in ("line", "point", "plane"):
            records.append((line_no, tokens))
        elif keyword == "hint":
            if len(args) != 2:
                raise ParseError("hint takes two rationals", line_no, 1)
            hint = (
                _parse_rational(args[0], line_no, 2),
                _parse_rational(args[1], line_no, 3),
            )
        else:
            raise ParseError(f"unknown field {keyword!r}", line_no, 1)

    if kind is None:
        raise ParseError("missing 'kind' header", 1, 1)
    if k is None:
        raise ParseError("missing 'k' header", 1, 1)
    if color_names is None:
        raise ParseError("missing 'colors' header", 1, 1)
    expected_colors = 4 if kind == "planes3d" else 3
    if len(color_names) != expected_colors:
        raise ValidationError(
            f"{kind} instances need {expected_colors} color names, "
            f"got {len(color_names)}"
        )
    if len(set(color_names)) != len(color_names):
        raise ValidationError("duplicate color names")

    keyword_for_kind = {"lines2d": "line", "circle": "point", "planes3d": "plane"}
    coeff_count = {"lines2d": 3, "circle": 2, "planes3d": 4}
    expected_records = 8 if kind == "planes3d" else 3 * k
    if len(records) != expected_records:
        raise ValidationError(
            f"count mismatch: expected {expected_records} records, got {len(records)}"
        )

    coeffs: list[tuple[Fraction, ...]] = []
    colors: list[int] = []
    for line_no, tokens in records:
        keyword, args = tokens[0], tokens[1:]
        if keyword != keyword_for_kind[kind]:
            raise ParseError(
                f"record keyword {keyword!r} does not match kind {kind!r}", line_no, 1
            )
        want = coeff_count[kind]
        if len(args) != want + 1:
            raise ParseError(
                f"expected {want} rationals and a color label", line_no, 1
            )
        coeffs.append(
            tuple(
                _parse_rational(tok, line_no, col)
                for col, tok in enumerate(args[:want], start=2)
            )
        )
        label = args[want]
        if label not in color_names:
            raise ParseError(f"unknown color label {label!r}", line_no, want + 2)
        colors.append(color_names.index(label) + 1)

    if hint is not None and kind != "lines2d":
        raise ValidationError("hint only applies to lines2d instances")

    if kind == "planes3d":
        counts = [colors.count(c) for c in range(1, 5)]
        if counts != [2, 2, 2, 2]:
            raise ValidationError(f"wrong class sizes: {counts}, expected 2 each")
        planes = tuple(Plane3(*c) for c in coeffs)
        return ParsedInstance(
            kind=kind,
            color_names=color_names,
            instance=PlanesConfig(planes, tuple(colors), color_names),
        )

    try:
        coloring = Coloring(tuple(colors))
    except BadPartition as exc:
        raise ValidationError(f"wrong class sizes: {exc}") from exc
    if coloring.k != k:
        raise ValidationError(
            f"count mismatch: header k={k} but classes have size {coloring.k}"
        )
    if kind == "circle":
        inst = CircleInstance(tuple(CirclePoint(*c) for c in coeffs), coloring)
        return ParsedInstance(kind=kind, color_names=color_names, instance=inst)
    inst = LineInstance(tuple(Line2(*c) for c in coeffs), coloring)
    return ParsedInstance(
        kind=kind, color_names=color_names, instance=inst, hint=hint
    )


def _format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


DEFAULT_COLOR_NAMES = ("red", "blue", "green", "orange")


def format_instance(parsed: ParsedInstance) -> str:
    """Serialize an instance; parse(format(x)) reproduces x exactly."""
    lines = [f"kind {parsed.kind}"]
    inst = parsed.instance
    if isinstance(inst, PlanesConfig):
        lines.append("k 2")
        lines.append("colors " + " ".join(parsed.color_names))
        for plane, color in zip(inst.planes, inst.coloring):
            coeffs = (plane.a, plane.b, plane.c, plane.d)
            lines.append(
                "plane "
                + " ".join(_format_rational(c) for c in coeffs)
                + f" {parsed.color_names[color - 1]}"
            )
    else:
        lines.append(f"k {inst.coloring.k}")
        lines.append("colors " + " ".join(parsed.color_names))
        if isinstance(inst, CircleInstance):
            for point, color in zip(inst.points, inst.coloring.class_of):
                lines.append(
                    f"point {_format_rational(point.dx)} {_format_rational(point.dy)} "
                    f"{parsed.color_names[color - 1]}"
                )
        else:
            for line, color in zip(inst.lines, inst.coloring.class_of):
                lines.append(
                    f"line {_format_rational(line.a)} {_format_rational(line.b)} "
                    f"{_format_rational(line.c)} {parsed.color_names[color - 1]}"
                )
    if parsed.hint is not None:
        lines.append(
            f"hint {_format_rational(parsed.hint[0])} {_format_rational(parsed.hint[1])}"
        )
    return "\n".join(lines) + "\n"


def _sample_circle_parameters(rng: random.Random, count: int) -> list[Fraction]:
    """Distinct rational parameters t; the direction of parameter t is
    (1 - t^2, 2t), so distinct t give distinct points and antipodal pairs
    need t2 = -1/t1, which is checked exactly."""
    chosen: list[Fraction] = []
    while len(chosen) < count:
        t = Fraction(rng.randint(-300, 300), rng.randint(1, 60))
        if any(t == u or (u != 0 and t == -1 / u) for u in chosen):
            continue
        chosen.append(t)
    return chosen


def _shuffled_colors(rng: random.Random, k: int) -> list[int]:
    colors = [1] * k + [2] * k + [3] * k
    rng.shuffle(colors)
    return colors


def generate(kind: str, k: int, seed: int) -> str:
    """Deterministically generate a valid instance file.

    lines2d instances are tangent lines to the unit circle at distinct
    rational points, which makes convex position automatic; the result is
    still certified before returning."""
    if kind not in KINDS:
        raise ValidationError(f"unknown kind {kind!r}")
    if k < 1:
        raise ValidationError("k must be positive")
    rng = random.Random(seed)
    names = DEFAULT_COLOR_NAMES
    if kind == "planes3d":
        planes, coloring = builtin_tangent_planes()
        parsed = ParsedInstance(
            kind=kind,
            color_names=names[:4],
            instance=PlanesConfig(planes, PLANE_COLORING, names[:4]),
        )
        return format_instance(parsed)

    params = _sample_circle_parameters(rng, 3 * k)
    colors = _shuffled_colors(rng, k)
    coloring = Coloring(tuple(colors))
    if kind == "circle":
        points = tuple(CirclePoint(1 - t * t, 2 * t) for t in params)
        inst: CircleInstance | LineInstance = CircleInstance(points, coloring)
    else:
        lines = []
        for t in params:
            p, q = t.numerator, t.denominator
            # Tangent to the unit circle at ((1-t^2)/(1+t^2), 2t/(1+t^2)).
            lines.append(Line2(q * q - p * p, 2 * p * q, q * q + p * p))
        inst = LineInstance(tuple(lines), coloring)
        find_witness_cell(inst.lines)  # certify convex position
    return format_instance(
        ParsedInstance(kind=kind, color_names=names[:3], instance=inst)
    )
