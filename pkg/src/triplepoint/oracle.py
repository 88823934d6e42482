"""Brute-force reference solver: enumerate every colorful partition and
keep those whose middle points are consecutive.

Consecutiveness is decided here by direct arc enumeration over pairs of
middle points, sharing only the kernel predicates with the constructive
solver, so the two paths certify each other.
"""

from __future__ import annotations

from .circle import AnnotatedPartition, CircleInstance, annotate
from .coloring import enumerate_colorful_partitions
from .errors import CapExceeded
from .geom import Arc, arc_contains_closed, icross

ORACLE_CAP = 4


def middles_consecutive(inst: CircleInstance, middles: tuple[int, ...]) -> bool:
    """Independent consecutiveness test: some clockwise arc shorter than a
    half turn, with middle points as endpoints, contains every middle
    point and no other instance point."""
    if len(middles) <= 1:
        return True
    middle_set = set(middles)
    others = [i for i in range(len(inst.points)) if i not in middle_set]
    for a in middles:
        for b in middles:
            if a == b or icross(inst.points[a], inst.points[b]) >= 0:
                continue  # not a clockwise sweep under a half turn
            arc = Arc(inst.points[a], inst.points[b])
            if not all(arc_contains_closed(inst.points[m], arc) for m in middles):
                continue
            if any(arc_contains_closed(inst.points[o], arc) for o in others):
                continue
            return True
    return False


def oracle_solve(inst: CircleInstance, cap: int = ORACLE_CAP) -> list[AnnotatedPartition]:
    """All colorful partitions with consecutive middle points, in
    canonical enumeration order."""
    if inst.k > cap:
        raise CapExceeded(
            f"oracle cap is k <= {cap}; got k={inst.k} ((k!)^2 partitions)"
        )
    found = []
    for partition in enumerate_colorful_partitions(inst.coloring):
        ann = annotate(inst, partition)
        if middles_consecutive(inst, ann.middles):
            found.append(ann)
    return found
