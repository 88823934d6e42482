"""Color bookkeeping and colorful-partition combinatorics: the
transversal partition built from repeated 3x3 perfect matchings, and the
canonical enumeration of all colorful triple partitions."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from .errors import BadPartition, ContractViolation


@dataclass(frozen=True)
class Coloring:
    """A 3-coloring of elements 0..3k-1 with exactly k elements per color.

    `class_of[i]` is the color (1, 2 or 3) of element i.
    """

    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    k: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        class_of = tuple(self.class_of)
        object.__setattr__(self, "class_of", class_of)
        classes = tuple(
            tuple(i for i, c in enumerate(class_of) if c == color)
            for color in (1, 2, 3)
        )
        sizes = {len(cls) for cls in classes}
        if set(class_of) - {1, 2, 3}:
            raise BadPartition("colors must be 1, 2 or 3")
        if len(sizes) != 1 or sum(len(c) for c in classes) != len(class_of):
            raise BadPartition(
                f"color classes must have equal sizes, got {[len(c) for c in classes]}"
            )
        object.__setattr__(self, "classes", classes)
        object.__setattr__(self, "k", len(classes[0]))

    @staticmethod
    def from_classes(classes: Sequence[Iterable[int]]) -> "Coloring":
        listed = [tuple(c) for c in classes]
        if len(listed) != 3:
            raise BadPartition("expected exactly 3 color classes")
        n = sum(len(c) for c in listed)
        class_of = [0] * n
        for color, cls in enumerate(listed, start=1):
            for i in cls:
                if not 0 <= i < n or class_of[i] != 0:
                    raise BadPartition("classes must partition 0..n-1")
                class_of[i] = color
        return Coloring(tuple(class_of))

    def restrict(self, indices: Sequence[int]) -> "Coloring":
        """Coloring of the subset, reindexed by position in `indices`."""
        return Coloring(tuple(self.class_of[i] for i in indices))


def _normalize_triples(triples: Iterable[Iterable[int]]) -> tuple[tuple[int, int, int], ...]:
    canon = [tuple(sorted(t)) for t in triples]
    canon.sort()
    return tuple(canon)  # type: ignore[return-value]


@dataclass(frozen=True)
class TriplePartition:
    """A partition of 0..3k-1 into k disjoint 3-element sets, stored in
    canonical form: each triple sorted, triples sorted by first element."""

    triples: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        canon = _normalize_triples(self.triples)
        seen: set[int] = set()
        for t in canon:
            if len(t) != 3 or len(set(t)) != 3:
                raise BadPartition(f"not a 3-element set: {t}")
            seen.update(t)
        if seen != set(range(3 * len(canon))):
            raise BadPartition("triples must partition 0..3k-1")
        object.__setattr__(self, "triples", canon)

    @property
    def k(self) -> int:
        return len(self.triples)

    def is_colorful(self, coloring: Coloring) -> bool:
        return all(
            sorted(coloring.class_of[i] for i in t) == [1, 2, 3] for t in self.triples
        )


def transversal_partition(
    elements: Sequence[int],
    a_classes: Sequence[Iterable[int]],
    c_classes: Sequence[Iterable[int]],
) -> list[tuple[int, int, int]]:
    """Partition `elements` into triples meeting every A-class and every
    C-class exactly once.

    Both partitions must split the elements into 3 classes of equal size.
    Each round builds the 3x3 nonempty-intersection graph, takes the first
    perfect matching in permutation order (one exists by Hall's theorem
    because class sizes stay equal), extracts the lowest-index element per
    matched pair, and recurses on the rest.
    """
    a_sets = [set(c) for c in a_classes]
    c_sets = [set(c) for c in c_classes]
    ground = set(elements)
    if len(a_sets) != 3 or len(c_sets) != 3:
        raise BadPartition("expected 3 classes in each partition")
    if set().union(*a_sets) != ground or set().union(*c_sets) != ground:
        raise BadPartition("classes must partition the element set")
    if len({len(s) for s in a_sets}) != 1 or len({len(s) for s in c_sets}) != 1:
        raise BadPartition("class sizes must be equal")
    if len(a_sets[0]) != len(c_sets[0]):
        raise BadPartition("A-classes and C-classes must have the same size")

    triples: list[tuple[int, int, int]] = []
    while a_sets[0]:
        matched = None
        for perm in permutations(range(3)):
            if all(a_sets[i] & c_sets[perm[i]] for i in range(3)):
                matched = perm
                break
        if matched is None:
            raise ContractViolation("no perfect matching despite equal class sizes")
        chosen = tuple(min(a_sets[i] & c_sets[matched[i]]) for i in range(3))
        for i in range(3):
            a_sets[i].discard(chosen[i])
            c_sets[matched[i]].discard(chosen[i])
        triples.append(tuple(sorted(chosen)))  # type: ignore[arg-type]
    return triples


def enumerate_colorful_partitions(coloring: Coloring) -> Iterator[TriplePartition]:
    """All (k!)^2 partitions into colorful triples, in canonical order:
    color-1 elements fixed in index order, color-2 and color-3 assigned by
    permutations."""
    c1, c2, c3 = coloring.classes
    for perm2 in permutations(c2):
        for perm3 in permutations(c3):
            yield TriplePartition(
                tuple(
                    tuple(sorted((c1[i], perm2[i], perm3[i])))
                    for i in range(coloring.k)
                )
            )
