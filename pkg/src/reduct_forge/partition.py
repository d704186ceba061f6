"""Indiscernibility partitions and the positive-region machinery on top of them.

Object sets are bitsets over ``0..n-1`` backed by Python big ints, so the
whole engine's set algebra is integer AND/OR.  Dependency degrees are exact
:class:`fractions.Fraction` values; nothing downstream ever compares floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .dataset import InformationSystem, conditional_attributes
from .errors import UnknownAttribute, UniverseMismatch


class ObjectSet:
    """Immutable set of object indices drawn from a fixed universe ``0..n-1``."""

    __slots__ = ("mask", "universe_size")

    def __init__(self, mask: int, universe_size: int):
        if mask < 0 or mask >> universe_size:
            raise ValueError("mask has bits outside the universe")
        object.__setattr__(self, "mask", mask)
        object.__setattr__(self, "universe_size", universe_size)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("ObjectSet is immutable")

    @classmethod
    def from_indices(cls, indices: Iterable[int], universe_size: int) -> "ObjectSet":
        mask = 0
        for i in indices:
            if not 0 <= i < universe_size:
                raise ValueError(f"object index {i} outside universe of {universe_size}")
            mask |= 1 << i
        return cls(mask, universe_size)

    @classmethod
    def full(cls, universe_size: int) -> "ObjectSet":
        return cls((1 << universe_size) - 1, universe_size)

    @classmethod
    def empty(cls, universe_size: int) -> "ObjectSet":
        return cls(0, universe_size)

    def _check(self, other: "ObjectSet") -> None:
        if self.universe_size != other.universe_size:
            raise UniverseMismatch(self.universe_size, other.universe_size)

    def __and__(self, other: "ObjectSet") -> "ObjectSet":
        self._check(other)
        return ObjectSet(self.mask & other.mask, self.universe_size)

    def __or__(self, other: "ObjectSet") -> "ObjectSet":
        self._check(other)
        return ObjectSet(self.mask | other.mask, self.universe_size)

    def __sub__(self, other: "ObjectSet") -> "ObjectSet":
        self._check(other)
        return ObjectSet(self.mask & ~other.mask, self.universe_size)

    def issubset(self, other: "ObjectSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __contains__(self, index: int) -> bool:
        return 0 <= index < self.universe_size and (self.mask >> index) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        mask = self.mask
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ObjectSet)
            and self.mask == other.mask
            and self.universe_size == other.universe_size
        )

    def __hash__(self) -> int:
        return hash((self.mask, self.universe_size))

    def min_element(self) -> int:
        if not self.mask:
            raise ValueError("empty set has no minimum element")
        return (self.mask & -self.mask).bit_length() - 1

    def indices(self) -> tuple[int, ...]:
        return tuple(self)

    def sort_key(self) -> tuple[int, int, tuple[int, ...]]:
        """Canonical family order: (min element, size, member indices)."""
        return (self.min_element(), len(self), self.indices())

    def __repr__(self) -> str:
        return "{" + ",".join(str(i) for i in self) + "}"


@dataclass(frozen=True)
class Partition:
    """Pairwise-disjoint nonempty blocks covering the universe.

    Blocks are kept sorted by their minimum element, so equality is plain
    positional comparison.
    """

    universe_size: int
    blocks: tuple[ObjectSet, ...]

    @classmethod
    def from_blocks(cls, blocks: Iterable[ObjectSet], universe_size: int) -> "Partition":
        ordered = sorted((b for b in blocks if b), key=lambda b: b.min_element())
        covered = 0
        for block in ordered:
            if block.universe_size != universe_size:
                raise UniverseMismatch(block.universe_size, universe_size)
            if covered & block.mask:
                raise ValueError("blocks are not pairwise disjoint")
            covered |= block.mask
        if covered != (1 << universe_size) - 1:
            raise ValueError("blocks do not cover the universe")
        return cls(universe_size, tuple(ordered))

    @classmethod
    def singletons(cls, universe_size: int) -> "Partition":
        return cls(
            universe_size,
            tuple(ObjectSet(1 << i, universe_size) for i in range(universe_size)),
        )

    @classmethod
    def trivial(cls, universe_size: int) -> "Partition":
        return cls(universe_size, (ObjectSet.full(universe_size),))

    def block_of(self, index: int) -> ObjectSet:
        for block in self.blocks:
            if index in block:
                return block
        raise ValueError(f"object {index} outside universe")

    def refines(self, other: "Partition") -> bool:
        """True when every block of self sits inside one block of other."""
        if self.universe_size != other.universe_size:
            raise UniverseMismatch(self.universe_size, other.universe_size)
        return all(block.issubset(other.block_of(block.min_element())) for block in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)


def _grouped_partition(keys: Sequence[object], universe_size: int) -> Partition:
    groups: dict[object, int] = {}
    for i, key in enumerate(keys):
        groups[key] = groups.get(key, 0) | (1 << i)
    blocks = sorted(groups.values(), key=lambda m: (m & -m).bit_length())
    return Partition(universe_size, tuple(ObjectSet(m, universe_size) for m in blocks))


def ind_partition(table: InformationSystem, attrs: Iterable[str]) -> Partition:
    """Group objects that agree on every attribute in ``attrs``.

    The empty attribute set discerns nothing and yields the one-block
    partition.
    """
    names = list(attrs)
    allowed = set(conditional_attributes(table))
    for name in names:
        if name not in allowed:
            raise UnknownAttribute(name)
    n = table.object_count
    if not names:
        return Partition.trivial(n)
    cols = [table.attributes.index(name) for name in names]
    keys = [tuple(row[c] for c in cols) for row in table.rows]
    return _grouped_partition(keys, n)


def decision_partition(table: InformationSystem) -> Partition:
    """Decision classes: singletons under the identity policy, else the
    grouping induced by the decision column."""
    n = table.object_count
    if table.decision is None:
        return Partition.singletons(n)
    return _grouped_partition(table.column(table.decision), n)


def meet(p: Partition, q: Partition) -> Partition:
    """Common refinement: all nonempty pairwise block intersections."""
    if p.universe_size != q.universe_size:
        raise UniverseMismatch(p.universe_size, q.universe_size)
    label_q: dict[int, int] = {}
    for j, block in enumerate(q.blocks):
        for x in block:
            label_q[x] = j
    groups: dict[tuple[int, int], int] = {}
    for i, block in enumerate(p.blocks):
        for x in block:
            key = (i, label_q[x])
            groups[key] = groups.get(key, 0) | (1 << x)
    blocks = sorted(groups.values(), key=lambda m: (m & -m).bit_length())
    return Partition(p.universe_size, tuple(ObjectSet(m, p.universe_size) for m in blocks))


def positive_region(cond: Partition, dec: Partition) -> ObjectSet:
    """Union of condition blocks wholly inside a single decision block."""
    if cond.universe_size != dec.universe_size:
        raise UniverseMismatch(cond.universe_size, dec.universe_size)
    mask = 0
    for block in cond.blocks:
        home = dec.block_of(block.min_element())
        if block.mask & ~home.mask == 0:
            mask |= block.mask
    return ObjectSet(mask, cond.universe_size)


def gamma(cond: Partition, dec: Partition) -> Fraction:
    """Dependency degree: |positive region| / |universe|, exact."""
    pos = positive_region(cond, dec)
    return Fraction(len(pos), cond.universe_size)
