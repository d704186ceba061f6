"""Significance-ordered backward elimination, plus the exhaustive oracle that
keeps it honest.

The elimination pass tests attributes in ascending-significance order and
drops each one whose removal leaves the full-attribute base intact.  The
redundancy check runs through the divide-and-conquer route: the candidate
base is composed from the bases of the low/high significance groups rather
than computed in one piece.  Removals compare against the base of the
original full attribute set throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .dataset import InformationSystem, conditional_attributes
from .errors import NotInRemaining, TooManyAttributes, UnknownAttribute
from .partition import ObjectSet, ind_partition
from .significance import (
    GroupPolicy,
    SignificanceTable,
    ThresholdSplit,
    rank_attributes,
    split_groups,
)
from .topology import SetFamily, compose_bases, family_equal, minimal_neighborhoods, subbase_of

DEFAULT_MAX_ATTRS = 20


@dataclass(frozen=True)
class TraceEntry:
    attribute: str
    significance: Fraction
    group: str  # "low" or "high"
    verdict: str  # "redundant" or "kept"
    base_size_before: int
    base_size_after: int


@dataclass(frozen=True)
class ReductResult:
    reduct: tuple[str, ...]  # kept attributes, in table column order
    removed: tuple[str, ...]  # eliminated attributes, in elimination order
    trace: tuple[TraceEntry, ...]
    verified_minimal: bool

    @property
    def reduct_set(self) -> frozenset[str]:
        return frozenset(self.reduct)


def _base_of(table: InformationSystem, attrs: Iterable[str]) -> SetFamily:
    names = list(attrs)
    n = table.object_count
    if not names:
        return SetFamily.from_sets([ObjectSet.full(n)], n)
    return minimal_neighborhoods(subbase_of(table, names))


def _composed_base(
    table: InformationSystem,
    attrs: set[str],
    grouping: SignificanceTable,
) -> SetFamily:
    low = [a for a in grouping.low_group if a in attrs]
    high = [a for a in grouping.high_group if a in attrs]
    return compose_bases(_base_of(table, low), _base_of(table, high))


def is_redundant(
    table: InformationSystem,
    attribute: str,
    remaining: Iterable[str],
    *,
    grouping: SignificanceTable | None = None,
) -> bool:
    """True when dropping the attribute from ``remaining`` preserves the base
    of the full conditional set."""
    cond = conditional_attributes(table)
    remaining_set = set(remaining)
    if attribute not in cond:
        raise UnknownAttribute(attribute)
    for name in remaining_set:
        if name not in cond:
            raise UnknownAttribute(name)
    if attribute not in remaining_set:
        raise NotInRemaining(attribute)
    if grouping is None:
        grouping = split_groups(rank_attributes(table))
    target = _base_of(table, cond)
    candidate = _composed_base(table, remaining_set - {attribute}, grouping)
    return family_equal(target, candidate)


def eliminate(
    table: InformationSystem, policy: GroupPolicy = ThresholdSplit()
) -> ReductResult:
    """Run the full elimination pass and verify minimality of the result.

    Each attribute is tested once, in ascending-significance order; a
    redundant attribute is removed immediately and stays removed.
    """
    cond = conditional_attributes(table)
    grouping = split_groups(rank_attributes(table), policy)
    target = _base_of(table, cond)
    low = set(grouping.low_group)

    remaining = set(cond)
    removed: list[str] = []
    trace: list[TraceEntry] = []
    for attribute, sig in grouping.ranked:
        candidate = _composed_base(table, remaining - {attribute}, grouping)
        redundant = family_equal(target, candidate)
        trace.append(
            TraceEntry(
                attribute=attribute,
                significance=sig,
                group="low" if attribute in low else "high",
                verdict="redundant" if redundant else "kept",
                base_size_before=len(target),
                base_size_after=len(candidate),
            )
        )
        if redundant:
            remaining.remove(attribute)
            removed.append(attribute)

    reduct = tuple(a for a in cond if a in remaining)
    full_ind = ind_partition(table, cond)
    minimal = all(
        ind_partition(table, [b for b in reduct if b != a]) != full_ind for a in reduct
    )
    return ReductResult(
        reduct=reduct,
        removed=tuple(removed),
        trace=tuple(trace),
        verified_minimal=minimal,
    )


def exhaustive_reducts(
    table: InformationSystem, max_attrs: int = DEFAULT_MAX_ATTRS
) -> frozenset[frozenset[str]]:
    """All minimal attribute subsets preserving the full partition.

    Brute-force enumeration by increasing cardinality, pruning supersets of
    reducts already found; refuses tables wider than ``max_attrs``.
    """
    cond = conditional_attributes(table)
    if len(cond) > max_attrs:
        raise TooManyAttributes(len(cond), max_attrs)
    target = ind_partition(table, cond)
    found: list[frozenset[str]] = []
    for size in range(len(cond) + 1):
        for combo in combinations(cond, size):
            candidate = frozenset(combo)
            if any(reduct <= candidate for reduct in found):
                continue
            if ind_partition(table, combo) == target:
                found.append(candidate)
    return frozenset(found)


def core_attributes(table: InformationSystem) -> frozenset[str]:
    """Attributes whose individual removal already coarsens the partition."""
    cond = conditional_attributes(table)
    target = ind_partition(table, cond)
    return frozenset(
        a for a in cond if ind_partition(table, [b for b in cond if b != a]) != target
    )
