"""Positive-region significance: how much each attribute contributes to
discernment, and the low/high grouping used by the elimination pass."""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Union

from .dataset import InformationSystem, conditional_attributes
from .errors import UnknownAttribute
from .partition import decision_partition, gamma, ind_partition


@dataclass(frozen=True)
class ThresholdSplit:
    """Low group = attributes with significance strictly below ``value``.

    ``value=None`` uses the maximum significance present, so the top tier is
    never in the low group.
    """

    value: Fraction | None = None


@dataclass(frozen=True)
class CountSplit:
    """Low group = the first ``count`` attributes of the ranked order."""

    count: int


GroupPolicy = Union[ThresholdSplit, CountSplit]


@dataclass(frozen=True)
class SignificanceTable:
    """Per-attribute significance in ranked (ascending) order.

    ``low_group``/``high_group`` are empty until :func:`split_groups` fills
    them; together they always partition the conditional attributes.
    """

    ranked: tuple[tuple[str, Fraction], ...]
    low_group: tuple[str, ...] = ()
    high_group: tuple[str, ...] = ()

    @property
    def attributes(self) -> tuple[str, ...]:
        return tuple(a for a, _ in self.ranked)

    def significance_of(self, attribute: str) -> Fraction:
        for a, value in self.ranked:
            if a == attribute:
                return value
        raise UnknownAttribute(attribute)


def significance(table: InformationSystem, attribute: str) -> Fraction:
    """Dependency-degree drop caused by removing the attribute.

    Computed against the full conditional set, so the value is nonnegative by
    monotonicity and zero exactly when the attribute adds no positive-region
    objects.
    """
    cond = conditional_attributes(table)
    if attribute not in cond:
        raise UnknownAttribute(attribute)
    dec = decision_partition(table)
    with_all = gamma(ind_partition(table, cond), dec)
    without = gamma(ind_partition(table, [a for a in cond if a != attribute]), dec)
    return with_all - without


def rank_attributes(table: InformationSystem) -> SignificanceTable:
    """All conditional attributes sorted by ascending significance.

    The sort is stable with respect to table column order, which is the only
    tie-break.  Significance is computed once, on the full table.
    """
    cond = conditional_attributes(table)
    dec = decision_partition(table)
    with_all = gamma(ind_partition(table, cond), dec)
    values = []
    for attribute in cond:
        without = gamma(ind_partition(table, [a for a in cond if a != attribute]), dec)
        values.append((attribute, with_all - without))
    values.sort(key=lambda pair: pair[1])
    return SignificanceTable(ranked=tuple(values))


def split_groups(
    ranked: SignificanceTable, policy: GroupPolicy = ThresholdSplit()
) -> SignificanceTable:
    """Assign the ranked attributes to a low-significance prefix and the rest."""
    if isinstance(policy, CountSplit):
        if not 0 <= policy.count <= len(ranked.ranked):
            raise ValueError(
                f"count {policy.count} outside [0, {len(ranked.ranked)}]"
            )
        cut = policy.count
    else:
        threshold = policy.value
        if threshold is None:
            threshold = max((v for _, v in ranked.ranked), default=Fraction(0))
        cut = sum(1 for _, v in ranked.ranked if v < threshold)
    low = tuple(a for a, _ in ranked.ranked[:cut])
    high = tuple(a for a, _ in ranked.ranked[cut:])
    return replace(ranked, low_group=low, high_group=high)
