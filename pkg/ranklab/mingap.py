import typing as th
from dataclasses import dataclass
from enum import Enum

from ranklab.numeric import Scalar, INFINITY, compare
from ranklab.ranksum import sort_view

__all__ = ['Decision', 'GapReport', 'min_gap', 'min_gap_at_least']


class Decision(str, Enum):
    YES = 'YES'
    NO = 'NO'

    @classmethod
    def of(cls, flag: bool) -> 'Decision':
        return cls.YES if flag else cls.NO

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class GapReport:
    min_gap: th.Any  # Scalar, or INFINITY when there are fewer than two elements
    threshold: Scalar
    decision: Decision


def min_gap(seq: th.Sequence[Scalar]):
    """Smallest difference between consecutive elements of the sorted sequence (INFINITY if m < 2)."""
    values = sort_view(seq).sorted_values
    best = INFINITY
    for lower, upper in zip(values, values[1:]):
        gap = upper - lower
        if best is INFINITY or compare(gap, best) < 0:
            best = gap
    return best


def min_gap_at_least(seq: th.Sequence[Scalar], g: Scalar) -> GapReport:
    # sorted gaps are never negative, so g <= 0 always lands on YES; fewer than two elements is a vacuous YES
    gap = min_gap(seq)
    return GapReport(min_gap=gap, threshold=g, decision=Decision.of(gap is INFINITY or compare(gap, g) >= 0))
