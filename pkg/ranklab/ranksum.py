"""
Even/odd rank sums through a comparison merge sort.

Positions are 1-based as in the sorted order b_1 <= ... <= b_m; even positions are 2, 4, ..., 2*floor(m/2),
so odd-length and empty inputs are accepted.
"""
import typing as th
from dataclasses import dataclass
from functools import reduce

from ranklab.numeric import Scalar, compare

__all__ = ['SortedView', 'RankSumResult', 'sort_view', 'rank_sums', 'even_rank_sum', 'odd_rank_sum']

Values = th.Sequence[Scalar]


@dataclass(frozen=True)
class SortedView:
    permutation: th.Tuple[int, ...]  # 1-based indices into the source sequence
    sorted_values: th.Tuple[Scalar, ...]

    def __len__(self):
        return len(self.permutation)

    def is_valid_for(self, source: Values) -> bool:
        m = len(source)
        if sorted(self.permutation) != list(range(1, m + 1)) or len(self.sorted_values) != m:
            return False
        if any(self.sorted_values[i] != source[p - 1] for i, p in enumerate(self.permutation)):
            return False
        return all(a.fraction <= b.fraction for a, b in zip(self.sorted_values, self.sorted_values[1:]))


@dataclass(frozen=True)
class RankSumResult:
    even_sum: Scalar  # R
    odd_sum: Scalar  # U
    length: int


def _merge(left: list, right: list) -> list:
    merged = []
    i = j = 0
    while i < len(left) and j < len(right):
        if compare(left[i][1], right[j][1]) <= 0:
            merged.append(left[i])
            i += 1
        else:
            merged.append(right[j])
            j += 1
    merged.extend(left[i:])
    merged.extend(right[j:])
    return merged


def _merge_sort(items: list) -> list:
    # top-down split keeps the worst case at m*ceil(log2 m) comparisons
    if len(items) <= 1:
        return items
    half = len(items) // 2
    return _merge(_merge_sort(items[:half]), _merge_sort(items[half:]))


def sort_view(seq: Values) -> SortedView:
    ordered = _merge_sort([(idx + 1, value) for idx, value in enumerate(seq)])
    return SortedView(
        permutation=tuple(idx for idx, _ in ordered),
        sorted_values=tuple(value for _, value in ordered),
    )


def _total(values: list, like: th.Optional[Scalar]) -> Scalar:
    if not values:
        return like.coerce(0) if like is not None else Scalar(0)
    return reduce(lambda a, b: a + b, values)


def rank_sums(seq: Values) -> RankSumResult:
    view = sort_view(seq)
    like = view.sorted_values[0] if view.sorted_values else None
    return RankSumResult(
        even_sum=_total(list(view.sorted_values[1::2]), like),
        odd_sum=_total(list(view.sorted_values[0::2]), like),
        length=len(view),
    )


def even_rank_sum(seq: Values) -> Scalar:
    """Sum of the elements at even positions of the sorted order (the EvenRankSum problem)."""
    return rank_sums(seq).even_sum


def odd_rank_sum(seq: Values) -> Scalar:
    return rank_sums(seq).odd_sum
