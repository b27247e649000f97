"""
Brute-force references for the fast paths.

Neither function sorts: even-rank-sum ranks every element by counting, min-gap looks at every pair.
Both are quadratic and only meant as ground truth.
"""
import typing as th

from ranklab.numeric import INFINITY, Scalar, compare

__all__ = ['stable_ranks', 'even_rank_sum_counting', 'min_gap_allpairs']


def stable_ranks(seq: th.Sequence[Scalar]) -> th.List[int]:
    """rank(i) = #{j : a_j < a_i} + #{j < i : a_j = a_i} + 1, one three-way test per ordered pair."""
    ranks = []
    for i, value in enumerate(seq):
        rank = 1
        for j, other in enumerate(seq):
            if i == j:
                continue
            order = compare(other, value)
            if order < 0 or (order == 0 and j < i):
                rank += 1
        ranks.append(rank)
    return ranks


def even_rank_sum_counting(seq: th.Sequence[Scalar]) -> Scalar:
    total = None
    for value, rank in zip(seq, stable_ranks(seq)):
        if rank % 2 == 0:
            total = value if total is None else total + value
    if total is None:
        return seq[0].coerce(0) if len(seq) else Scalar(0)
    return total


def min_gap_allpairs(seq: th.Sequence[Scalar]):
    best = INFINITY
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            distance = abs(seq[i] - seq[j])
            if best is INFINITY or compare(distance, best) < 0:
                best = distance
    return best
