from .counting import OpCounts, OpCounter, CountedScalar, count_ops, counted_even_rank_sum, \
    counted_reduction_overhead
from .growth import growth_report, write_report, normalized_band, timed_even_rank_sum, float_even_rank_sum

__all__ = [
    'OpCounts', 'OpCounter', 'CountedScalar', 'count_ops', 'counted_even_rank_sum', 'counted_reduction_overhead',
    'growth_report', 'write_report', 'normalized_band', 'timed_even_rank_sum', 'float_even_rank_sum',
]
