import itertools

from hypothesis import given, settings

from conftest import S, sequences
from ranklab.mingap import min_gap
from ranklab.numeric import INFINITY, Scalar
from ranklab.oracle import even_rank_sum_counting, min_gap_allpairs, stable_ranks
from ranklab.ranksum import even_rank_sum


def test_counting_known_values():
    assert even_rank_sum_counting(S(2, 2)) == Scalar(2)
    assert even_rank_sum_counting(S(3, 1, 2, 4)) == Scalar(6)
    assert even_rank_sum_counting([]) == Scalar(0)
    assert even_rank_sum_counting(S(7)) == Scalar(0)


def test_stable_ranks_break_ties_by_position():
    assert stable_ranks(S(3, 1, 2, 4)) == [3, 1, 2, 4]
    assert stable_ranks(S(2, 2)) == [1, 2]
    assert stable_ranks(S(1, 0, 1, 0)) == [3, 1, 4, 2]


def test_allpairs_known_values():
    assert min_gap_allpairs(S(0, 5, 12)) == Scalar(5)
    assert min_gap_allpairs(S(1, 1)) == Scalar(0)
    assert min_gap_allpairs(S(9)) is INFINITY


@given(sequences)
@settings(max_examples=200)
def test_stable_ranks_are_a_bijection(values):
    assert sorted(stable_ranks(values)) == list(range(1, len(values) + 1))


def test_exhaustive_small_universe():
    # every tuple over {0, 1, 2} of length 1..6, plus the empty one
    checked = 0
    universe = S(0, 1, 2)
    assert even_rank_sum([]) == even_rank_sum_counting([])
    for m in range(1, 7):
        for values in itertools.product(universe, repeat=m):
            values = list(values)
            assert even_rank_sum(values) == even_rank_sum_counting(values), values
            assert min_gap(values) == min_gap_allpairs(values), values
            assert sorted(stable_ranks(values)) == list(range(1, m + 1))
            checked += 1
    assert checked == 1092
