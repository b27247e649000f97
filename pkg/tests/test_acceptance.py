"""
End-to-end sweeps over random and boundary instances.

The default run uses reduced instance counts; the ``slow`` marked variants run the full sizes.
"""
import numpy as np
import pytest

from conftest import random_instance, random_threshold
from ranklab.data import GeneratorSpec, generate
from ranklab.mingap import Decision, min_gap, min_gap_at_least
from ranklab.numeric import INFINITY, Scalar
from ranklab.oracle import even_rank_sum_counting
from ranklab.ranksum import even_rank_sum, rank_sums
from ranklab.reduction import lemma1_certificate, mingap_via_evenranksum

EPSILON = Scalar(1, 7)


def random_instances(count: int, seed: int = 2024):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        yield random_instance(rng, int(rng.integers(1, 64, endpoint=True))), random_threshold(rng)


def boundary_instances():
    for n in range(2, 65):
        g = Scalar(n, 3)
        yield generate(GeneratorSpec(kind='progression', n=n, g=g)), g, True
        yield generate(GeneratorSpec(kind='near-equal', n=n, seed=n, g=g, epsilon=EPSILON)), g, False


def check_instance(values, g, solvers=(even_rank_sum,)):
    certificate = lemma1_certificate(values, g)
    gap = min_gap(values)
    gap_ok = gap is INFINITY or gap.fraction >= g.fraction
    assert certificate.slack.fraction >= 0
    assert certificate.slack.is_zero() == gap_ok
    assert certificate.R + certificate.U == certificate.S + certificate.S + certificate.ng
    direct = min_gap_at_least(values, g).decision
    assert direct is certificate.decision
    for solver in solvers:
        assert mingap_via_evenranksum(values, g, solver) is direct
    return certificate


def test_lemma_random_sweep():
    for values, g in random_instances(1000):
        check_instance(values, g)


@pytest.mark.slow
def test_lemma_random_sweep_full():
    for values, g in random_instances(10000):
        check_instance(values, g)


def test_counting_solver_on_random_sweep():
    for values, g in random_instances(150, seed=7):
        check_instance(values, g, solvers=(even_rank_sum, even_rank_sum_counting))


@pytest.mark.slow
def test_counting_solver_on_random_sweep_full():
    for values, g in random_instances(10000):
        check_instance(values, g, solvers=(even_rank_sum, even_rank_sum_counting))


def test_boundary_instances():
    for values, g, tight in boundary_instances():
        certificate = check_instance(values, g, solvers=(even_rank_sum, even_rank_sum_counting))
        if tight:
            assert certificate.slack.is_zero() and certificate.decision is Decision.YES
            assert certificate.tight_pairs == len(values)
        else:
            assert certificate.slack.fraction > 0 and certificate.decision is Decision.NO


def test_shuffled_boundary_instances():
    rng = np.random.default_rng(5)
    for values, g, tight in boundary_instances():
        shuffled = [values[i] for i in rng.permutation(len(values))]
        assert check_instance(shuffled, g).decision is Decision.of(tight)


def test_permutation_invariance_sweep():
    rng = np.random.default_rng(99)
    for _ in range(100):
        values = random_instance(rng, int(rng.integers(0, 40, endpoint=True)))
        expected = rank_sums(values)
        for _ in range(10):
            assert rank_sums([values[i] for i in rng.permutation(len(values))]) == expected


@pytest.mark.slow
def test_permutation_invariance_sweep_full():
    rng = np.random.default_rng(100)
    for _ in range(100):
        values = random_instance(rng, int(rng.integers(0, 40, endpoint=True)))
        expected = rank_sums(values)
        for _ in range(1000):
            assert rank_sums([values[i] for i in rng.permutation(len(values))]) == expected
