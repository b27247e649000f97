"""
Growth of the counted sort cost with input size.

Each (size, trial) pair draws its own distinct-valued instance from ``numpy.random.default_rng([seed, m, trial])``
and runs on its own counter, so the table does not depend on trial order or on the worker count.
"""
import math
import time
import typing as th
from argparse import ArgumentParser
from concurrent.futures import ThreadPoolExecutor
from functools import partial, reduce

import numpy as np
import pandas as pd
import tqdm

from ranklab.costmodel.counting import OpCounts, counted_even_rank_sum
from ranklab.numeric import Scalar
from ranklab.utils import boolify, intlist

__all__ = [
    'REPORT_COLUMNS', 'DEFAULT_SIZES', 'DEFAULT_TRIALS', 'DEFAULT_SEED', 'distinct_instance', 'trial_counts',
    'growth_report', 'write_report', 'normalized_band', 'float_even_rank_sum', 'timed_even_rank_sum',
    'add_bench_args',
]

REPORT_COLUMNS = ['m', 'comparisons', 'additions', 'multiplications', 'divisions', 'total', 'normalized']
DEFAULT_SIZES = (256, 512, 1024)
DEFAULT_TRIALS = 20
DEFAULT_SEED = 7
VALUE_SPAN = 10 ** 9
FLOAT_FORMAT = '%.6f'
DEFAULT_REPEATS = 5


def distinct_instance(m: int, rng: np.random.Generator) -> th.List[Scalar]:
    # distinct values keep the comparison count free of tie effects
    return [Scalar(int(v)) for v in rng.choice(VALUE_SPAN, size=m, replace=False)]


def trial_counts(m: int, seed: int, trial: int) -> OpCounts:
    rng = np.random.default_rng([seed, m, trial])
    _, counts = counted_even_rank_sum(distinct_instance(m, rng))
    return counts


def _check_args(sizes: th.Sequence[int], trials: int) -> None:
    if not isinstance(sizes, (list, tuple, np.ndarray)):
        raise ValueError(f'sizes must be a list of integers, got {sizes!r}')
    if not len(sizes):
        raise ValueError('growth report needs at least one size')
    bad = [m for m in sizes if not isinstance(m, (int, np.integer)) or m < 2]
    if bad:
        raise ValueError(f'sizes must be integers >= 2, got {bad}')
    if not isinstance(trials, (int, np.integer)) or trials < 1:
        raise ValueError(f'trials must be a positive integer, got {trials}')


def growth_report(sizes: th.Sequence[int], trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
                  num_workers: int = 0, progress: bool = False) -> pd.DataFrame:
    """Mean operation counts per size and the mean total normalized by m*log2(m)."""
    _check_args(sizes, trials)
    rows = []
    for m in sizes:
        m = int(m)
        job = partial(trial_counts, m, seed)
        if num_workers and num_workers > 1:
            with ThreadPoolExecutor(max_workers=num_workers) as pool:
                counts = list(pool.map(job, range(trials)))
        else:
            counts = [job(t) for t in tqdm.tqdm(range(trials), desc=f'm={m}', ascii=True, disable=not progress)]
        summed = reduce(lambda a, b: a + b, counts, OpCounts())
        mean_total = summed.total() / trials
        rows.append(dict(
            m=m, **{key: value / trials for key, value in summed.as_dict().items()},
            total=mean_total, normalized=mean_total / (m * math.log2(m)),
        ))
    return pd.DataFrame(rows, columns=REPORT_COLUMNS)


def write_report(report: pd.DataFrame, out=None) -> th.Optional[str]:
    """CSV with the fixed column order; returns the text when ``out`` is None."""
    return report[REPORT_COLUMNS].to_csv(path_or_buf=out, index=False, float_format=FLOAT_FORMAT,
                                         lineterminator='\n')


def normalized_band(report: pd.DataFrame) -> float:
    """Largest relative deviation of the normalized column from its mean."""
    normalized = report['normalized'].to_numpy(dtype=float)
    center = normalized.mean()
    return float(np.abs(normalized - center).max() / center)


# --- native floating point path: realistic speed, unsound for the decision problem ---
def float_even_rank_sum(values: th.Sequence[Scalar]) -> float:
    array = np.fromiter((float(v.fraction) for v in values), dtype=float, count=len(values))
    return float(np.sort(array)[1::2].sum())


def timed_even_rank_sum(values: th.Sequence[Scalar], repeats: int = DEFAULT_REPEATS) -> float:
    """Best-of-``repeats`` seconds for one float even-rank-sum (conversion excluded)."""
    array = np.fromiter((float(v.fraction) for v in values), dtype=float, count=len(values))
    best = math.inf
    for _ in range(max(1, repeats)):
        start = time.perf_counter()
        np.sort(array)[1::2].sum()
        best = min(best, time.perf_counter() - start)
    return best


def add_bench_args(parent_parser):
    parser = ArgumentParser(parents=[parent_parser], add_help=False)
    parser.add_argument('--sizes', type=intlist, default=None, help='comma separated instance sizes, each >= 2')
    parser.add_argument('--trials', type=int, default=None, help='random instances per size')
    parser.add_argument('--seed', type=int, default=None, help='random seed')
    parser.add_argument('--out', type=str, default=None, help='csv output path (stdout if omitted)')
    parser.add_argument('--num-workers', type=int, default=None, help='threads used to run trials')
    parser.add_argument('--wall-clock', type=boolify, default=False,
                        help='also time the floating point even-rank-sum per size (stderr only)')
    parser.add_argument('--repeats', type=int, default=None, help='timing repeats for --wall-clock')
    return parser
