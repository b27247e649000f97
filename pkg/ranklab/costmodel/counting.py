"""
Operation counting for exact-arithmetic algorithms.

A run is instrumented by wrapping its inputs in :class:`CountedScalar` bound to one :class:`OpCounter`;
every value derived from them stays bound to the same counter, so each comparison and rational
operation is charged exactly once, to that run only. Costs are per node of the computation: a rational
operation is one unit whatever the size of its numerator and denominator.
"""
import typing as th
from dataclasses import dataclass, fields
from fractions import Fraction

from ranklab.numeric import Scalar
from ranklab.ranksum import even_rank_sum
from ranklab.reduction import check_threshold, interleave, reduction_decide, reduction_sum

__all__ = [
    'OpCounts', 'OpCounter', 'CountedScalar', 'counted', 'uncounted', 'count_ops',
    'counted_even_rank_sum', 'counted_reduction_overhead',
]


@dataclass(frozen=True)
class OpCounts:
    comparisons: int = 0
    additions: int = 0  # subtractions and negations included
    multiplications: int = 0
    divisions: int = 0

    def total(self) -> int:
        return self.comparisons + self.additions + self.multiplications + self.divisions

    def __add__(self, other: 'OpCounts') -> 'OpCounts':
        return OpCounts(**{f.name: getattr(self, f.name) + getattr(other, f.name) for f in fields(self)})

    def as_dict(self) -> th.Dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


class OpCounter:
    """Mutable tallies for one instrumented execution; never share one between concurrent runs."""

    def __init__(self):
        self.comparisons = 0
        self.additions = 0
        self.multiplications = 0
        self.divisions = 0

    def tick(self, kind: str) -> None:
        setattr(self, kind, getattr(self, kind) + 1)

    def snapshot(self) -> OpCounts:
        return OpCounts(self.comparisons, self.additions, self.multiplications, self.divisions)

    def __repr__(self):
        return f'OpCounter({self.snapshot()})'


class CountedScalar(Scalar):
    __slots__ = ('counter',)
    counted = True

    def __init__(self, value: th.Union[int, Fraction, Scalar], counter: OpCounter):
        super().__init__(value)
        self.counter = counter

    def _charge(self, kind: str) -> None:
        self.counter.tick(kind)

    def _make(self, value: Fraction) -> 'CountedScalar':
        return CountedScalar(value, self.counter)

    def __reduce__(self):
        return CountedScalar, (self.fraction, self.counter)


def counted(values: th.Iterable[Scalar], counter: OpCounter) -> th.List[CountedScalar]:
    return [CountedScalar(value, counter) for value in values]


def uncounted(value):
    return Scalar(value) if isinstance(value, Scalar) else value


def count_ops(fn: th.Callable, seq: th.Sequence[Scalar], *args) -> th.Tuple[th.Any, OpCounts]:
    """Run ``fn(seq, *args)`` on a fresh counter; scalar results come back unwrapped."""
    counter = OpCounter()
    result = fn(counted(seq, counter), *args)
    return uncounted(result), counter.snapshot()


def counted_even_rank_sum(seq: th.Sequence[Scalar]) -> th.Tuple[Scalar, OpCounts]:
    return count_ops(even_rank_sum, seq)


def counted_reduction_overhead(xs: th.Sequence[Scalar], g: Scalar,
                               solver: th.Callable[[th.Sequence[Scalar]], Scalar] = even_rank_sum) -> OpCounts:
    """Counts of steps 1 and 3 only; the solver runs on unwrapped values and is not charged."""
    check_threshold(g)
    counter = OpCounter()
    cxs, cg = counted(xs, counter), CountedScalar(g, counter)
    pairs = interleave(cxs, cg)
    S = reduction_sum(cxs, cg)
    R = solver([uncounted(a) for a in pairs])
    reduction_decide(uncounted(R), S, len(xs), cg)
    return counter.snapshot()
