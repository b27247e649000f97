"""
Seeded instance generators.

``progression`` is the tight case of the gap bound (every gap exactly g); ``near-equal`` shortens one randomly
chosen gap of that progression by epsilon, the smallest possible step across the YES/NO boundary.
"""
import typing as th
from argparse import ArgumentParser
from dataclasses import dataclass

import numpy as np

from ranklab.numeric import Scalar, format_scalar
from ranklab.utils import KeyValue, as_scalar, boolify, scalar_arg, section

__all__ = ['KINDS', 'GeneratorError', 'GeneratorSpec', 'generate']

KINDS = ('uniform', 'progression', 'near-equal')
DEFAULT_LOW = -1000
DEFAULT_HIGH = 1000
DEFAULT_DENOMINATOR = 1
DEFAULT_START = '0'
DEFAULT_EPSILON = '1/7'


class GeneratorError(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    n: int
    seed: int = 0
    g: th.Optional[Scalar] = None
    start: Scalar = Scalar(0)
    low: int = DEFAULT_LOW
    high: int = DEFAULT_HIGH
    denominator: int = DEFAULT_DENOMINATOR
    epsilon: Scalar = Scalar(1, 7)
    shuffle: bool = False

    def header(self) -> th.List[str]:
        fields = [f'kind={self.kind}', f'n={self.n}', f'seed={self.seed}']
        if self.kind == 'uniform':
            fields += [f'low={self.low}', f'high={self.high}', f'denominator={self.denominator}']
        else:
            fields += [f'g={format_scalar(self.g)}', f'start={format_scalar(self.start)}']
        if self.kind == 'near-equal':
            fields.append(f'epsilon={format_scalar(self.epsilon)}')
        if self.shuffle:
            fields.append('shuffle=true')
        return [' '.join(fields)]

    @staticmethod
    def from_args(args, config: th.Optional[dict] = None) -> 'GeneratorSpec':
        """CLI flags first, then ``--params``, then the config's ``generator`` section, then defaults."""
        defaults = section(config or dict(), 'generator')
        params = dict(defaults, **(getattr(args, 'params', None) or dict()))
        try:
            return GeneratorSpec(
                kind=args.kind, n=args.n, seed=args.seed,
                g=args.g,
                start=as_scalar(params.get('start', DEFAULT_START)),
                low=int(params.get('low', DEFAULT_LOW)),
                high=int(params.get('high', DEFAULT_HIGH)),
                denominator=int(params.get('denominator', DEFAULT_DENOMINATOR)),
                epsilon=as_scalar(params.get('epsilon', DEFAULT_EPSILON)),
                shuffle=args.shuffle if args.shuffle is not None else bool(params.get('shuffle', False)),
            )
        except (TypeError, ValueError) as e:
            raise GeneratorError(f'invalid generator parameters: {e}')

    @staticmethod
    def add_generator_args(parent_parser):
        parser = ArgumentParser(parents=[parent_parser], add_help=False)
        parser.add_argument('--kind', type=str, required=True, choices=KINDS, help='instance family')
        parser.add_argument('--n', type=int, required=True, help='number of values')
        parser.add_argument('--seed', type=int, default=0, help='random seed')
        parser.add_argument('--g', type=scalar_arg, default=None, help='gap for progression and near-equal kinds')
        parser.add_argument('--shuffle', type=boolify, default=None, help='emit the values in seeded random order')
        parser.add_argument('--params', nargs='*', action=KeyValue, default=dict(),
                            help='extra generator parameters (low, high, denominator, start, epsilon)')
        return parser


def _progression(spec: GeneratorSpec) -> th.List[Scalar]:
    return [spec.start + Scalar(i) * spec.g for i in range(spec.n)]


def generate(spec: GeneratorSpec) -> th.List[Scalar]:
    if spec.kind not in KINDS:
        raise GeneratorError(f'unknown generator kind {spec.kind!r}, expected one of {KINDS}')
    if spec.n < 0:
        raise GeneratorError(f'n must be non-negative, got {spec.n}')
    rng = np.random.default_rng(spec.seed)
    if spec.kind == 'uniform':
        if spec.low > spec.high or spec.denominator < 1:
            raise GeneratorError('uniform needs low <= high and a positive denominator')
        values = [Scalar(int(v), spec.denominator)
                  for v in rng.integers(spec.low, spec.high, size=spec.n, endpoint=True)]
    else:
        if spec.g is None:
            raise GeneratorError(f'{spec.kind} instances need --g')
        if not spec.g.is_positive():
            raise GeneratorError(f'{spec.kind} instances need g > 0')
        values = _progression(spec)
        if spec.kind == 'near-equal':
            if spec.n < 2:
                raise GeneratorError('near-equal instances need n >= 2')
            if not spec.epsilon.is_positive() or spec.epsilon.fraction > spec.g.fraction:
                raise GeneratorError('near-equal instances need 0 < epsilon <= g')
            shortened = int(rng.integers(1, spec.n))  # gap between positions shortened and shortened + 1
            values = values[:shortened] + [value - spec.epsilon for value in values[shortened:]]
    if spec.shuffle:
        values = [values[i] for i in rng.permutation(len(values))]
    return values
