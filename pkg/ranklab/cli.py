"""
Command line front end.

Exit codes are the same for every command: 0 for success or YES, 1 for NO, 2 for any error.
Results go to stdout as exact scalar text (or JSON with scalars as strings); status goes to stderr.
"""
import json
import sys
import typing as th
from argparse import ArgumentParser

import numpy as np

from ranklab.costmodel import growth
from ranklab.data import GeneratorSpec, generate, read_instance, write_instance
from ranklab.mingap import Decision, min_gap_at_least
from ranklab.numeric import format_scalar
from ranklab.ranksum import even_rank_sum, rank_sums
from ranklab.reduction import lemma1_certificate, mingap_via_evenranksum
from ranklab.utils import boolify, load_config, scalar_arg, section, status

EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2
VIA = ('direct', 'reduction')


def _exit_code(decision: Decision) -> int:
    return EXIT_YES if decision is Decision.YES else EXIT_NO


def _emit(payload: th.Union[str, dict], as_json: bool = False):
    if as_json:
        print(json.dumps(payload))
    else:
        print(payload)


def _lines(record: th.Dict[str, str]) -> str:
    return '\n'.join(f'{key}={value}' for key, value in record.items())


def run_sum(args, config) -> int:
    value = format_scalar(even_rank_sum(read_instance(args.file)))
    _emit({'even_rank_sum': value} if args.json else value, args.json)
    return EXIT_YES


def run_ranksums(args, config) -> int:
    result = rank_sums(read_instance(args.file))
    record = dict(even_sum=format_scalar(result.even_sum), odd_sum=format_scalar(result.odd_sum))
    if args.json:
        _emit(dict(record, length=result.length), True)
    else:
        _emit(_lines(dict(record, length=str(result.length))))
    return EXIT_YES


def run_mingap(args, config) -> int:
    values = read_instance(args.file)
    if args.via == 'direct':
        report = min_gap_at_least(values, args.g)
        decision = report.decision
        record = dict(min_gap=format_scalar(report.min_gap), g=format_scalar(args.g))
    else:
        decision = mingap_via_evenranksum(values, args.g)
        certificate = lemma1_certificate(values, args.g)
        assert certificate.decision is decision, f'reduction said {decision}, certificate {certificate.decision}'
        full = certificate.as_record()
        record = {key: full[key] for key in ('S', 'R', 'ng', 'slack')}
    status(f'{len(values)} values, via {args.via}', verbose=args.verbose)
    if args.json:
        _emit(dict(decision=str(decision), via=args.via, **record), True)
    else:
        _emit(f'{decision}\n{_lines(record)}')
    return _exit_code(decision)


def run_certify(args, config) -> int:
    certificate = lemma1_certificate(read_instance(args.file), args.g)
    _emit(certificate.as_json() if args.json else certificate.to_text(), args.json)
    return _exit_code(certificate.decision)


def run_gen(args, config) -> int:
    spec = GeneratorSpec.from_args(args, config)
    values = generate(spec)
    write_instance(values, args.out or sys.stdout, header=spec.header())
    if args.out:
        status(f'wrote {len(values)} values to {args.out}', verbose=args.verbose)
    return EXIT_YES


def run_bench(args, config) -> int:
    defaults = section(config, 'bench')
    sizes = args.sizes if args.sizes is not None else defaults.get('sizes', list(growth.DEFAULT_SIZES))
    trials = args.trials if args.trials is not None else defaults.get('trials', growth.DEFAULT_TRIALS)
    seed = args.seed if args.seed is not None else defaults.get('seed', growth.DEFAULT_SEED)
    workers = args.num_workers if args.num_workers is not None else defaults.get('num_workers', 0)
    report = growth.growth_report(sizes, trials=trials, seed=seed, num_workers=workers, progress=args.verbose)
    if args.out:
        growth.write_report(report, args.out)
    else:
        sys.stdout.write(growth.write_report(report))
    for row in report.itertuples(index=False):
        status(f'm={row.m} comparisons={row.comparisons:.2f} total={row.total:.2f} '
               f'normalized={row.normalized:.4f}')
    if args.wall_clock:
        repeats = args.repeats if args.repeats is not None else defaults.get('repeats', growth.DEFAULT_REPEATS)
        for m in sizes:
            values = growth.distinct_instance(m, np.random.default_rng([seed, m, 0]))
            status(f'm={m} float even-rank-sum {growth.timed_even_rank_sum(values, repeats) * 1e6:.1f}us')
    return EXIT_YES


COMMANDS = dict(sum=run_sum, ranksums=run_ranksums, mingap=run_mingap, certify=run_certify, gen=run_gen,
                bench=run_bench)


def _instance_parser() -> ArgumentParser:
    parser = ArgumentParser(add_help=False)
    parser.add_argument('file', type=str, help='instance file, one scalar per line')
    parser.add_argument('--json', action='store_true', help='print a JSON object instead of text')
    return parser


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog='ranklab', description='even-rank-sum, min-gap and the reduction between them')
    parser.add_argument('--config', type=str, default=None, help='config yaml path')
    parser.add_argument('--verbose', type=boolify, default=False, help='status lines and progress on stderr')
    commands = parser.add_subparsers(dest='command', required=True)

    commands.add_parser('sum', parents=[_instance_parser()], help='even-rank-sum of an instance')
    commands.add_parser('ranksums', parents=[_instance_parser()], help='even and odd rank sums of an instance')

    mingap = commands.add_parser('mingap', parents=[_instance_parser()], help='decide min gap >= g')
    mingap.add_argument('--g', type=scalar_arg, required=True, help='gap threshold')
    mingap.add_argument('--via', type=str, default='direct', choices=VIA, help='direct scan or the reduction')

    certify = commands.add_parser('certify', parents=[_instance_parser()], help='full reduction certificate')
    certify.add_argument('--g', type=scalar_arg, required=True, help='gap threshold, > 0')

    gen = commands.add_parser('gen', parents=[GeneratorSpec.add_generator_args(ArgumentParser(add_help=False))],
                              help='write a seeded instance file')
    gen.add_argument('--out', type=str, default=None, help='output path (stdout if omitted)')

    commands.add_parser('bench', parents=[growth.add_bench_args(ArgumentParser(add_help=False))],
                        help='operation-count growth report as csv')
    return parser


def main(argv: th.Optional[th.Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_ERROR if e.code else 0
    try:
        config = load_config(args.config)
        return COMMANDS[args.command](args, config)
    except (ValueError, TypeError, OSError, AssertionError) as e:
        print(f'ranklab {args.command}: error: {e}', file=sys.stderr)
        return EXIT_ERROR
