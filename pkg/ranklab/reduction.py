"""
MinGap solved through one call to an EvenRankSum solver.

Step 1 builds A = (x_1, x_1 + g, ..., x_n, x_n + g) and S = x_1 + ... + x_n, step 2 runs the solver on A
to obtain R, step 3 answers YES iff R = S + n*g. Steps 1 and 3 use exactly 2n additions, one multiplication
and one comparison; the solver is injected so its cost stays separate.

The certificate recomputes everything from scratch: with b the sorted A, R = sum of b_{2i},
U = sum of b_{2i-1}, G the minimum gap of X, it checks R - U <= n*g (with equality iff G >= g) and
R + U = 2S + n*g before handing the record out.
"""
import typing as th
from dataclasses import dataclass, field
from functools import reduce

from ranklab.mingap import Decision, min_gap
from ranklab.numeric import INFINITY, Scalar, compare, format_scalar
from ranklab.ranksum import even_rank_sum, rank_sums, sort_view

__all__ = [
    'EvenRankSumSolver', 'Lemma1Certificate', 'ReductionDomainError', 'CertificateViolation', 'CERTIFICATE_KEYS',
    'check_threshold', 'interleave', 'reduction_sum', 'reduction_decide', 'mingap_via_evenranksum',
    'pair_differences', 'lemma1_certificate',
]

EvenRankSumSolver = th.Callable[[th.Sequence[Scalar]], Scalar]

CERTIFICATE_KEYS = ('n', 'g', 'S', 'R', 'U', 'G', 'ng', 'slack', 'decision')


class ReductionDomainError(ValueError):
    def __init__(self):
        super().__init__('reduction requires g > 0')


@dataclass(frozen=True)
class Lemma1Certificate:
    n: int
    g: Scalar
    S: Scalar
    R: Scalar
    U: Scalar
    G: th.Any  # Scalar or INFINITY
    ng: Scalar
    slack: Scalar  # ng - (R - U)
    decision: Decision
    tight_pairs: int = field(default=0, compare=False)

    def violations(self) -> th.List[str]:
        problems = []
        if self.slack.fraction < 0:
            problems.append('slack is negative')
        gap_ok = self.G is INFINITY or self.G.fraction >= self.g.fraction
        if (self.decision is Decision.YES) != self.slack.is_zero() or self.slack.is_zero() != gap_ok:
            problems.append('decision, zero slack and G >= g disagree')
        if self.R.fraction + self.U.fraction != 2 * self.S.fraction + self.ng.fraction:
            problems.append('R + U != 2S + ng')
        return problems

    def as_record(self) -> th.Dict[str, str]:
        return {key: format_scalar(value) if key not in ('n', 'decision') else str(value)
                for key, value in ((key, getattr(self, key)) for key in CERTIFICATE_KEYS)}

    def as_json(self) -> th.Dict[str, th.Any]:
        # scalars stay strings so consumers never coerce them to floats
        return dict(self.as_record(), n=self.n)

    def to_text(self) -> str:
        return '\n'.join(f'{key}={value}' for key, value in self.as_record().items())


class CertificateViolation(AssertionError):
    def __init__(self, certificate: Lemma1Certificate, problems: th.List[str]):
        super().__init__(f'certificate invariants violated ({"; ".join(problems)}): {certificate.as_record()}')
        self.certificate = certificate
        self.problems = problems


def check_threshold(g: Scalar) -> None:
    # field predicate on the canonical numerator, not an algebraic operation
    if not g.is_positive():
        raise ReductionDomainError()


def interleave(xs: th.Sequence[Scalar], g: Scalar) -> th.List[Scalar]:
    check_threshold(g)
    pairs = []
    for x in xs:
        pairs.extend((x, x + g))
    return pairs


def reduction_sum(xs: th.Sequence[Scalar], like: Scalar) -> Scalar:
    """S with n - 1 additions (zero lifted into ``like``'s context for n = 0)."""
    return reduce(lambda a, b: a + b, xs) if len(xs) else like.coerce(0)


def reduction_decide(R: Scalar, S: Scalar, n: int, g: Scalar) -> Decision:
    target = S + g.coerce(n) * g
    return Decision.of(compare(target, R) == 0)


def mingap_via_evenranksum(xs: th.Sequence[Scalar], g: Scalar, solver: EvenRankSumSolver = even_rank_sum
                           ) -> Decision:
    pairs = interleave(xs, g)
    S = reduction_sum(xs, g)
    return reduction_decide(solver(pairs), S, len(xs), g)


def pair_differences(xs: th.Sequence[Scalar], g: Scalar) -> th.List[Scalar]:
    """b_{2i} - b_{2i-1} for i = 1..n; each is at most g and they add up to R - U."""
    values = sort_view(interleave(xs, g)).sorted_values
    return [upper - lower for lower, upper in zip(values[0::2], values[1::2])]


def lemma1_certificate(xs: th.Sequence[Scalar], g: Scalar, solver: th.Optional[EvenRankSumSolver] = None
                       ) -> Lemma1Certificate:
    pairs = interleave(xs, g)
    n = len(xs)
    sums = rank_sums(pairs)
    R = solver(pairs) if solver is not None else sums.even_sum
    U = sums.odd_sum
    S = reduction_sum(xs, g)
    ng = g.coerce(n) * g
    slack = ng - (R - U)
    tight = sum(1 for d in pair_differences(xs, g) if d == g)
    certificate = Lemma1Certificate(
        n=n, g=g, S=S, R=R, U=U, G=min_gap(xs), ng=ng, slack=slack,
        decision=Decision.of(slack.is_zero()), tight_pairs=tight,
    )
    problems = certificate.violations()
    if problems:
        raise CertificateViolation(certificate, problems)
    return certificate
