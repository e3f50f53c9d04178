"""
Interpretation certificates for termination.

Each generator g gets a monotone map g_*(n) = a·n + b on the naturals and
a "derivation" ∂g(n) = Σ c·βⁿ. Words are interpreted by

    (uv)_*(n) = v_*(u_*(n))
    ∂(uv)(n)  = ∂(u)(n) + ∂(v)(u_*(n))

and a rule u => v is decreasing when u_*(n) ≥ v_*(n) and ∂(u)(n) > ∂(v)(n).
The check samples n ≤ sample_bound: it can refute a certificate, never
prove one.

Certificate files have one line per generator::

    # generator: star | derivation
    x: n+1 | 0
    a: n   | 3^n
    b: n   | 2^n
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field

from django.conf import settings

from presentations.cells import Polygraph, Word, instances_up_to
from presentations.exceptions import ParseError

logger = logging.getLogger(__name__)

ALLOWED_BASES = (1, 2, 3)

_STAR_CONSTANT = re.compile(r'\d+')
_STAR_AFFINE = re.compile(r'(\d*)n(?:\+(\d+))?')
_DER_CONSTANT = re.compile(r'\d+')
_DER_EXPONENTIAL = re.compile(r'(?:(\d+)\*)?(\d+)\^n')


@dataclass(frozen=True)
class StarMap:
    a: int = 1
    b: int = 0

    def __call__(self, n: int) -> int:
        return self.a * n + self.b

    def __str__(self) -> str:
        if self.a == 0:
            return str(self.b)
        head = 'n' if self.a == 1 else f'{self.a}n'
        return head if self.b == 0 else f'{head}+{self.b}'


@dataclass(frozen=True)
class ExpTerm:
    coefficient: int
    base: int = 1

    def __call__(self, n: int) -> int:
        return self.coefficient * self.base ** n

    def __str__(self) -> str:
        if self.base == 1:
            return str(self.coefficient)
        power = f'{self.base}^n'
        return power if self.coefficient == 1 else f'{self.coefficient}*{power}'


@dataclass(frozen=True)
class Interpretation:
    star: StarMap
    derivation: tuple[ExpTerm, ...] = ()

    def der(self, n: int) -> int:
        return sum(term(n) for term in self.derivation)


@dataclass
class InterpretationCert:
    maps: dict[str, Interpretation]

    def evaluate(self, word: Word, n: int) -> tuple[int, int]:
        """(word_*(n), ∂(word)(n))."""
        current, der = n, 0
        for letter in word.letters:
            interp = self.maps[letter]
            der += interp.der(current)
            current = interp.star(current)
        return current, der


@dataclass
class CertificateFailure:
    rule: str
    n: int
    reason: str

    def __str__(self) -> str:
        return f'{self.rule} at n={self.n}: {self.reason}'


@dataclass
class CertificateReport:
    sample_bound: int
    failures: list[CertificateFailure] = field(default_factory=list)
    missing: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and not self.missing

    @property
    def verdict(self) -> str:
        return 'PASS(sampled)' if self.passed else 'FAIL'


def _parse_star(text: str, line: int) -> StarMap:
    if _STAR_CONSTANT.fullmatch(text):
        return StarMap(0, int(text))
    m = _STAR_AFFINE.fullmatch(text)
    if not m:
        raise ParseError(f'bad star map "{text}"', line, 1)
    return StarMap(int(m.group(1)) if m.group(1) else 1, int(m.group(2) or 0))


def _parse_derivation(text: str, line: int) -> tuple[ExpTerm, ...]:
    terms = []
    for chunk in text.split('+'):
        if _DER_CONSTANT.fullmatch(chunk):
            terms.append(ExpTerm(int(chunk)))
            continue
        m = _DER_EXPONENTIAL.fullmatch(chunk)
        if not m:
            raise ParseError(f'bad derivation term "{chunk}"', line, 1)
        base = int(m.group(2))
        if base not in ALLOWED_BASES:
            raise ParseError(f'base {base} not in {ALLOWED_BASES}', line, 1)
        terms.append(ExpTerm(int(m.group(1)) if m.group(1) else 1, base))
    return tuple(t for t in terms if t.coefficient)


def parse_certificate(text: str) -> InterpretationCert:
    maps = {}
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        name, sep, rest = line.partition(':')
        star, bar, der = rest.partition('|')
        if not sep or not bar:
            raise ParseError('expected "generator: star | derivation"', i, 1)
        name = name.strip()
        if name in maps:
            raise ParseError(f'generator "{name}" interpreted twice', i, 1)
        maps[name] = Interpretation(
            _parse_star(''.join(star.split()), i),
            _parse_derivation(''.join(der.split()), i),
        )
    return InterpretationCert(maps)


def format_certificate(cert: InterpretationCert) -> str:
    lines = []
    for name, interp in cert.maps.items():
        der = ' + '.join(str(t) for t in interp.derivation) or '0'
        lines.append(f'{name}: {interp.star} | {der}')
    return '\n'.join(lines)


def check_interpretation_certificate(p: Polygraph, cert: InterpretationCert,
                                     sample_bound: int | None = None,
                                     pump_bound: int | None = None) -> CertificateReport:
    if sample_bound is None:
        sample_bound = getattr(settings, 'CERT_SAMPLE_BOUND', 16)
    if pump_bound is None:
        pump_bound = getattr(settings, 'PUMP_BOUND', 4)
    report = CertificateReport(sample_bound=sample_bound)
    report.missing = [g for g in p.generator_names if g not in cert.maps]
    if report.missing:
        return report
    for rule in instances_up_to(p, pump_bound):
        for n in range(sample_bound + 1):
            star_u, der_u = cert.evaluate(rule.lhs, n)
            star_v, der_v = cert.evaluate(rule.rhs, n)
            if star_u < star_v:
                report.failures.append(CertificateFailure(
                    rule.name, n, f'{rule.lhs}_*({n}) = {star_u} < {star_v}'))
                break
            if der_u <= der_v:
                report.failures.append(CertificateFailure(
                    rule.name, n, f'∂({rule.lhs})({n}) = {der_u} is not > {der_v}'))
                break
    logger.info(f'Certificate check over n <= {sample_bound}: {report.verdict}')
    return report
