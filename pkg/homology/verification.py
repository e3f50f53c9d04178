"""
Exact checks of the chain conditions and of the contracting homotopy
identities on basis elements u[c], u drawn from a sample of the monoid.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Iterable

from completion.reduction import is_reduced
from presentations.cells import Word
from .resolution import Resolution
from .ring import Combination, format_module, format_ring

logger = logging.getLogger(__name__)

IDENTITIES = ('eps_i0', 'eps_d1', 'd1d2', 'd2d3', 'd1i1', 'd2i2', 'd3i3')


@dataclass
class IdentityCheck:
    name: str
    checked: int = 0
    witness: str = ''

    @property
    def passed(self) -> bool:
        return not self.witness

    @property
    def verdict(self) -> str:
        return 'ok' if self.passed else f'FAIL at {self.witness}'


@dataclass
class VerificationReport:
    sample: list[Word]
    exhaustive: bool
    reduced: bool = True
    checks: dict[str, IdentityCheck] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks.values())

    @property
    def identities(self) -> dict[str, str]:
        return {name: check.verdict for name, check in self.checks.items()}

    @property
    def failures(self) -> list[IdentityCheck]:
        return [check for check in self.checks.values() if not check.passed]


def _text(value) -> str:
    if not isinstance(value, Combination):
        return str(value)
    if any(isinstance(key, tuple) for key, _ in value):
        return format_module(value)
    return format_ring(value)


def _check(name: str, basis: Iterable, compute: Callable, expected: Callable) -> IdentityCheck:
    check = IdentityCheck(name)
    for element in basis:
        check.checked += 1
        got, want = compute(element), expected(element)
        if got != want:
            check.witness = f'{_text(element)}: got {_text(got)}, expected {_text(want)}'
            break
    return check


def verify_identities(res: Resolution, sample: list[Word], exhaustive: bool = False) -> VerificationReport:
    report = VerificationReport(sample, exhaustive)
    if not is_reduced(res.p, res.pump_bound).reduced:
        report.reduced = False
        logger.warning('Presentation is not reduced: leftmost normalization need not be a left strategy')

    zero = Combination.zero()
    m0 = [Combination.basis(u) for u in sample]
    m1 = [Combination.basis((u, x)) for u in sample for x in res.generators]
    m2 = [Combination.basis((u, a)) for u in sample for a in res.rules]
    m3 = [Combination.basis((u, A)) for u in sample for A in res.cells]

    checks = [
        _check('eps_i0', [1], lambda n: res.epsilon(res.i0(n)), lambda n: n),
        _check('eps_d1', m1, lambda m: res.epsilon(res.d1(m)), lambda m: 0),
        _check('d1d2', m2, lambda m: res.d1(res.d2(m)), lambda m: zero),
        _check('d2d3', m3, lambda m: res.d2(res.d3(m)), lambda m: zero),
        _check('d1i1', m0, lambda r: res.d1(res.i1(r)) + res.i0(res.epsilon(r)), lambda r: r),
        _check('d2i2', m1, lambda m: res.d2(res.i2(m)) + res.i1(res.d1(m)), lambda m: m),
    ]
    if res.cp is not None:
        checks.append(
            _check('d3i3', m2, lambda m: res.d3(res.i3(m)) + res.i2(res.d2(m)), lambda m: m)
        )
    report.checks = {check.name: check for check in checks}
    for check in report.failures:
        logger.warning(f'Identity {check.name} failed: {check.witness}')
    logger.info(f'Verified {len(report.checks)} identities on {len(sample)} elements')
    return report
