"""
Resolution of critical branchings and the confluence decision for
terminating presentations (critical-pair lemma plus Newman's lemma).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence, Union

from presentations.cells import Polygraph, Word
from rewriting.exceptions import FuelExhausted, NotCertified
from rewriting.interpretations import InterpretationCert
from rewriting.normalize import Strategy, normalize
from rewriting.paths import ZigZag
from rewriting.word_problem import TerminationVerdict, certify_termination
from .critical import CriticalBranching, enumerate_critical_branchings
from .local import LocalBranching

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Resolution:
    branching: LocalBranching
    f_prime: ZigZag
    g_prime: ZigZag

    @property
    def join(self) -> Word:
        return self.f_prime.target

    @property
    def left(self) -> ZigZag:
        """step1 ⋆₁ f′"""
        return ZigZag(self.branching.source, (self.branching.step1, *self.f_prime.steps))

    @property
    def right(self) -> ZigZag:
        """step2 ⋆₁ g′"""
        return ZigZag(self.branching.source, (self.branching.step2, *self.g_prime.steps))


@dataclass(frozen=True)
class Confluent:
    resolution: Resolution

    @property
    def branching(self) -> LocalBranching:
        return self.resolution.branching

    def __str__(self) -> str:
        return f'Confluent (join: {self.resolution.join})'


@dataclass(frozen=True)
class NotConfluent:
    branching: LocalBranching
    nf1: Word
    nf2: Word

    def __str__(self) -> str:
        return f'NotConfluent ("{self.nf1}", "{self.nf2}")'


@dataclass(frozen=True)
class Unknown:
    branching: LocalBranching
    reason: str

    def __str__(self) -> str:
        return f'Unknown ({self.reason})'


Outcome = Union[Confluent, NotConfluent, Unknown]


def resolve_branching(p: Polygraph, b: LocalBranching, strategy: Strategy = Strategy.LEFTMOST,
                      fuel: int | None = None, pump_bound: int | None = None) -> Outcome:
    try:
        nf1, f_prime = normalize(p, b.step1.target, strategy, fuel, pump_bound)
        nf2, g_prime = normalize(p, b.step2.target, strategy, fuel, pump_bound)
    except FuelExhausted as exc:
        return Unknown(b, str(exc))
    if nf1 != nf2:
        return NotConfluent(b, nf1, nf2)
    return Confluent(Resolution(b, f_prime, g_prime))


@dataclass
class ConfluenceReport:
    termination: TerminationVerdict | None
    outcomes: list[Outcome] = field(default_factory=list)
    truncated: bool = False

    @property
    def confluent(self) -> bool:
        return all(isinstance(o, Confluent) for o in self.outcomes)

    @property
    def first_failure(self) -> Outcome | None:
        return next((o for o in self.outcomes if not isinstance(o, Confluent)), None)

    @property
    def unknown(self) -> list[Unknown]:
        return [o for o in self.outcomes if isinstance(o, Unknown)]


def critical_outcomes(p: Polygraph, strategy: Strategy = Strategy.LEFTMOST, fuel: int | None = None,
                      pump_bound: int | None = None) -> list[Outcome]:
    return [
        resolve_branching(p, b, strategy, fuel, pump_bound)
        for b in enumerate_critical_branchings(p, pump_bound)
    ]


def decide_confluence(p: Polygraph, order: Sequence[str] | None = None,
                      certificate: InterpretationCert | None = None, accept_sampled: bool = False,
                      fuel: int | None = None, pump_bound: int | None = None,
                      strategy: Strategy = Strategy.LEFTMOST) -> ConfluenceReport:
    """
    Certify termination, then resolve every critical branching. Raises
    NotCertified when termination cannot be certified.
    """
    verdict = certify_termination(p, order, certificate, accept_sampled, pump_bound)
    if not verdict.certified:
        raise NotCertified(f'termination not certified ({verdict.method})', witness=verdict.witness)
    report = ConfluenceReport(verdict, critical_outcomes(p, strategy, fuel, pump_bound),
                              truncated=bool(p.pumped))
    if report.truncated:
        logger.info('Pumped families checked only for instances up to the pump bound')
    return report


__all__ = [
    'CriticalBranching', 'Resolution', 'Confluent', 'NotConfluent', 'Unknown',
    'ConfluenceReport', 'resolve_branching', 'critical_outcomes', 'decide_confluence',
]
