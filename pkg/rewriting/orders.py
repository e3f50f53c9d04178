"""
Degree-lexicographic order on words and deglex termination checks.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from django.conf import settings

from presentations.cells import Polygraph, PumpedRule, Rule, Word
from presentations.exceptions import PolygraphError


class Comparison(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


UNORIENTABLE = None


def deglex_compare(order: Sequence[str], u: Word, v: Word) -> Comparison:
    """Shorter words are smaller; equal lengths compare letterwise by ``order``."""
    rank = {name: i for i, name in enumerate(order)}
    for letter in (*u.letters, *v.letters):
        if letter not in rank:
            raise PolygraphError(f'generator "{letter}" is missing from the order')
    if len(u) != len(v):
        return Comparison.LESS if len(u) < len(v) else Comparison.GREATER
    for x, y in zip(u.letters, v.letters):
        if x != y:
            return Comparison.LESS if rank[x] < rank[y] else Comparison.GREATER
    return Comparison.EQUAL


def orient(order: Sequence[str], u: Word, v: Word) -> tuple[Word, Word] | None:
    """(larger, smaller), or None when the words are equal."""
    verdict = deglex_compare(order, u, v)
    if verdict is Comparison.GREATER:
        return u, v
    if verdict is Comparison.LESS:
        return v, u
    return UNORIENTABLE


@dataclass
class RuleVerdict:
    rule: str
    decreasing: bool
    note: str = ''
    sampled: bool = False


@dataclass
class TerminationReport:
    method: str
    terminating: bool
    verdicts: list[RuleVerdict] = field(default_factory=list)
    sampled: bool = False

    @property
    def failures(self) -> list[RuleVerdict]:
        return [v for v in self.verdicts if not v.decreasing]


def _check_family(order: Sequence[str], family: PumpedRule, pump_bound: int) -> RuleVerdict:
    """
    lhs length is |prefix|+n+|suffix|, rhs length |prefix'|+pn+q+|suffix'|.
    When the length difference settles the comparison for every n the
    verdict is symbolic; otherwise instances n ≤ pump_bound are checked.
    """
    drift = 1 - family.rhs_count.p
    offset = (len(family.lhs_prefix) + len(family.lhs_suffix)
              - len(family.rhs_prefix) - len(family.rhs_suffix) - family.rhs_count.q)
    if drift == 0 and offset < 0:
        return RuleVerdict(family.stem, False, 'rhs longer than lhs for every n')
    if drift < 0:
        return RuleVerdict(family.stem, False, 'rhs longer than lhs for large n')
    # instances below this threshold may not be settled by length alone
    threshold = 0 if offset > 0 else (-offset + 1 if drift else None)
    checked = pump_bound if threshold is None else max(threshold - 1, 0)
    for n in range(checked + 1):
        rule = family.instance(n)
        if deglex_compare(order, rule.lhs, rule.rhs) is not Comparison.GREATER:
            return RuleVerdict(family.stem, False, f'instance n={n} is not decreasing')
    if threshold is None:
        return RuleVerdict(family.stem, True, f'equal lengths; checked n <= {pump_bound}', sampled=True)
    return RuleVerdict(family.stem, True, 'decreasing by length for large n')


def check_deglex_termination(p: Polygraph, order: Sequence[str] | None = None,
                             pump_bound: int | None = None) -> TerminationReport:
    if order is None:
        order = p.effective_order
    if pump_bound is None:
        pump_bound = getattr(settings, 'PUMP_BOUND', 4)
    report = TerminationReport(method='deglex', terminating=True)
    for rule in p.rules:
        try:
            decreasing = deglex_compare(order, rule.lhs, rule.rhs) is Comparison.GREATER
        except PolygraphError as exc:
            report.verdicts.append(RuleVerdict(rule.name, False, str(exc)))
            continue
        report.verdicts.append(RuleVerdict(rule.name, decreasing))
    for family in p.pumped:
        verdict = _check_family(order, family, pump_bound)
        report.sampled = report.sampled or verdict.sampled
        report.verdicts.append(verdict)
    report.terminating = not report.failures
    return report


def is_decreasing(order: Sequence[str], rule: Rule) -> bool:
    return deglex_compare(order, rule.lhs, rule.rhs) is Comparison.GREATER
