"""
Knuth–Bendix completion under a total deglex order.

Critical branchings are examined first in, first out. Each pair of
distinct normal forms is oriented by the order and adjoined as a new rule;
the branchings of the new rule are appended to the queue. Existing rules
are never simplified here: chain ``metivier_squier_reduce`` afterwards.
"""
from __future__ import annotations

import enum
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from django.conf import settings

from branchings.critical import CriticalBranching, branchings_between, enumerate_critical_branchings
from presentations.cells import GREEK_NAMES, Polygraph, Rule, Word
from presentations.exceptions import PolygraphError
from rewriting.exceptions import FuelExhausted, NotCertified
from rewriting.normalize import Strategy, normalize
from rewriting.orders import check_deglex_termination, orient

logger = logging.getLogger(__name__)


class CompletionStatus(enum.Enum):
    COMPLETED = 'Completed'
    FUEL_EXHAUSTED = 'FuelExhausted'


@dataclass(frozen=True)
class TraceEntry:
    branching: CriticalBranching
    nf1: Word
    nf2: Word
    added: Rule | None = None

    @property
    def outcome(self) -> str:
        return 'joined' if self.added is None else f'added {self.added}'


@dataclass
class CompletionResult:
    polygraph: Polygraph
    added: list[Rule] = field(default_factory=list)
    trace: list[TraceEntry] = field(default_factory=list)
    status: CompletionStatus = CompletionStatus.COMPLETED
    reason: str = ''

    @property
    def completed(self) -> bool:
        return self.status is CompletionStatus.COMPLETED


def knuth_bendix(p: Polygraph, order: Sequence[str] | None = None, max_rules: int | None = None,
                 fuel: int | None = None) -> CompletionResult:
    if p.pumped:
        raise PolygraphError('completion of pumped rule families is not supported')
    if order is None:
        order = p.effective_order
    termination = check_deglex_termination(p, order)
    if not termination.terminating:
        raise NotCertified('rules are not decreasing for deglex',
                           witness=termination.failures[0].rule)
    if max_rules is None:
        max_rules = getattr(settings, 'COMPLETION_MAX_RULES', 256)

    result = CompletionResult(p)
    queue = deque(enumerate_critical_branchings(p))
    while queue:
        branching = queue.popleft()
        current = result.polygraph
        try:
            nf1, _ = normalize(current, branching.step1.target, Strategy.LEFTMOST, fuel)
            nf2, _ = normalize(current, branching.step2.target, Strategy.LEFTMOST, fuel)
        except FuelExhausted as exc:
            result.status, result.reason = CompletionStatus.FUEL_EXHAUSTED, str(exc)
            break
        oriented = orient(order, nf1, nf2)
        if oriented is None:
            result.trace.append(TraceEntry(branching, nf1, nf2))
            continue
        if len(current.rules) >= max_rules:
            result.status = CompletionStatus.FUEL_EXHAUSTED
            result.reason = f'rule limit {max_rules} reached'
            logger.warning(f'Completion stopped: {result.reason}')
            break
        lhs, rhs = oriented
        rule = Rule(current.fresh_rule_name(GREEK_NAMES), lhs, rhs)
        result.polygraph = current.with_rule(rule)
        result.added.append(rule)
        result.trace.append(TraceEntry(branching, nf1, nf2, rule))
        logger.info(f'Completion added {rule}')
        queue.extend(branchings_between(result.polygraph, rule))
    return result
