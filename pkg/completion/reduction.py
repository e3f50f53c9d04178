"""
Reduced presentations and Métivier–Squier reduction.

The reduction runs in three passes over a convergent presentation:

1. every rule u => v becomes u => û;
2. among parallel rules only the first declared one is kept;
3. rules whose source strictly contains the source of another rule go.

Each change is carried out as Tietze moves with explicit witnesses, so the
trace doubles as a proof that the presented monoid is unchanged. Pass 1
adds u => û under a temporary name, removes the old rule and renames the
new one back, all three moves traced; the rule then returns to its
declaration slot, which reorders the rule list only.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

from django.conf import settings

from branchings.confluence import decide_confluence
from presentations.cells import Polygraph, Rule, Word, instances_up_to
from presentations.exceptions import PolygraphError
from presentations.tietze import AddRule, RemoveRule, RenameRule, TietzeMove, tietze_apply
from rewriting.exceptions import NotCertified
from rewriting.interpretations import InterpretationCert
from rewriting.normalize import Strategy, normalize
from rewriting.paths import RewriteStep, ZigZag
from rewriting.redexes import find_redexes, is_normal

logger = logging.getLogger(__name__)


@dataclass
class ReducedReport:
    violations: list[str] = field(default_factory=list)

    @property
    def reduced(self) -> bool:
        return not self.violations


def is_reduced(p: Polygraph, pump_bound: int | None = None) -> ReducedReport:
    report = ReducedReport()
    bound = pump_bound if pump_bound is not None else getattr(settings, 'PUMP_BOUND', 4)
    for rule in instances_up_to(p, bound):
        others = [r for r in find_redexes(p, rule.lhs, bound)
                  if not (r.rule == rule and r.position == 0)]
        if others:
            report.violations.append(
                f'rule {rule.name}: source "{rule.lhs}" reducible by {others[0].rule.name}')
        if not is_normal(p, rule.rhs, bound):
            report.violations.append(f'rule {rule.name}: target "{rule.rhs}" is not a normal form')
    return report


@dataclass
class ReductionResult:
    polygraph: Polygraph
    trace: list[TietzeMove] = field(default_factory=list)


def _without(p: Polygraph, name: str) -> Polygraph:
    return p.with_rules(r for r in p.rules if r.name != name)


def _single(rule: Rule) -> ZigZag:
    """The rule itself as a one-step 2-cell."""
    return ZigZag(rule.lhs, (RewriteStep(Word.identity(rule.lhs.source), rule,
                                         Word.identity(rule.lhs.target)),))


class _Reducer:
    def __init__(self, p: Polygraph, fuel: int | None):
        self.p = p
        self.fuel = fuel
        self.trace: list[TietzeMove] = []

    def apply(self, move: TietzeMove):
        self.p = tietze_apply(self.p, move)
        self.trace.append(move)

    def path(self, p: Polygraph, word: Word) -> ZigZag:
        return normalize(p, word, Strategy.LEFTMOST, self.fuel)[1]

    def retarget(self, rule: Rule):
        """rule: u => v becomes rule: u => û, keeping its name and rank."""
        sigma_v = self.path(self.p, rule.rhs)
        target = sigma_v.target
        if target == rule.rhs:
            return
        before = self.p.rules
        temp = self.p.fresh_rule_name([f"{rule.name}'"])
        self.apply(AddRule(rule.lhs, target, _single(rule).then(sigma_v), name=temp))
        # the temporary rule has the same source, so normal forms survive the removal
        back = self.path(_without(self.p, rule.name), rule.rhs)
        self.apply(RemoveRule(rule.name, _single(self.p.rule(temp)).then(back.inverse())))
        self.apply(RenameRule(temp, rule.name))
        # back to the declaration slot of the original rule
        rank = {r.name: i for i, r in enumerate(before)}
        self.p = self.p.with_rules(sorted(self.p.rules, key=lambda r: rank[r.name]))

    def run(self) -> Polygraph:
        for rule in list(self.p.rules):
            self.retarget(self.p.rule(rule.name))

        kept: dict[tuple, Rule] = {}
        for rule in list(self.p.rules):
            boundary = (rule.lhs, rule.rhs)
            if boundary in kept:
                self.apply(RemoveRule(rule.name, _single(kept[boundary])))
            else:
                kept[boundary] = rule

        for rule in list(self.p.rules):
            others = _without(self.p, rule.name)
            if find_redexes(others, rule.lhs):
                self.apply(RemoveRule(rule.name, self.path(others, rule.lhs)))
        return self.p


def metivier_squier_reduce(p: Polygraph, fuel: int | None = None, order: Sequence[str] | None = None,
                           certificate: InterpretationCert | None = None,
                           accept_sampled: bool = False) -> ReductionResult:
    if p.pumped:
        raise PolygraphError('reduction of pumped rule families is not supported')
    report = decide_confluence(p, order=order, certificate=certificate,
                               accept_sampled=accept_sampled, fuel=fuel)
    if not report.confluent:
        raise NotCertified('presentation is not confluent', witness=report.first_failure)
    reducer = _Reducer(p, fuel)
    reduced = reducer.run()
    logger.info(f'Reduction used {len(reducer.trace)} Tietze moves')
    return ReductionResult(reduced, reducer.trace)
