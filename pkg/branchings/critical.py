"""
Critical branchings: overlapping branchings whose source word is exactly
the union of the two redexes.

For every ordered pair of rules (ρ, ρ′) two shapes are enumerated:

* inclusion, lhs(ρ′) occurs inside lhs(ρ) (including distinct rules with
  the same lhs at offset 0), on the word lhs(ρ);
* proper overlap, a nonempty proper suffix of lhs(ρ) is a proper prefix
  of lhs(ρ′), on lhs(ρ) followed by the rest of lhs(ρ′).

Pumped families are expanded into their instances n ≤ pump_bound.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from django.conf import settings

from presentations.cells import Polygraph, Rule, instances_up_to
from rewriting.redexes import step_at
from .local import LocalBranching, step_order


@dataclass(frozen=True)
class CriticalBranching(LocalBranching):
    minimal: bool = True

    @property
    def union(self) -> tuple[int, int]:
        starts, ends = zip(self.step1.span, self.step2.span)
        return min(starts), max(ends)


def _overlaps(rule: Rule, other: Rule) -> Iterator[tuple]:
    lhs, other_lhs = rule.lhs, other.lhs
    for position in lhs.occurrences(other_lhs):
        if rule == other and position == 0:
            continue
        yield lhs, position
    for k in range(1, min(len(lhs), len(other_lhs))):
        if lhs.letters[-k:] == other_lhs.letters[:k]:
            yield lhs + other_lhs.suffix(k), len(lhs) - k


def _branchings(p: Polygraph, pairs: Iterable[tuple[Rule, Rule]]) -> list[CriticalBranching]:
    found: dict[tuple, CriticalBranching] = {}
    for rule, other in pairs:
        for word, position in _overlaps(rule, other):
            steps = sorted(
                (step_at(word, rule, 0), step_at(word, other, position)),
                key=lambda step: step_order(step, p.rank),
            )
            branching = CriticalBranching(*steps)
            found.setdefault(branching.key, branching)
    return sorted(found.values(), key=lambda b: sort_key(p, b))


def sort_key(p: Polygraph, b: LocalBranching) -> tuple:
    return p.rank(b.step1.rule), p.rank(b.step2.rule), b.offset, b.source.letters


def default_pump_bound(pump_bound: int | None) -> int:
    return pump_bound if pump_bound is not None else getattr(settings, 'PUMP_BOUND', 4)


def enumerate_critical_branchings(p: Polygraph, pump_bound: int | None = None) -> list[CriticalBranching]:
    rules = [r for r in instances_up_to(p, default_pump_bound(pump_bound)) if r.lhs.letters]
    return _branchings(p, ((r, s) for r in rules for s in rules))


def branchings_between(p: Polygraph, rule: Rule, pump_bound: int | None = None) -> list[CriticalBranching]:
    """Critical branchings in which ``rule`` takes part, with any rule of p (itself included)."""
    rules = [r for r in instances_up_to(p, default_pump_bound(pump_bound)) if r.lhs.letters]
    if rule not in rules:
        rules.append(rule)
    pairs = [(rule, s) for s in rules] + [(s, rule) for s in rules if s != rule]
    return _branchings(p, pairs)
