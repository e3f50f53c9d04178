"""
Redex enumeration and single rewriting steps.

Pumped families are instantiated lazily: at a given position only the
instances whose pump run actually fits are produced, up to
``max(pump_bound, len(word))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from django.conf import settings

from presentations.cells import Polygraph, PumpedRule, Rule, Word
from .exceptions import NoMatch
from .paths import RewriteStep


@dataclass(frozen=True)
class Redex:
    rule: Rule
    position: int

    def step(self, word: Word) -> RewriteStep:
        return step_at(word, self.rule, self.position)

    def __str__(self) -> str:
        return f'({self.rule.name}, {self.position})'


@lru_cache(maxsize=4096)
def _instance(family: PumpedRule, n: int) -> Rule:
    return family.instance(n)


def effective_pump_bound(word: Word, pump_bound: int | None) -> int:
    if pump_bound is None:
        pump_bound = getattr(settings, 'PUMP_BOUND', 4)
    return max(pump_bound, len(word))


def _pumped_at(family: PumpedRule, word: Word, position: int, bound: int) -> Iterator[Rule]:
    if not word.occurs_at(family.lhs_prefix, position):
        return
    start = position + len(family.lhs_prefix)
    run = 0
    while start + run < len(word) and word.letters[start + run] == family.pump:
        run += 1
    for n in range(min(run, bound) + 1):
        if word.occurs_at(family.lhs_suffix, start + n):
            rule = _instance(family, n)
            if rule.lhs.letters:
                yield rule


def rules_at(p: Polygraph, word: Word, position: int, bound: int) -> Iterator[Rule]:
    """Rules whose lhs occurs at ``position``, in declaration order."""
    for rule in p.rules:
        if rule.lhs.letters and word.occurs_at(rule.lhs, position):
            yield rule
    for family in p.pumped:
        yield from _pumped_at(family, word, position, bound)


def find_redexes(p: Polygraph, word: Word, pump_bound: int | None = None) -> list[Redex]:
    bound = effective_pump_bound(word, pump_bound)
    return [
        Redex(rule, position)
        for position in range(len(word))
        for rule in rules_at(p, word, position, bound)
    ]


def leftmost_redex(p: Polygraph, word: Word, pump_bound: int | None = None) -> Redex | None:
    bound = effective_pump_bound(word, pump_bound)
    for position in range(len(word)):
        for rule in rules_at(p, word, position, bound):
            return Redex(rule, position)
    return None


def rightmost_redex(p: Polygraph, word: Word, pump_bound: int | None = None) -> Redex | None:
    bound = effective_pump_bound(word, pump_bound)
    for position in reversed(range(len(word))):
        for rule in rules_at(p, word, position, bound):
            return Redex(rule, position)
    return None


def is_normal(p: Polygraph, word: Word, pump_bound: int | None = None) -> bool:
    return leftmost_redex(p, word, pump_bound) is None


def step_at(word: Word, rule: Rule, position: int) -> RewriteStep:
    if not rule.lhs.letters or not word.occurs_at(rule.lhs, position):
        raise NoMatch(f'{rule.name} does not apply to "{word}" at position {position}')
    end = position + len(rule.lhs)
    return RewriteStep(word.prefix(position), rule, word.suffix(end))


def apply_step(word: Word, rule: Rule, position: int) -> Word:
    return step_at(word, rule, position).target
