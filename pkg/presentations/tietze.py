"""
Elementary Tietze transformations.

Each move checks its own side conditions and, where it adds or removes a
relation, an explicit ZigZag witness: derivability is never searched for.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from typing import TYPE_CHECKING, Union

from .cells import GREEK_NAMES, Generator, Polygraph, Rule, Word
from .exceptions import PolygraphError, TietzeError
from .validators import validate

if TYPE_CHECKING:
    from rewriting.paths import ZigZag

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AddGen:
    """Adjoin generator ``name`` standing for ``word``, with the rule word => name."""
    name: str
    word: Word
    rule: str | None = None

    def __str__(self) -> str:
        return f'add generator {self.name} for "{self.word}"'


@dataclass(frozen=True)
class RemoveGen:
    """Remove ``name`` using the rule ``rule: u => name``, substituting u for it."""
    name: str
    rule: str

    def __str__(self) -> str:
        return f'remove generator {self.name} through {self.rule}'


@dataclass(frozen=True)
class AddRule:
    lhs: Word
    rhs: Word
    witness: 'ZigZag'
    name: str | None = None

    def __str__(self) -> str:
        return f'add rule {self.name or "?"}: {self.lhs} => {self.rhs}'


@dataclass(frozen=True)
class RemoveRule:
    rule: str
    witness: 'ZigZag'

    def __str__(self) -> str:
        return f'remove rule {self.rule}'


@dataclass(frozen=True)
class RenameRule:
    """Relabel a rule in place; boundaries are untouched so no witness is needed."""
    rule: str
    name: str

    def __str__(self) -> str:
        return f'rename rule {self.rule} to {self.name}'


TietzeMove = Union[AddGen, RemoveGen, AddRule, RemoveRule, RenameRule]


def substitute(word: Word, name: str, replacement: Word) -> Word:
    """Replace every occurrence of the letter ``name`` by ``replacement``."""
    result = Word.identity(word.source)
    for i, letter in enumerate(word.letters):
        result = result + (replacement if letter == name else word.factor(i, i + 1))
    return result


def _check_witness(p: Polygraph, witness: 'ZigZag', lhs: Word, rhs: Word,
                   forbidden: str | None = None):
    if witness.source != lhs or witness.target != rhs:
        raise TietzeError(
            f'witness goes from "{witness.source}" to "{witness.target}", '
            f'expected "{lhs}" to "{rhs}"'
        )
    for step in witness.steps:
        if forbidden is not None and (step.rule.name == forbidden or step.rule.stem == forbidden):
            raise TietzeError('witness uses removed rule')
        if not p.has_rule(step.rule):
            raise TietzeError(f'witness uses unknown rule "{step.rule.name}"')


def _uses_rule(p: Polygraph, name: str) -> list[str]:
    return [
        cell.name for cell in p.three_cells
        if any(step.rule.name == name for step in (*cell.source.steps, *cell.target.steps))
    ]


def _add_gen(p: Polygraph, move: AddGen) -> Polygraph:
    if p.has_generator(move.name):
        raise TietzeError(f'generator "{move.name}" already exists')
    if move.name in move.word.letters:
        raise TietzeError(f'"{move.word}" contains the new generator {move.name}')
    if move.word.is_identity:
        raise TietzeError(f'generator {move.name} cannot stand for an identity')
    gen = Generator(move.name, move.word.source, move.word.target)
    rule_name = move.rule or p.fresh_rule_name(GREEK_NAMES)
    rule = Rule(rule_name, move.word, Word((move.name,), (gen.source, gen.target)))
    order = p.order + (move.name,) if p.order is not None else None
    return replace(p, generators=p.generators + (gen,), rules=p.rules + (rule,), order=order)


def _remove_gen(p: Polygraph, move: RemoveGen) -> Polygraph:
    if not p.has_generator(move.name):
        raise TietzeError(f'unknown generator "{move.name}"')
    try:
        defining = p.rule(move.rule)
    except PolygraphError:
        raise TietzeError(f'unknown rule "{move.rule}"') from None
    if defining.rhs.letters != (move.name,):
        raise TietzeError(f'rule {move.rule} does not target the generator {move.name}')
    if move.name in defining.lhs.letters:
        raise TietzeError(f'{move.name} occurs in the source of {move.rule}')
    if p.three_cells:
        raise TietzeError('cannot remove a generator from a presentation with 3-cells')
    for family in p.pumped:
        if move.name == family.pump or move.name in (
                *family.lhs_prefix.letters, *family.lhs_suffix.letters,
                *family.rhs_prefix.letters, *family.rhs_suffix.letters):
            raise TietzeError(f'pumped rule {family.stem} still uses {move.name}')
    rules = tuple(
        replace(rule,
                lhs=substitute(rule.lhs, move.name, defining.lhs),
                rhs=substitute(rule.rhs, move.name, defining.lhs))
        for rule in p.rules if rule.name != defining.name
    )
    order = tuple(g for g in p.order if g != move.name) if p.order is not None else None
    return replace(
        p,
        generators=tuple(g for g in p.generators if g.name != move.name),
        rules=rules,
        order=order,
    )


def _add_rule(p: Polygraph, move: AddRule) -> Polygraph:
    if move.lhs.is_identity:
        raise TietzeError('a rule cannot rewrite an identity')
    _check_witness(p, move.witness, move.lhs, move.rhs)
    name = move.name or p.fresh_rule_name(GREEK_NAMES)
    if p.has_generator(name) or name in {r.name for r in p.rules} | {f.stem for f in p.pumped}:
        raise TietzeError(f'rule name "{name}" is taken')
    return p.with_rule(Rule(name, move.lhs, move.rhs))


def _remove_rule(p: Polygraph, move: RemoveRule) -> Polygraph:
    try:
        rule = p.rule(move.rule)
    except PolygraphError:
        raise TietzeError(f'unknown rule "{move.rule}"') from None
    if rule.is_instance:
        raise TietzeError(f'{move.rule} is an instance of a pumped family')
    _check_witness(p, move.witness, rule.lhs, rule.rhs, forbidden=rule.name)
    dangling = _uses_rule(p, rule.name)
    if dangling:
        raise TietzeError(f'3-cells {", ".join(dangling)} still use {rule.name}')
    return p.with_rules(r for r in p.rules if r.name != rule.name)


def _rename_rule(p: Polygraph, move: RenameRule) -> Polygraph:
    try:
        rule = p.rule(move.rule)
    except PolygraphError:
        raise TietzeError(f'unknown rule "{move.rule}"') from None
    if rule.is_instance:
        raise TietzeError(f'{move.rule} is an instance of a pumped family')
    if p.has_generator(move.name) or move.name in {r.name for r in p.rules} | {f.stem for f in p.pumped}:
        raise TietzeError(f'rule name "{move.name}" is taken')
    dangling = _uses_rule(p, rule.name)
    if dangling:
        raise TietzeError(f'3-cells {", ".join(dangling)} still use {rule.name}')
    return p.with_rules(replace(r, name=move.name) if r.name == rule.name else r for r in p.rules)


def tietze_apply(p: Polygraph, move: TietzeMove) -> Polygraph:
    if isinstance(move, AddGen):
        result = _add_gen(p, move)
    elif isinstance(move, RemoveGen):
        result = _remove_gen(p, move)
    elif isinstance(move, AddRule):
        result = _add_rule(p, move)
    elif isinstance(move, RemoveRule):
        result = _remove_rule(p, move)
    elif isinstance(move, RenameRule):
        result = _rename_rule(p, move)
    else:
        raise TietzeError(f'not a Tietze move: {move!r}')
    diagnostics = validate(result)
    if diagnostics:
        raise TietzeError('; '.join(diagnostics))
    logger.info(f'Tietze: {move}')
    return result
