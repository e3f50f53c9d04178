"""
Transfer of a homotopy basis between two presentations of the same monoid.

Given 2-functors F: Σ⊤ → Ξ⊤ and G: Ξ⊤ → Σ⊤ (images of generators and
rules) and 2-cells τ_v: FG(v) ⇒ v, a homotopy basis Γ of Σ yields the
homotopy basis F(Γ) ⨿ {τ_α} of Ξ, with

    τ_α : FG(α) ⋆₁ τ_v  ⇛  τ_u ⋆₁ α      for α: u ⇒ v in Ξ.

Map files list one image per line::

    F: gen => word
    F: rule => zigzag
    G: gen => word
    G: rule => zigzag
    tau: gen => zigzag
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from typing import Sequence

from presentations.cells import Polygraph, Rule, ThreeCell, Word
from presentations.exceptions import PolygraphError
from presentations.parser import parse_typed_word, parse_zigzag
from rewriting.paths import RewriteStep, ZigZag

logger = logging.getLogger(__name__)


class TransferError(ValueError):
    """Generator, rule or τ images that do not define 2-functors."""


def _single(rule: Rule) -> ZigZag:
    step = RewriteStep(Word.identity(rule.lhs.source), rule, Word.identity(rule.lhs.target))
    return ZigZag(rule.lhs, (step,))


@dataclass
class TwoFunctor:
    source: Polygraph
    target: Polygraph
    gen: dict[str, Word] = field(default_factory=dict)
    rule: dict[str, ZigZag] = field(default_factory=dict)
    name: str = 'F'

    @classmethod
    def identity(cls, p: Polygraph, name: str = 'F') -> 'TwoFunctor':
        return cls(p, p, {g.name: p.word([g.name]) for g in p.generators},
                   {r.name: _single(r) for r in p.rules}, name)

    def word(self, w: Word) -> Word:
        result = Word.identity(w.source)
        for letter in w.letters:
            if letter not in self.gen:
                raise TransferError(f'{self.name}: no image for generator "{letter}"')
            result = result + self.gen[letter]
        return result

    def rule_image(self, rule: Rule) -> ZigZag:
        if rule.name not in self.rule:
            raise TransferError(f'{self.name}: no image for rule "{rule.name}"')
        return self.rule[rule.name]

    def step(self, s: RewriteStep) -> ZigZag:
        image = self.rule_image(s.rule).whisker(self.word(s.left), self.word(s.right))
        return image if s.forward else image.inverse()

    def zigzag(self, z: ZigZag) -> ZigZag:
        result = ZigZag.identity(self.word(z.source))
        for s in z.steps:
            result = result.then(self.step(s))
        return result

    def check(self):
        for name, image in self.gen.items():
            gen = self.source.generator(name)
            if (image.source, image.target) != (gen.source, gen.target):
                raise TransferError(f'{self.name}({name}) = "{image}" has the wrong 0-cells')
        for name, image in self.rule.items():
            rule = self.source.rule(name)
            lhs, rhs = self.word(rule.lhs), self.word(rule.rhs)
            if image.source != lhs or image.target != rhs:
                raise TransferError(
                    f'{self.name}({name}) goes "{image.source}" => "{image.target}", '
                    f'expected "{lhs}" => "{rhs}"'
                )


@dataclass
class TransferData:
    f_gen: dict[str, Word] = field(default_factory=dict)
    f_rule: dict[str, ZigZag] = field(default_factory=dict)
    g_gen: dict[str, Word] = field(default_factory=dict)
    g_rule: dict[str, ZigZag] = field(default_factory=dict)
    tau: dict[str, ZigZag] = field(default_factory=dict)


def horizontal(z1: ZigZag, z2: ZigZag) -> ZigZag:
    """z1 ⋆₀ z2, rewriting the left factor first."""
    return (z1.whisker(Word.identity(z1.source.source), z2.source)
            .then(z2.whisker(z1.target, Word.identity(z2.target.target))))


def _tau_word(tau: dict[str, ZigZag], w: Word) -> ZigZag:
    """τ_w: FG(w) ⇒ w, the horizontal composite of the τ of its letters."""
    result = ZigZag.identity(Word.identity(w.source))
    for letter in w.letters:
        if letter not in tau:
            raise TransferError(f'tau: no 2-cell for generator "{letter}"')
        result = horizontal(result, tau[letter])
    return result


def _tau_cell_name(rule: Rule) -> str:
    return 'tau_' + re.sub(r'[^A-Za-z0-9_]', '', rule.name.replace('[', '_'))


def transfer_homotopy_basis(sigma: Polygraph, xi: Polygraph, data: TransferData,
                            gamma: Sequence[ThreeCell]) -> list[ThreeCell]:
    f = TwoFunctor(sigma, xi, data.f_gen, data.f_rule, 'F')
    g = TwoFunctor(xi, sigma, data.g_gen, data.g_rule, 'G')
    try:
        f.check()
        g.check()
    except PolygraphError as exc:
        raise TransferError(str(exc)) from exc

    for letter, image in data.tau.items():
        expected = f.word(g.word(xi.word([letter])))
        if image.source != expected or image.target != xi.word([letter]):
            raise TransferError(
                f'tau({letter}) goes "{image.source}" => "{image.target}", '
                f'expected "{expected}" => "{letter}"'
            )

    cells = []
    try:
        for cell in gamma:
            cells.append(ThreeCell(f'F_{cell.name}', f.zigzag(cell.source), f.zigzag(cell.target)))
        for rule in xi.rules:
            alpha = _single(rule)
            tau_u = _tau_word(data.tau, rule.lhs)
            tau_v = _tau_word(data.tau, rule.rhs)
            source = f.zigzag(g.zigzag(alpha)).then(tau_v)
            cells.append(ThreeCell(_tau_cell_name(rule), source, tau_u.then(alpha)))
    except PolygraphError as exc:
        raise TransferError(str(exc)) from exc
    logger.info(f'Transfer produced {len(cells)} 3-cells')
    return cells


_MAP_LINE = re.compile(r'^(F|G|tau)\s*:\s*(\S+)\s*=>\s*(.*)$')


def parse_transfer_map(text: str, sigma: Polygraph, xi: Polygraph) -> TransferData:
    data = TransferData()
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        match = _MAP_LINE.match(line)
        if match is None:
            raise TransferError(f'line {number}: expected "F|G|tau: name => image"')
        which, name, image = match.groups()
        domain, codomain = (sigma, xi) if which == 'F' else (xi, sigma)
        if which == 'tau':
            domain = codomain = xi
        try:
            if which == 'tau':
                data.tau[name] = parse_zigzag(xi, image)
            elif domain.has_generator(name):
                target = data.f_gen if which == 'F' else data.g_gen
                target[name] = parse_typed_word(codomain, image)
            else:
                domain.rule(name)
                target = data.f_rule if which == 'F' else data.g_rule
                target[name] = parse_zigzag(codomain, image)
        except PolygraphError as exc:
            raise TransferError(f'line {number}: {exc}') from exc
    return data
