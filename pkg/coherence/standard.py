"""
The standard coherent presentation of a finite monoid given by its
multiplication table.

Table files read::

    elements: 1 a
    1: 1 a
    a: a a

Each row ``u: ...`` lists u·v for v in element order.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass

from presentations.cells import Generator, Polygraph, Rule, ThreeCell, Word
from rewriting.paths import RewriteStep, ZigZag

logger = logging.getLogger(__name__)

_ELEMENT = re.compile(r'^[A-Za-z0-9_]+$')


class TableError(ValueError):
    """Malformed, non-associative or unit-less multiplication table."""


@dataclass(frozen=True)
class MultiplicationTable:
    elements: tuple[str, ...]
    products: dict[tuple[str, str], str]

    def mult(self, u: str, v: str) -> str:
        return self.products[u, v]

    def find_unit(self) -> str:
        for e in self.elements:
            if all(self.mult(e, v) == v and self.mult(v, e) == v for v in self.elements):
                return e
        raise TableError('table has no unit element')

    def check(self):
        for u in self.elements:
            for v in self.elements:
                for w in self.elements:
                    if self.mult(self.mult(u, v), w) != self.mult(u, self.mult(v, w)):
                        raise TableError(f'not associative: ({u}{v}){w} != {u}({v}{w})')
        self.find_unit()


def parse_table(text: str) -> MultiplicationTable:
    lines = [line.split('#', 1)[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines or not lines[0].startswith('elements:'):
        raise TableError('table must start with "elements:"')
    elements = tuple(lines[0].partition(':')[2].split())
    if not elements:
        raise TableError('table has no elements')
    for e in elements:
        if not _ELEMENT.match(e):
            raise TableError(f'invalid element name "{e}"')
    if len(set(elements)) != len(elements):
        raise TableError('duplicate element names')

    products: dict[tuple[str, str], str] = {}
    for line in lines[1:]:
        u, sep, row = line.partition(':')
        u = u.strip()
        if not sep or u not in elements:
            raise TableError(f'bad row "{line}"')
        values = row.split()
        if len(values) != len(elements):
            raise TableError(f'row {u}: expected {len(elements)} entries, got {len(values)}')
        for v, uv in zip(elements, values):
            if uv not in elements:
                raise TableError(f'row {u}: unknown element "{uv}"')
            if (u, v) in products:
                raise TableError(f'row {u} given twice')
            products[u, v] = uv
    missing = [u for u in elements if (u, elements[0]) not in products]
    if missing:
        raise TableError(f'missing rows for {", ".join(missing)}')
    table = MultiplicationTable(elements, products)
    table.check()
    return table


def standard_coherent_presentation(table: MultiplicationTable) -> Polygraph:
    """
    Generators hat_u, rules gamma_u_v: hat_u hat_v => hat_uv and
    iota: hat_1 => 1, 3-cells alpha_u_v_w, lambda_u and rho_u.
    """
    table.check()
    unit = table.find_unit()
    elements = table.elements
    hat = {u: f'hat_{u}' for u in elements}
    p = Polygraph(generators=tuple(Generator(hat[u]) for u in elements))

    def word(*names: str) -> Word:
        return p.word([hat[n] for n in names])

    gamma = {
        (u, v): Rule(f'gamma_{u}_{v}', word(u, v), word(table.mult(u, v)))
        for u in elements for v in elements
    }
    iota = Rule('iota', word(unit), Word.identity())
    p = p.with_rules([*gamma.values(), iota])

    def step(left: Word, rule: Rule, right: Word, forward: bool = True) -> ZigZag:
        s = RewriteStep(left, rule, right, forward)
        return ZigZag(s.source, (s,))

    empty = Word.identity()
    cells = []
    for u in elements:
        for v in elements:
            for w in elements:
                uv, vw = table.mult(u, v), table.mult(v, w)
                source = step(empty, gamma[u, v], word(w)).then(step(empty, gamma[uv, w], empty))
                target = step(word(u), gamma[v, w], empty).then(step(empty, gamma[u, vw], empty))
                cells.append(ThreeCell(f'alpha_{u}_{v}_{w}', source, target))
    for u in elements:
        source = step(empty, iota, word(u), forward=False).then(step(empty, gamma[unit, u], empty))
        cells.append(ThreeCell(f'lambda_{u}', source, ZigZag.identity(word(u))))
    for u in elements:
        source = step(word(u), iota, empty, forward=False).then(step(empty, gamma[u, unit], empty))
        cells.append(ThreeCell(f'rho_{u}', source, ZigZag.identity(word(u))))

    logger.info(f'Standard presentation: {len(elements)} generators, '
                f'{len(p.rules)} rules, {len(cells)} 3-cells')
    return p.with_three_cells(cells)
