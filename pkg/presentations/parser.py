"""
Presentation files: parsing and canonical serialization.

    monoid
    generators: a s t
    order: a < s < t
    rules:
      alpha: t a => a s
      beta: s t => a
    pumped:
      alpha[n]: a (t)^n b => 1
    threecells:
      A: 1 * beta * a . 1 * ... === s * alpha * 1 . ...

Line breaks, ``;`` and ``,`` separate entries; ``#`` starts a comment.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from rewriting.paths import RewriteStep, ZigZag
from .cells import (
    CATEGORY, MONOID, MONOID_OBJECT, Affine, Generator, Polygraph, PumpedRule,
    Rule, ThreeCell, Word,
)
from .exceptions import ParseError, PolygraphError
from .validators import validate

HEADERS = (MONOID, CATEGORY)
SECTIONS = ('objects', 'generators', 'order', 'rules', 'pumped', 'threecells')
SEPARATORS = ('NL', ';', ',')

TOKEN_RE = re.compile(r"""
    (?P<NL>\n)
  | (?P<SKIP>[ \t\r]+|\#[^\n]*)
  | (?P<EQ3>===)
  | (?P<ARROW2>=>)
  | (?P<ARROW>->)
  | (?P<INDEX>\[(?:n|\d+)\])
  | (?P<INT>\d+)
  | (?P<NAME>[A-Za-z_][A-Za-z0-9_'′]*)
  | (?P<PUNCT>[:;.*<()^+,])
  | (?P<ERROR>.)
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, line_start = 1, 0
    for m in TOKEN_RE.finditer(text):
        kind = m.lastgroup
        column = m.start() - line_start + 1
        if kind == 'NL':
            tokens.append(Token('NL', '\n', line, column))
            line += 1
            line_start = m.end()
        elif kind == 'SKIP':
            continue
        elif kind == 'ERROR':
            raise ParseError(f'unexpected character {m.group()!r}', line, column)
        elif kind == 'PUNCT':
            tokens.append(Token(m.group(), m.group(), line, column))
        elif kind in ('EQ3', 'ARROW2', 'ARROW'):
            tokens.append(Token(m.group(), m.group(), line, column))
        else:
            tokens.append(Token(kind, m.group(), line, column))
    tokens.append(Token('EOF', '', line, 1))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token], polygraph: Polygraph | None = None):
        self.tokens = tokens
        self.pos = 0
        self.kind = MONOID
        self.zero_cells: tuple[str, ...] = (MONOID_OBJECT,)
        self.generators: dict[str, Generator] = {}
        self.order: tuple[str, ...] | None = None
        self.rules: list[Rule] = []
        self.pumped: list[PumpedRule] = []
        self.polygraph = polygraph

    # ── Token helpers ────────────────────────────────────────────────────────
    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.peek()
        self.pos += 1
        return token

    def error(self, message: str, token: Token | None = None) -> ParseError:
        token = token or self.peek()
        return ParseError(message, token.line, token.column)

    def expect(self, kind: str, text: str | None = None) -> Token:
        token = self.peek()
        if token.kind != kind or (text is not None and token.text != text):
            wanted = text or kind
            found = token.text if token.kind != 'EOF' else 'end of input'
            raise self.error(f'expected {wanted!r}, found {found!r}', token)
        return self.advance()

    def skip_separators(self):
        while self.peek().kind in SEPARATORS:
            self.advance()

    def at_section(self) -> bool:
        token = self.peek()
        return (token.kind == 'NAME' and token.text in SECTIONS
                and self.peek(1).kind == ':')

    def at_entry_end(self) -> bool:
        return self.peek().kind in SEPARATORS + ('EOF',) or self.at_section()

    # ── Words ────────────────────────────────────────────────────────────────
    def names(self) -> tuple[list[str], Token]:
        """Generator names of a word; ``1`` gives the empty list."""
        start = self.peek()
        if start.kind == 'INT':
            if start.text != '1':
                raise self.error(f'"{start.text}" is not a word (use 1 for the identity)')
            self.advance()
            return [], start
        names = []
        while self.peek().kind == 'NAME' and not self.at_section():
            names.append(self.advance().text)
        return names, start

    def typed_word(self, names: list[str], token: Token, obj: str | None = None) -> Word:
        if not names:
            return Word.identity(obj if obj is not None else self.zero_cells[0])
        objects = []
        for name in names:
            gen = self.generators.get(name)
            if gen is None:
                raise self.error(f'unknown generator "{name}"', token)
            if objects and gen.source != objects[-1]:
                raise self.error(f'word "{" ".join(names)}" is not composable at "{name}"', token)
            if not objects:
                objects.append(gen.source)
            objects.append(gen.target)
        return Word(tuple(names), tuple(objects))

    def word(self, obj: str | None = None) -> Word:
        names, token = self.names()
        if not names and token.kind != 'INT':
            raise self.error('expected a word')
        return self.typed_word(names, token, obj)

    # ── Sections ─────────────────────────────────────────────────────────────
    def polygraph_file(self) -> Polygraph:
        self.skip_separators()
        header = self.expect('NAME')
        if header.text not in HEADERS:
            raise self.error(f'expected "monoid" or "category", found "{header.text}"', header)
        self.kind = header.text
        seen = []
        while True:
            self.skip_separators()
            if self.peek().kind == 'EOF':
                break
            if not self.at_section():
                raise self.error(f'unexpected {self.peek().text!r}')
            section = self.advance().text
            self.expect(':')
            if section in seen:
                raise self.error(f'section "{section}" appears twice')
            if seen and SECTIONS.index(section) < SECTIONS.index(seen[-1]):
                raise self.error(f'section "{section}" must come before "{seen[-1]}"')
            seen.append(section)
            getattr(self, f'section_{section}')()
        if self.kind == CATEGORY and 'objects' not in seen:
            raise self.error('a category presentation needs an "objects:" section')
        if 'generators' not in seen:
            raise self.error('missing "generators:" section')
        if 'rules' not in seen:
            raise self.error('missing "rules:" section')
        return self.polygraph if 'threecells' in seen else self.build()

    def build(self, three_cells: tuple[ThreeCell, ...] = ()) -> Polygraph:
        return Polygraph(
            kind=self.kind,
            zero_cells=self.zero_cells,
            generators=tuple(self.generators.values()),
            rules=tuple(self.rules),
            pumped=tuple(self.pumped),
            three_cells=three_cells,
            order=self.order,
        )

    def section_objects(self):
        if self.kind != CATEGORY:
            raise self.error('"objects:" is only allowed in a category presentation')
        names = []
        while True:
            self.skip_separators()
            if self.at_section() or self.peek().kind == 'EOF':
                break
            names.append(self.expect('NAME').text)
        if not names:
            raise self.error('"objects:" lists no 0-cell')
        self.zero_cells = tuple(names)

    def section_generators(self):
        while True:
            self.skip_separators()
            if self.at_section() or self.peek().kind == 'EOF':
                return
            token = self.expect('NAME')
            if token.text in self.generators:
                raise self.error(f'generator "{token.text}" declared twice', token)
            if self.peek().kind == ':':
                self.advance()
                source = self.expect('NAME').text
                self.expect('->')
                target = self.expect('NAME').text
                if self.kind == MONOID:
                    raise self.error(f'generator "{token.text}" is typed in a monoid', token)
                for obj in (source, target):
                    if obj not in self.zero_cells:
                        raise self.error(f'unknown 0-cell "{obj}"', token)
                gen = Generator(token.text, source, target)
            elif self.kind == CATEGORY:
                raise self.error(f'generator "{token.text}" needs "source -> target"', token)
            else:
                gen = Generator(token.text)
            self.generators[gen.name] = gen

    def section_order(self):
        self.skip_separators()
        names = [self.expect('NAME').text]
        while self.peek().kind == '<':
            self.advance()
            names.append(self.expect('NAME').text)
        self.order = tuple(names)

    def section_rules(self):
        while True:
            self.skip_separators()
            if self.at_section() or self.peek().kind == 'EOF':
                return
            name = self.expect('NAME')
            self.expect(':')
            lhs = self.word()
            self.expect('=>')
            rhs_token = self.peek()
            rhs = self.word(obj=lhs.source)
            if not lhs.letters:
                raise self.error(f'rule {name.text}: lhs is an identity', name)
            if (lhs.source, lhs.target) != (rhs.source, rhs.target):
                raise self.error(f'rule {name.text}: lhs and rhs are not parallel', rhs_token)
            if not self.at_entry_end():
                raise self.error(f'unexpected {self.peek().text!r} after rule {name.text}')
            self.rules.append(Rule(name.text, lhs, rhs))

    def affine(self) -> Affine:
        token = self.peek()
        if token.kind == 'INT':
            return Affine(0, int(self.advance().text))
        self.expect('NAME', 'n')
        if self.peek().kind == '+':
            self.advance()
            return Affine(1, int(self.expect('INT').text))
        return Affine(1, 0)

    def section_pumped(self):
        while True:
            self.skip_separators()
            if self.at_section() or self.peek().kind == 'EOF':
                return
            stem = self.expect('NAME')
            self.expect('INDEX', '[n]')
            self.expect(':')
            prefix_names, prefix_token = self.names()
            self.expect('(')
            pump_token = self.expect('NAME')
            pump = self.generators.get(pump_token.text)
            if pump is None:
                raise self.error(f'unknown generator "{pump_token.text}"', pump_token)
            if not pump.is_loop:
                raise self.error(f'pump letter "{pump.name}" is not a loop', pump_token)
            self.expect(')')
            self.expect('^')
            self.expect('NAME', 'n')
            suffix_names, suffix_token = self.names()
            self.expect('=>')
            rhs_names, rhs_token = self.names()
            count, rhs_suffix_names, rhs_suffix_token = Affine(0, 0), [], rhs_token
            if self.peek().kind == '(':
                self.advance()
                rhs_pump = self.expect('NAME')
                if rhs_pump.text != pump.name:
                    raise self.error(f'pumped rule {stem.text}: both sides must pump "{pump.name}"', rhs_pump)
                self.expect(')')
                self.expect('^')
                self.expect('(')
                count = self.affine()
                self.expect(')')
                rhs_suffix_names, rhs_suffix_token = self.names()
            try:
                family = PumpedRule(
                    stem=stem.text,
                    lhs_prefix=self.typed_word(prefix_names, prefix_token, pump.source),
                    pump=pump.name,
                    lhs_suffix=self.typed_word(suffix_names, suffix_token, pump.target),
                    rhs_prefix=self.typed_word(rhs_names, rhs_token, pump.source),
                    rhs_count=count,
                    rhs_suffix=self.typed_word(rhs_suffix_names, rhs_suffix_token, pump.target),
                    pump_object=pump.source,
                )
                for n in (0, 1):
                    rule = family.instance(n)
                    if (rule.lhs.source, rule.lhs.target) != (rule.rhs.source, rule.rhs.target):
                        raise PolygraphError(f'pumped rule {stem.text}: sides are not parallel')
            except PolygraphError as exc:
                raise self.error(str(exc), stem) from None
            if not self.at_entry_end():
                raise self.error(f'unexpected {self.peek().text!r} after pumped rule {stem.text}')
            self.pumped.append(family)

    def section_threecells(self):
        self.polygraph = self.build()
        cells = []
        while True:
            self.skip_separators()
            if self.at_section() or self.peek().kind == 'EOF':
                break
            name = self.expect('NAME')
            self.expect(':')
            source = self.zigzag()
            self.expect('===')
            target = self.zigzag()
            cells.append(ThreeCell(name.text, source, target))
        self.polygraph = self.build(tuple(cells))

    # ── Zigzags ──────────────────────────────────────────────────────────────
    def rule_ref(self) -> Rule:
        token = self.expect('NAME')
        name = token.text
        if self.peek().kind == 'INDEX':
            name += self.advance().text
        try:
            return self.polygraph.rule(name)
        except PolygraphError as exc:
            raise self.error(str(exc), token) from None

    def step(self) -> RewriteStep:
        forward = True
        if self.peek().text == 'inv' and self.peek(1).kind == '(':
            self.advance()
            self.advance()
            forward = False
        left_names, left_token = self.names()
        self.expect('*')
        rule = self.rule_ref()
        self.expect('*')
        right_names, right_token = self.names()
        if not forward:
            self.expect(')')
        left = self.typed_word(left_names, left_token, rule.lhs.source)
        right = self.typed_word(right_names, right_token, rule.lhs.target)
        return RewriteStep(left, rule, right, forward)

    def zigzag(self) -> ZigZag:
        start = self.peek()
        if start.text == 'id' and self.peek(1).kind == '(':
            self.advance()
            self.advance()
            word = self.word()
            self.expect(')')
            return ZigZag.identity(word)
        steps = [self.step()]
        while self.peek().kind == '.':
            self.advance()
            steps.append(self.step())
        try:
            return ZigZag.of(steps)
        except PolygraphError as exc:
            raise self.error(str(exc), start) from None


def parse_polygraph(text: str) -> Polygraph:
    parser = _Parser(tokenize(text))
    p = parser.polygraph_file()
    diagnostics = validate(p)
    if diagnostics:
        raise ParseError('; '.join(diagnostics))
    return p


def parse_word(p: Polygraph, text: str) -> Word:
    try:
        return p.word(text)
    except PolygraphError as exc:
        raise ParseError(str(exc)) from None


def _parser_for(p: Polygraph, text: str) -> _Parser:
    parser = _Parser(tokenize(text), polygraph=p)
    parser.kind = p.kind
    parser.zero_cells = p.zero_cells
    parser.generators = {g.name: g for g in p.generators}
    return parser


def parse_zigzag(p: Polygraph, text: str) -> ZigZag:
    """A zigzag in the path syntax: ``u * rule * v . inv(u * rule * v)`` or ``id(w)``."""
    parser = _parser_for(p, text)
    parser.skip_separators()
    result = parser.zigzag()
    parser.skip_separators()
    parser.expect('EOF')
    return result


def parse_typed_word(p: Polygraph, text: str) -> Word:
    parser = _parser_for(p, text)
    parser.skip_separators()
    result = parser.word()
    parser.skip_separators()
    parser.expect('EOF')
    return result


# ── Serialization ────────────────────────────────────────────────────────────

def format_family(family: PumpedRule) -> str:
    lhs = ' '.join([*family.lhs_prefix.letters, f'({family.pump})^n', *family.lhs_suffix.letters])
    if family.rhs_count == Affine(0, 0) and not family.rhs_suffix.letters:
        rhs = str(family.rhs_prefix)
    else:
        rhs = ' '.join([*family.rhs_prefix.letters, f'({family.pump})^({family.rhs_count})',
                        *family.rhs_suffix.letters])
    return f'{family.stem}[n]: {lhs} => {rhs}'


def serialize_polygraph(p: Polygraph) -> str:
    lines = [p.kind]
    if p.kind == CATEGORY:
        lines.append('objects: ' + ' '.join(p.zero_cells))
    if p.kind == CATEGORY:
        decls = [f'{g.name}: {g.source} -> {g.target}' for g in p.generators]
        lines.append(('generators: ' + ', '.join(decls)) if decls else 'generators:')
    else:
        lines.append(' '.join(['generators:', *p.generator_names]))
    if p.order is not None:
        lines.append('order: ' + ' < '.join(p.order))
    lines.append('rules:')
    lines.extend(f'  {rule}' for rule in p.rules)
    if p.pumped:
        lines.append('pumped:')
        lines.extend(f'  {format_family(family)}' for family in p.pumped)
    if p.three_cells:
        lines.append('threecells:')
        lines.extend(f'  {cell.name}: {cell.source} === {cell.target}' for cell in p.three_cells)
    return '\n'.join(lines)
