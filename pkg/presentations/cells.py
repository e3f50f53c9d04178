"""
Cells of a (3,1)-polygraph: 0-cells, generators, words, rules, pumped rule
families and 3-cells, plus the Polygraph container itself.

Monoid presentations are the one-object case; they use the 0-cell ``*``.
All values are frozen: transformations return new objects.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property
from typing import TYPE_CHECKING, Iterable, Iterator

from .exceptions import PolygraphError

if TYPE_CHECKING:
    from rewriting.paths import ZigZag

MONOID_OBJECT = '*'

MONOID = 'monoid'
CATEGORY = 'category'


@dataclass(frozen=True)
class Generator:
    name: str
    source: str = MONOID_OBJECT
    target: str = MONOID_OBJECT

    @property
    def is_loop(self) -> bool:
        return self.source == self.target


@dataclass(frozen=True)
class Word:
    """
    A path in the free category: ``letters`` are generator names and
    ``objects`` the 0-cells crossed, so ``len(objects) == len(letters) + 1``.
    """
    letters: tuple[str, ...]
    objects: tuple[str, ...]

    def __post_init__(self):
        if len(self.objects) != len(self.letters) + 1:
            raise PolygraphError(
                f'word {self.letters!r}: expected {len(self.letters) + 1} 0-cells, '
                f'got {len(self.objects)}'
            )

    @classmethod
    def identity(cls, obj: str = MONOID_OBJECT) -> 'Word':
        return cls((), (obj,))

    @classmethod
    def monoid(cls, letters: Iterable[str]) -> 'Word':
        letters = tuple(letters)
        return cls(letters, (MONOID_OBJECT,) * (len(letters) + 1))

    @property
    def source(self) -> str:
        return self.objects[0]

    @property
    def target(self) -> str:
        return self.objects[-1]

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __str__(self) -> str:
        return ' '.join(self.letters) if self.letters else '1'

    def __add__(self, other: 'Word') -> 'Word':
        if not isinstance(other, Word):
            return NotImplemented
        if self.target != other.source:
            raise PolygraphError(
                f'cannot compose "{self}" ({self.source}->{self.target}) with '
                f'"{other}" ({other.source}->{other.target})'
            )
        return Word(self.letters + other.letters, self.objects + other.objects[1:])

    def factor(self, start: int, stop: int) -> 'Word':
        return Word(self.letters[start:stop], self.objects[start:stop + 1])

    def prefix(self, stop: int) -> 'Word':
        return self.factor(0, stop)

    def suffix(self, start: int) -> 'Word':
        return self.factor(start, len(self.letters))

    def occurs_at(self, other: 'Word', position: int) -> bool:
        """True when ``other`` is the factor of this word starting at ``position``."""
        end = position + len(other.letters)
        if position < 0 or end > len(self.letters):
            return False
        if self.letters[position:end] != other.letters:
            return False
        return self.objects[position] == other.source

    def occurrences(self, other: 'Word') -> list[int]:
        return [i for i in range(len(self.letters) - len(other.letters) + 1) if self.occurs_at(other, i)]

    def contains(self, other: 'Word') -> bool:
        return bool(self.occurrences(other))

    def power(self, n: int) -> 'Word':
        result = Word.identity(self.source)
        for _ in range(n):
            result = result + self
        return result


@dataclass(frozen=True)
class Rule:
    """
    A generating 2-cell ``lhs => rhs``. Instances of pumped families keep
    their ``stem`` and ``index``; their name is ``stem[index]``.
    """
    name: str
    lhs: Word
    rhs: Word
    stem: str | None = None
    index: int | None = None

    def __str__(self) -> str:
        return f'{self.name}: {self.lhs} => {self.rhs}'

    @property
    def is_instance(self) -> bool:
        return self.stem is not None


@dataclass(frozen=True)
class Affine:
    """n ↦ p·n + q with p in {0, 1}."""
    p: int = 1
    q: int = 0

    def __call__(self, n: int) -> int:
        return self.p * n + self.q

    def __str__(self) -> str:
        if self.p == 0:
            return str(self.q)
        return 'n' if self.q == 0 else f'n+{self.q}'


@dataclass(frozen=True)
class PumpedRule:
    """
    The family ``lhs_prefix·gⁿ·lhs_suffix => rhs_prefix·g^(pn+q)·rhs_suffix``
    for every n ≥ 0, where g is ``pump``.
    """
    stem: str
    lhs_prefix: Word
    pump: str
    lhs_suffix: Word
    rhs_prefix: Word
    rhs_count: Affine
    rhs_suffix: Word
    pump_object: str = MONOID_OBJECT

    def pump_word(self, n: int) -> Word:
        return Word((self.pump,) * n, (self.pump_object,) * (n + 1))

    def instance(self, n: int) -> Rule:
        if n < 0:
            raise PolygraphError(f'pumped rule {self.stem}: negative instance {n}')
        return Rule(
            name=f'{self.stem}[{n}]',
            lhs=self.lhs_prefix + self.pump_word(n) + self.lhs_suffix,
            rhs=self.rhs_prefix + self.pump_word(self.rhs_count(n)) + self.rhs_suffix,
            stem=self.stem,
            index=n,
        )

    def min_lhs_length(self) -> int:
        return len(self.lhs_prefix) + len(self.lhs_suffix)


@dataclass(frozen=True)
class ThreeCell:
    name: str
    source: 'ZigZag'
    target: 'ZigZag'

    def is_parallel(self) -> bool:
        return (self.source.source == self.target.source
                and self.source.target == self.target.target)


@dataclass(frozen=True)
class Polygraph:
    kind: str = MONOID
    zero_cells: tuple[str, ...] = (MONOID_OBJECT,)
    generators: tuple[Generator, ...] = ()
    rules: tuple[Rule, ...] = ()
    pumped: tuple[PumpedRule, ...] = ()
    three_cells: tuple[ThreeCell, ...] = ()
    order: tuple[str, ...] | None = None

    # ── Lookups ──────────────────────────────────────────────────────────────
    @cached_property
    def _generators_by_name(self) -> dict[str, Generator]:
        return {g.name: g for g in self.generators}

    @cached_property
    def _rules_by_name(self) -> dict[str, Rule]:
        return {r.name: r for r in self.rules}

    @cached_property
    def _pumped_by_stem(self) -> dict[str, PumpedRule]:
        return {pr.stem: pr for pr in self.pumped}

    @cached_property
    def _rank(self) -> dict[str, int]:
        ranks = {r.name: i for i, r in enumerate(self.rules)}
        for i, pr in enumerate(self.pumped):
            ranks.setdefault(pr.stem, len(self.rules) + i)
        return ranks

    @property
    def is_monoid(self) -> bool:
        return self.kind == MONOID

    @property
    def generator_names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    @property
    def effective_order(self) -> tuple[str, ...]:
        """The declared order, or declaration order when none is given."""
        return self.order if self.order is not None else self.generator_names

    def generator(self, name: str) -> Generator:
        try:
            return self._generators_by_name[name]
        except KeyError:
            raise PolygraphError(f'unknown generator "{name}"') from None

    def has_generator(self, name: str) -> bool:
        return name in self._generators_by_name

    def rule(self, name: str) -> Rule:
        """Look up a rule by name; ``stem[n]`` names resolve pumped instances."""
        if name in self._rules_by_name:
            return self._rules_by_name[name]
        if name.endswith(']') and '[' in name:
            stem, _, index = name[:-1].partition('[')
            if stem in self._pumped_by_stem and index.isdigit():
                return self._pumped_by_stem[stem].instance(int(index))
        raise PolygraphError(f'unknown rule "{name}"')

    def has_rule(self, rule: Rule) -> bool:
        try:
            return self.rule(rule.name) == rule
        except PolygraphError:
            return False

    def rank(self, rule: Rule) -> tuple[int, int]:
        """Declaration rank: plain rules first, then pumped stems, then instance index."""
        key = rule.stem if rule.is_instance else rule.name
        return (self._rank.get(key, len(self._rank)), rule.index if rule.index is not None else -1)

    def three_cell(self, name: str) -> ThreeCell:
        for cell in self.three_cells:
            if cell.name == name:
                return cell
        raise PolygraphError(f'unknown 3-cell "{name}"')

    # ── Words ────────────────────────────────────────────────────────────────
    def word(self, letters: Iterable[str] | str, obj: str | None = None) -> Word:
        """
        Build a word from generator names (a list, or whitespace-separated text
        where ``1`` is the identity). ``obj`` fixes the 0-cell of an identity.
        """
        if isinstance(letters, str):
            names = letters.split()
            letters = () if names == ['1'] else tuple(names)
        letters = tuple(letters)
        if not letters:
            return Word.identity(obj if obj is not None else self.default_object)
        objects = [self.generator(letters[0]).source]
        for name in letters:
            gen = self.generator(name)
            if gen.source != objects[-1]:
                raise PolygraphError(
                    f'word "{" ".join(letters)}" is not composable at "{name}"'
                )
            objects.append(gen.target)
        return Word(letters, tuple(objects))

    @property
    def default_object(self) -> str:
        return self.zero_cells[0] if self.zero_cells else MONOID_OBJECT

    # ── Copies ───────────────────────────────────────────────────────────────
    def with_rules(self, rules: Iterable[Rule]) -> 'Polygraph':
        return replace(self, rules=tuple(rules))

    def with_rule(self, rule: Rule) -> 'Polygraph':
        return replace(self, rules=self.rules + (rule,))

    def with_three_cells(self, cells: Iterable[ThreeCell]) -> 'Polygraph':
        return replace(self, three_cells=tuple(cells))

    def without_three_cells(self) -> 'Polygraph':
        return replace(self, three_cells=())

    def fresh_rule_name(self, candidates: Iterable[str] = ()) -> str:
        taken = set(self._rank) | set(self._generators_by_name)
        for name in candidates:
            if name not in taken:
                return name
        k = len(self.rules) + 1
        while f'rule{k}' in taken:
            k += 1
        return f'rule{k}'


GREEK_NAMES = (
    'alpha', 'beta', 'gamma', 'delta', 'epsilon', 'zeta', 'eta', 'theta',
    'iota', 'kappa', 'lambda', 'mu', 'nu', 'xi', 'omicron', 'pi', 'rho',
    'sigma', 'tau', 'upsilon', 'phi', 'chi', 'psi', 'omega',
)


def instances_up_to(p: Polygraph, bound: int) -> list[Rule]:
    """All plain rules, then every pumped instance with n ≤ bound, in rank order."""
    result = list(p.rules)
    for pr in p.pumped:
        result.extend(pr.instance(n) for n in range(bound + 1))
    return result


__all__ = [
    'MONOID_OBJECT', 'MONOID', 'CATEGORY', 'Generator', 'Word', 'Rule', 'Affine',
    'PumpedRule', 'ThreeCell', 'Polygraph', 'GREEK_NAMES', 'instances_up_to',
]
