"""
The monoid ring ZM of a convergent monoid presentation and its free
left modules ZM[Σₖ].

Monoid elements are normal-form words. A ring element is a Combination
keyed by words; a module element is a Combination keyed by
(word, cell name) pairs, read as ``u[c]``.
"""
from __future__ import annotations

import logging
from typing import Callable, Hashable, Iterable, Iterator

from presentations.cells import Polygraph, Word
from presentations.exceptions import PolygraphError
from rewriting.normalize import normal_form

logger = logging.getLogger(__name__)


class Combination:
    """A finite formal ℤ-linear combination; zero coefficients are dropped."""

    __slots__ = ('terms',)

    def __init__(self, terms: dict | Iterable[tuple[Hashable, int]] = ()):
        items = terms.items() if isinstance(terms, dict) else terms
        merged: dict = {}
        for key, coefficient in items:
            merged[key] = merged.get(key, 0) + coefficient
        self.terms = {key: c for key, c in merged.items() if c}

    @classmethod
    def zero(cls) -> 'Combination':
        return cls()

    @classmethod
    def basis(cls, key, coefficient: int = 1) -> 'Combination':
        return cls({key: coefficient})

    def __iter__(self) -> Iterator:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __getitem__(self, key) -> int:
        return self.terms.get(key, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, Combination) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: 'Combination') -> 'Combination':
        return Combination([*self.terms.items(), *other.terms.items()])

    def __neg__(self) -> 'Combination':
        return Combination({key: -c for key, c in self.terms.items()})

    def __sub__(self, other: 'Combination') -> 'Combination':
        return self + (-other)

    def __rmul__(self, scalar: int) -> 'Combination':
        return Combination({key: scalar * c for key, c in self.terms.items()})

    def map_keys(self, fn: Callable) -> 'Combination':
        return Combination((fn(key), c) for key, c in self.terms.items())

    def __repr__(self) -> str:
        return f'Combination({self.terms!r})'


def total(combinations: Iterable[Combination]) -> Combination:
    return Combination([item for combination in combinations for item in combination])


class MonoidRing:
    """Arithmetic in ZM through the normal forms of ``p``."""

    def __init__(self, p: Polygraph, fuel: int | None = None, pump_bound: int | None = None):
        if not p.is_monoid:
            raise PolygraphError('monoid rings are defined for monoid presentations only')
        self.p = p
        self.fuel = fuel
        self.pump_bound = pump_bound
        self._nf: dict[Word, Word] = {}

    @property
    def one(self) -> Word:
        return Word.identity()

    def nf(self, word: Word) -> Word:
        if word not in self._nf:
            self._nf[word] = normal_form(self.p, word, self.fuel, self.pump_bound)
        return self._nf[word]

    def mult(self, u: Word, v: Word) -> Word:
        return self.nf(u + v)

    def element(self, word: Word, coefficient: int = 1) -> Combination:
        return Combination.basis(self.nf(word), coefficient)

    def unit(self, n: int = 1) -> Combination:
        return Combination.basis(self.one, n)

    def times(self, r: Combination, s: Combination) -> Combination:
        return Combination(
            (self.mult(u, v), a * b) for u, a in r for v, b in s
        )

    def act(self, u: Word, m: Combination) -> Combination:
        """u·m on a module element."""
        return m.map_keys(lambda key: (self.mult(u, key[0]), key[1]))

    def act_ring(self, r: Combination, m: Combination) -> Combination:
        return total(c * self.act(u, m) for u, c in r)

    @staticmethod
    def epsilon(r: Combination) -> int:
        """The augmentation u ↦ 1."""
        return sum(c for _, c in r)


def word_text(u: Word) -> str:
    """Compact spelling: letters run together when every name is one character."""
    if not u.letters:
        return '1'
    if all(len(x) == 1 for x in u.letters):
        return ''.join(u.letters)
    return '.'.join(u.letters)


def format_ring(r: Combination) -> str:
    """``coef*word`` terms joined by `` + ``; ``0`` for the empty sum."""
    if not r:
        return '0'
    terms = sorted(r, key=lambda item: (len(item[0]), item[0].letters))
    return ' + '.join(f'{c}*{word_text(u)}' for u, c in terms)


def format_module(m: Combination) -> str:
    """Module elements grouped by cell: ``(1*a + -1*1)[x] + ...``."""
    if not m:
        return '0'
    by_cell: dict[str, list] = {}
    for (u, cell), c in m:
        by_cell.setdefault(cell, []).append((u, c))
    return ' + '.join(f'({format_ring(Combination(by_cell[cell]))})[{cell}]' for cell in sorted(by_cell))
