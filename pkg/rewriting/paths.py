"""
Rewriting steps and the 2-cells they generate.

A ``ZigZag`` is a 2-cell of the free (2,1)-category: a chain of signed
rewriting steps. Positive zigzags (all steps forward) are the rewriting
sequences of the free 2-category; ``TwoCellPath`` names that case.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from presentations.cells import Rule, Word
from presentations.exceptions import PolygraphError


@dataclass(frozen=True)
class RewriteStep:
    left: Word
    rule: Rule
    right: Word
    forward: bool = True

    @cached_property
    def source(self) -> Word:
        middle = self.rule.lhs if self.forward else self.rule.rhs
        return self.left + middle + self.right

    @cached_property
    def target(self) -> Word:
        middle = self.rule.rhs if self.forward else self.rule.lhs
        return self.left + middle + self.right

    @property
    def position(self) -> int:
        return len(self.left)

    @property
    def span(self) -> tuple[int, int]:
        """Redex span of the forward step, in its source word."""
        return self.position, self.position + len(self.rule.lhs)

    @property
    def key(self) -> tuple:
        return self.left.letters, self.rule.name, self.right.letters

    def inverse(self) -> 'RewriteStep':
        return RewriteStep(self.left, self.rule, self.right, not self.forward)

    def positive(self) -> 'RewriteStep':
        return self if self.forward else self.inverse()

    def whisker(self, left: Word, right: Word) -> 'RewriteStep':
        return RewriteStep(left + self.left, self.rule, self.right + right, self.forward)

    def __str__(self) -> str:
        text = f'{self.left} * {self.rule.name} * {self.right}'
        return text if self.forward else f'inv({text})'


@dataclass(frozen=True)
class ZigZag:
    source: Word
    steps: tuple[RewriteStep, ...] = ()

    def __post_init__(self):
        running = self.source
        for i, step in enumerate(self.steps):
            if step.source != running:
                raise PolygraphError(
                    f'step {i} ({step}) does not apply to "{running}"'
                )
            running = step.target
        object.__setattr__(self, '_target', running)

    @classmethod
    def identity(cls, word: Word) -> 'ZigZag':
        return cls(word, ())

    @classmethod
    def of(cls, steps: Iterable[RewriteStep], source: Word | None = None) -> 'ZigZag':
        steps = tuple(steps)
        if source is None:
            if not steps:
                raise PolygraphError('an empty zigzag needs an explicit source word')
            source = steps[0].source
        return cls(source, steps)

    @property
    def target(self) -> Word:
        return self._target

    @property
    def is_positive(self) -> bool:
        return all(step.forward for step in self.steps)

    @property
    def is_identity(self) -> bool:
        return not self.steps

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[RewriteStep]:
        return iter(self.steps)

    def __str__(self) -> str:
        if not self.steps:
            return f'id({self.source})'
        return ' . '.join(str(step) for step in self.steps)

    def words(self) -> list[Word]:
        """The source word followed by the target of every step."""
        result = [self.source]
        result.extend(step.target for step in self.steps)
        return result

    def then(self, other: 'ZigZag') -> 'ZigZag':
        """Vertical composite self ⋆₁ other."""
        if self.target != other.source:
            raise PolygraphError(
                f'cannot compose 2-cells: "{self.target}" is not "{other.source}"'
            )
        return ZigZag(self.source, self.steps + other.steps)

    def inverse(self) -> 'ZigZag':
        return ZigZag(self.target, tuple(step.inverse() for step in reversed(self.steps)))

    def whisker(self, left: Word, right: Word) -> 'ZigZag':
        return ZigZag(
            left + self.source + right,
            tuple(step.whisker(left, right) for step in self.steps),
        )

    def reduced(self) -> 'ZigZag':
        """Cancel adjacent step / inverse-step pairs until none remain."""
        stack: list[RewriteStep] = []
        for step in self.steps:
            if stack and stack[-1].key == step.key and stack[-1].forward != step.forward:
                stack.pop()
            else:
                stack.append(step)
        return ZigZag(self.source, tuple(stack))

    def equivalent(self, other: 'ZigZag') -> bool:
        """Equality up to formal identities and step/inverse cancellation."""
        return (self.source == other.source and self.target == other.target
                and self.reduced().steps == other.reduced().steps)


# Positive zigzags; positivity is a property of the value, not a separate class.
TwoCellPath = ZigZag


def compose(paths: Iterable[ZigZag], source: Word) -> ZigZag:
    result = ZigZag.identity(source)
    for path in paths:
        result = result.then(path)
    return result
