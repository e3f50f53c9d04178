"""
Local branchings: two rewriting steps out of the same word.

Aspherical branchings use the same rule at the same position, Peiffer
branchings have disjoint redexes, and everything else overlaps.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from presentations.exceptions import PolygraphError
from rewriting.paths import RewriteStep, ZigZag
from rewriting.redexes import step_at


class BranchingKind(enum.Enum):
    ASPHERICAL = 'aspherical'
    PEIFFER = 'peiffer'
    OVERLAPPING = 'overlapping'


def step_order(step: RewriteStep, rank) -> tuple:
    """Position first, then rule rank: the lexicographic order on steps."""
    return step.position, rank(step.rule)


@dataclass(frozen=True)
class LocalBranching:
    step1: RewriteStep
    step2: RewriteStep

    def __post_init__(self):
        if not (self.step1.forward and self.step2.forward):
            raise PolygraphError('a branching is made of forward steps')
        if self.step1.source != self.step2.source:
            raise PolygraphError(
                f'steps {self.step1} and {self.step2} do not start from the same word'
            )

    @property
    def source(self):
        return self.step1.source

    @property
    def kind(self) -> BranchingKind:
        return classify_local_branching(self.step1, self.step2)

    @property
    def offset(self) -> int:
        return self.step2.position - self.step1.position

    @property
    def key(self) -> tuple:
        """Identity as an unordered pair of steps."""
        return self.source.letters, frozenset((self.step1.key, self.step2.key))

    def __str__(self) -> str:
        return f'({self.step1}, {self.step2}) on "{self.source}"'


def classify_local_branching(f: RewriteStep, g: RewriteStep) -> BranchingKind:
    if f.source != g.source:
        raise PolygraphError(f'steps {f} and {g} do not start from the same word')
    if f.rule == g.rule and f.position == g.position:
        return BranchingKind.ASPHERICAL
    (f_start, f_end), (g_start, g_end) = f.span, g.span
    if f_end <= g_start or g_end <= f_start:
        return BranchingKind.PEIFFER
    return BranchingKind.OVERLAPPING


def cross(step: RewriteStep, other: RewriteStep) -> RewriteStep:
    """
    Transport ``step`` to the target of ``other``; their redexes must be
    disjoint. This is the completing step of a Peiffer square.
    """
    if classify_local_branching(step, other) is not BranchingKind.PEIFFER:
        raise PolygraphError(f'steps {step} and {other} are not independent')
    position = step.position
    if position >= other.span[1]:
        position += len(other.rule.rhs) - len(other.rule.lhs)
    return step_at(other.target, step.rule, position)


def close_local_branching(f: RewriteStep, g: RewriteStep) -> tuple[ZigZag, ZigZag]:
    """
    (f′, g′) with f ⋆₁ f′ = g ⋆₁ g′ for aspherical and Peiffer branchings.
    Overlapping branchings need a confluence of their critical core instead.
    """
    kind = classify_local_branching(f, g)
    if kind is BranchingKind.ASPHERICAL:
        identity = ZigZag.identity(f.target)
        return identity, identity
    if kind is BranchingKind.PEIFFER:
        return ZigZag(f.target, (cross(g, f),)), ZigZag(g.target, (cross(f, g),))
    raise PolygraphError(f'branching ({f}, {g}) overlaps')
