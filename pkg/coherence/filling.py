"""
Filling 2-spheres with composites of the Squier 3-cells.

``fill_positive`` handles two positive paths into a normal form by
noetherian recursion on their common source: split off the first steps,
close that local branching, and fill the two remaining squares against the
leftmost normalization path of the join. ``fill_sphere`` reduces arbitrary
zigzags to that case, one step at a time, against the leftmost paths σ.
"""
from __future__ import annotations

import logging

from django.conf import settings

from branchings.local import BranchingKind, LocalBranching, classify_local_branching, close_local_branching
from presentations.cells import Word
from presentations.exceptions import PolygraphError
from rewriting.exceptions import FuelExhausted
from rewriting.normalize import Strategy, normalize
from rewriting.paths import RewriteStep, ZigZag
from rewriting.redexes import is_normal, step_at
from .expressions import Comp1, Comp2, Exchange, Gen, Id2, Inv, ThreeCellExpr, Whisker, compose2
from .squier import CoherentPresentation

logger = logging.getLogger(__name__)


class StaleCompletionError(PolygraphError):
    """An overlapping branching whose critical core has no 3-cell."""


def _tail(path: ZigZag) -> ZigZag:
    return ZigZag(path.steps[0].target, path.steps[1:])


def fill_local_branching(cp: CoherentPresentation, f: RewriteStep,
                         g: RewriteStep) -> tuple[ZigZag, ZigZag, ThreeCellExpr]:
    """(f′, g′, e) with e: f ⋆₁ f′ ⇛ g ⋆₁ g′."""
    kind = classify_local_branching(f, g)
    if kind is BranchingKind.ASPHERICAL:
        f_prime, g_prime = close_local_branching(f, g)
        return f_prime, g_prime, Id2(ZigZag(f.source, (f,)))
    if kind is BranchingKind.PEIFFER:
        f_prime, g_prime = close_local_branching(f, g)
        return f_prime, g_prime, Exchange(f, g)

    word = f.source
    start = min(f.position, g.position)
    stop = max(f.span[1], g.span[1])
    u, core, v = word.prefix(start), word.factor(start, stop), word.suffix(stop)
    h = step_at(core, f.rule, f.position - start)
    k = step_at(core, g.rule, g.position - start)
    cell = cp.cell_for(LocalBranching(h, k).key)
    if cell is None:
        raise StaleCompletionError(f'no 3-cell for the critical branching ({h}, {k}) on "{core}"')
    if cell.source.steps[0] == h:
        expr, f_side, g_side = Gen(cell), cell.source, cell.target
    else:
        expr, f_side, g_side = Inv(Gen(cell)), cell.target, cell.source
    return _tail(f_side).whisker(u, v), _tail(g_side).whisker(u, v), Whisker(u, expr, v)


class _Filler:
    def __init__(self, cp: CoherentPresentation, fuel: int | None):
        self.cp = cp
        self.fuel = fuel if fuel is not None else getattr(settings, 'FILL_FUEL', 1_000_000)
        self.spent = 0
        self._sigma: dict[Word, ZigZag] = {}
        self._positive: dict[tuple[ZigZag, ZigZag], ThreeCellExpr] = {}

    def sigma(self, word: Word) -> ZigZag:
        if word not in self._sigma:
            self._sigma[word] = normalize(self.cp.base, word, Strategy.LEFTMOST,
                                          pump_bound=self.cp.pump_bound)[1]
        return self._sigma[word]

    def is_normal(self, word: Word) -> bool:
        return is_normal(self.cp.base, word, self.cp.pump_bound)

    def positive(self, f: ZigZag, g: ZigZag) -> ThreeCellExpr:
        key = (f, g)
        if key not in self._positive:
            self._positive[key] = self._fill_positive(f, g)
        return self._positive[key]

    def _fill_positive(self, f: ZigZag, g: ZigZag) -> ThreeCellExpr:
        self.spent += 1
        if self.spent > self.fuel:
            logger.warning(f'Fill fuel {self.fuel} exhausted')
            raise FuelExhausted(f'no filler within {self.fuel} recursive calls')
        if f == g:
            return Id2(f)
        f1, g1 = f.steps[0], g.steps[0]
        nf = f.target
        if f1 == g1:
            return Comp1(ZigZag(f.source, (f1,)), self.positive(_tail(f), _tail(g)),
                         ZigZag.identity(nf))

        f1_prime, g1_prime, local = fill_local_branching(self.cp, f1, g1)
        h = self.sigma(f1_prime.target)
        left = self.positive(_tail(f), f1_prime.then(h))
        right = self.positive(g1_prime.then(h), _tail(g))
        return compose2([
            Comp1(ZigZag(f.source, (f1,)), left, ZigZag.identity(nf)),
            Comp1(ZigZag.identity(f.source), local, h),
            Comp1(ZigZag(g.source, (g1,)), right, ZigZag.identity(nf)),
        ])

    def segment(self, step: RewriteStep) -> ThreeCellExpr:
        """step ⇛ σ(source) ⋆₁ σ(target)⁻ for a single signed step."""
        if step.forward:
            sigma_b = self.sigma(step.target)
            filler = self.positive(ZigZag(step.source, (step,)).then(sigma_b), self.sigma(step.source))
            return Comp1(ZigZag.identity(step.source), filler, sigma_b.inverse())
        forward = step.inverse()
        sigma_b = self.sigma(step.target)
        filler = self.positive(ZigZag(forward.source, (forward,)).then(self.sigma(forward.target)), sigma_b)
        return Inv(Comp1(ZigZag(step.source, (step,)), filler, sigma_b.inverse()))

    def to_sigma(self, z: ZigZag) -> ThreeCellExpr:
        """z ⇛ σ(source) ⋆₁ σ(target)⁻."""
        if not z.steps:
            return Id2(z)
        words = z.words()
        sigma_0 = self.sigma(words[0])
        stages = []
        for i, step in enumerate(z.steps):
            pre = ZigZag.identity(words[0]) if i == 0 else sigma_0.then(self.sigma(words[i]).inverse())
            post = ZigZag(step.target, z.steps[i + 1:])
            stages.append(Comp1(pre, self.segment(step), post))
        return compose2(stages)

    def sphere(self, f: ZigZag, g: ZigZag) -> ThreeCellExpr:
        if f.reduced() == g.reduced():
            return Id2(f)
        if f.is_positive and g.is_positive and self.is_normal(f.target):
            return self.positive(f, g)
        return Comp2(self.to_sigma(f), Inv(self.to_sigma(g)))


def fill_positive(cp: CoherentPresentation, f: ZigZag, g: ZigZag, fuel: int | None = None) -> ThreeCellExpr:
    """A filler f ⇛ g for positive paths with a common source and a normal target."""
    if f.source != g.source or f.target != g.target:
        raise PolygraphError(f'2-cells "{f}" and "{g}" are not parallel')
    if not (f.is_positive and g.is_positive):
        raise PolygraphError('fill_positive needs positive 2-cells')
    filler = _Filler(cp, fuel)
    if not filler.is_normal(f.target):
        raise PolygraphError(f'"{f.target}" is not a normal form')
    return filler.positive(f, g)


def fill_sphere(cp: CoherentPresentation, f: ZigZag, g: ZigZag, fuel: int | None = None) -> ThreeCellExpr:
    """A composite of the cells of ``cp`` with boundary (f, g)."""
    if f.source != g.source or f.target != g.target:
        raise PolygraphError(f'2-cells "{f}" and "{g}" are not parallel')
    return _Filler(cp, fuel).sphere(f, g)
