"""
Linearization of cells: words, 2-cells and 3-cell expressions become
elements of the free modules ZM[Σ₁], ZM[Σ₂] and ZM[Σ₃].

    [1] = 0,  [uv] = [u] + ū[v]
    [ufv] = ū[f],  [f ⋆₁ g] = [f] + [g],  [f⁻] = −[f]
    [uAv] = ū[A],  [A ⋆₁ B] = [A ⋆₂ B] = [A] + [B]
"""
from __future__ import annotations

from coherence.expressions import Comp1, Comp2, Exchange, Gen, Id2, Inv, ThreeCellExpr, Whisker
from presentations.cells import Word
from rewriting.paths import ZigZag
from .ring import Combination, MonoidRing


def fox_bracket(ring: MonoidRing, w: Word) -> Combination:
    return Combination(
        ((ring.nf(w.prefix(i)), letter), 1) for i, letter in enumerate(w.letters)
    )


def bracket_2cell(ring: MonoidRing, f: ZigZag) -> Combination:
    return Combination(
        ((ring.nf(step.left), step.rule.name), 1 if step.forward else -1) for step in f.steps
    )


def bracket_3cell(ring: MonoidRing, e: ThreeCellExpr) -> Combination:
    if isinstance(e, Gen):
        return Combination.basis((ring.one, e.cell.name))
    if isinstance(e, Inv):
        return -bracket_3cell(ring, e.expr)
    if isinstance(e, Whisker):
        return ring.act(ring.nf(e.left), bracket_3cell(ring, e.expr))
    if isinstance(e, Comp1):
        return bracket_3cell(ring, e.expr)
    if isinstance(e, Comp2):
        return bracket_3cell(ring, e.first) + bracket_3cell(ring, e.second)
    if isinstance(e, (Id2, Exchange)):
        return Combination.zero()
    raise TypeError(f'not a 3-cell expression: {e!r}')
