"""
The partial free resolution of ℤ by left ZM-modules

    ZM[Σ₃] --d₃--> ZM[Σ₂] --d₂--> ZM[Σ₁] --d₁--> ZM --ε--> ℤ

with its contracting homotopy i₀, …, i₃ built from the leftmost
normalization strategy σ and the sphere filler.
"""
from __future__ import annotations

import logging

from coherence.filling import fill_positive
from coherence.squier import CoherentPresentation
from presentations.cells import Polygraph, ThreeCell, Word
from presentations.exceptions import PolygraphError
from rewriting.normalize import Strategy, normalize
from rewriting.paths import RewriteStep, ZigZag
from .brackets import bracket_2cell, bracket_3cell, fox_bracket
from .ring import Combination, MonoidRing, total

logger = logging.getLogger(__name__)


class Resolution:
    """
    Boundary maps and contracting homotopy for a convergent monoid
    presentation ``p``. ``cp`` (its Squier completion) is needed for d₃ and
    i₃ only. ``ring`` defaults to the monoid ring of ``p``.
    """

    def __init__(self, p: Polygraph, cp: CoherentPresentation | None = None,
                 ring: MonoidRing | None = None, fuel: int | None = None,
                 pump_bound: int | None = None):
        self.p = p
        self.cp = cp
        self.fuel = fuel
        self.pump_bound = pump_bound
        self.ring = ring if ring is not None else MonoidRing(p, fuel, pump_bound)
        self._cells: dict[str, ThreeCell] = {}
        if cp is not None:
            self._cells = {cell.name: cell for cell in cp.cells}
        elif p.three_cells:
            self._cells = {cell.name: cell for cell in p.three_cells}

    # ── Bases ────────────────────────────────────────────────────────────────
    @property
    def generators(self) -> list[str]:
        return list(self.p.generator_names)

    @property
    def rules(self) -> list[str]:
        if self.p.pumped:
            raise PolygraphError('pumped families give infinitely many 2-cells')
        return [rule.name for rule in self.p.rules]

    @property
    def cells(self) -> list[str]:
        return list(self._cells)

    def cell(self, name: str) -> ThreeCell:
        try:
            return self._cells[name]
        except KeyError:
            raise PolygraphError(f'unknown 3-cell "{name}"') from None

    def sigma(self, word: Word) -> ZigZag:
        return normalize(self.p, word, Strategy.LEFTMOST, self.fuel, self.pump_bound)[1]

    # ── Boundary maps ────────────────────────────────────────────────────────
    def epsilon(self, r: Combination) -> int:
        return self.ring.epsilon(r)

    def d1(self, m: Combination) -> Combination:
        """u[x] ↦ ux − u"""
        ring = self.ring
        return total(
            c * (ring.element(u + self.p.word([x])) - Combination.basis(u))
            for (u, x), c in m
        )

    def d2(self, m: Combination) -> Combination:
        """u[α] ↦ u([s(α)] − [t(α)])"""
        ring = self.ring
        terms = []
        for (u, name), c in m:
            rule = self.p.rule(name)
            terms.append(c * ring.act(u, fox_bracket(ring, rule.lhs) - fox_bracket(ring, rule.rhs)))
        return total(terms)

    def d3(self, m: Combination) -> Combination:
        """u[A] ↦ u([s₂(A)] − [t₂(A)])"""
        ring = self.ring
        terms = []
        for (u, name), c in m:
            cell = self.cell(name)
            boundary = bracket_2cell(ring, cell.source) - bracket_2cell(ring, cell.target)
            terms.append(c * ring.act(u, boundary))
        return total(terms)

    # ── Contracting homotopy ─────────────────────────────────────────────────
    def i0(self, n: int) -> Combination:
        return self.ring.unit(n)

    def i1(self, r: Combination) -> Combination:
        """u ↦ [û]"""
        return total(c * fox_bracket(self.ring, self.ring.nf(u)) for u, c in r)

    def i2(self, m: Combination) -> Combination:
        """u[x] ↦ [σ(ûx)]"""
        return total(
            c * bracket_2cell(self.ring, self.sigma(self.ring.nf(u) + self.p.word([x])))
            for (u, x), c in m
        )

    def i3(self, m: Combination) -> Combination:
        """u[α] ↦ [A] for a filler A: ûα ⋆₁ σ(ût(α)) ⇛ σ(ûs(α))"""
        if self.cp is None:
            raise PolygraphError('i3 needs the Squier completion of the presentation')
        terms = []
        for (u, name), c in m:
            u = self.ring.nf(u)
            rule = self.p.rule(name)
            step = RewriteStep(u, rule, Word.identity())
            f = ZigZag(step.source, (step,)).then(self.sigma(u + rule.rhs))
            g = self.sigma(u + rule.lhs)
            terms.append(c * bracket_3cell(self.ring, fill_positive(self.cp, f, g)))
        return total(terms)
