"""
Squier completion: one generating 3-cell per critical branching.
"""
from __future__ import annotations

import logging
import string
from dataclasses import dataclass, field
from typing import Sequence

from branchings.confluence import Confluent, critical_outcomes, decide_confluence
from branchings.critical import CriticalBranching, default_pump_bound
from presentations.cells import Polygraph, ThreeCell
from rewriting.exceptions import NotCertified
from rewriting.interpretations import InterpretationCert

logger = logging.getLogger(__name__)


def cell_name(i: int) -> str:
    """A, B, ..., Z, then A26, A27, ..."""
    return string.ascii_uppercase[i] if i < 26 else f'A{i}'


@dataclass
class CoherentPresentation:
    base: Polygraph
    branchings: list[CriticalBranching] = field(default_factory=list)
    cells: list[ThreeCell] = field(default_factory=list)
    pump_bound: int | None = None
    _index: dict[tuple, ThreeCell] = field(init=False, repr=False)

    def __post_init__(self):
        self.pump_bound = default_pump_bound(self.pump_bound)
        self._index = {b.key: cell for b, cell in zip(self.branchings, self.cells)}

    @property
    def polygraph(self) -> Polygraph:
        return self.base.with_three_cells(self.cells)

    def cell_for(self, key: tuple) -> ThreeCell | None:
        return self._index.get(key)

    def cell(self, name: str) -> ThreeCell:
        return self.polygraph.three_cell(name)


def squier_completion(p: Polygraph, pump_bound: int | None = None, fuel: int | None = None,
                      order: Sequence[str] | None = None,
                      certificate: InterpretationCert | None = None, accept_sampled: bool = False,
                      assume_convergent: bool = False) -> CoherentPresentation:
    """
    Adjoin to p one 3-cell step2 ⋆₁ g′ ⇛ step1 ⋆₁ f′ per critical branching,
    with f′ and g′ the leftmost normalization paths. Raises NotCertified when
    p is not certified convergent.
    """
    bound = default_pump_bound(pump_bound)
    base = p.without_three_cells()
    if assume_convergent:
        outcomes = critical_outcomes(base, fuel=fuel, pump_bound=bound)
    else:
        outcomes = decide_confluence(base, order=order, certificate=certificate,
                                     accept_sampled=accept_sampled, fuel=fuel,
                                     pump_bound=bound).outcomes
    failure = next((o for o in outcomes if not isinstance(o, Confluent)), None)
    if failure is not None:
        raise NotCertified(f'branching {failure.branching} is not resolved: {failure}',
                           witness=failure)

    resolutions = [o.resolution for o in outcomes]
    cp = CoherentPresentation(
        base,
        branchings=[r.branching for r in resolutions],
        cells=[ThreeCell(cell_name(i), r.right, r.left) for i, r in enumerate(resolutions)],
        pump_bound=bound,
    )
    logger.info(f'Squier completion: {len(cp.cells)} 3-cells')
    return cp
