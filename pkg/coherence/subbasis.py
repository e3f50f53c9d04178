from __future__ import annotations

import logging
from typing import Iterable

from presentations.cells import ThreeCell
from rewriting.paths import ZigZag
from .expressions import cells_of
from .filling import fill_sphere
from .squier import CoherentPresentation

logger = logging.getLogger(__name__)


def extract_finite_subbasis(cp: CoherentPresentation, deltas: Iterable[tuple[ZigZag, ZigZag]],
                            fuel: int | None = None) -> list[ThreeCell]:
    """
    The generating 3-cells used by the fillers of the given 2-spheres, in
    declaration order. No minimality is claimed.
    """
    used: set[str] = set()
    for f, g in deltas:
        used |= cells_of(fill_sphere(cp, f, g, fuel))
    subset = [cell for cell in cp.cells if cell.name in used]
    logger.info(f'Subbasis: {", ".join(c.name for c in subset) or "empty"}')
    return subset
