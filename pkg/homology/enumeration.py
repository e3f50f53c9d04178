from __future__ import annotations

import logging

import numpy as np
from django.conf import settings

from presentations.cells import Word
from .ring import MonoidRing

logger = logging.getLogger(__name__)


class EnumerationBoundExceeded(RuntimeError):
    """The monoid has more elements than the enumeration bound allows."""

    def __init__(self, message: str, partial: list[Word] | None = None):
        super().__init__(message)
        self.partial = partial or []


def deglex_key(order, u: Word) -> tuple:
    rank = {name: i for i, name in enumerate(order)}
    return len(u), tuple(rank.get(x, len(rank)) for x in u.letters)


def enumerate_monoid(ring: MonoidRing, bound: int | None = None) -> list[Word]:
    """
    All normal forms, found breadth-first by right multiplication with the
    generators and returned in deglex order.
    """
    if bound is None:
        bound = getattr(settings, 'MONOID_ENUMERATION_BOUND', 1000)
    p = ring.p
    seen = {ring.one}
    frontier = [ring.one]
    while frontier:
        following = []
        for u in frontier:
            for name in p.effective_order:
                v = ring.nf(u + p.word([name]))
                if v not in seen:
                    if len(seen) >= bound:
                        raise EnumerationBoundExceeded(
                            f'monoid has more than {bound} elements',
                            partial=sorted(seen, key=lambda w: deglex_key(p.effective_order, w)),
                        )
                    seen.add(v)
                    following.append(v)
        frontier = following
    return sorted(seen, key=lambda w: deglex_key(p.effective_order, w))


def random_normal_forms(ring: MonoidRing, count: int, seed: int | None = None,
                        max_length: int = 8) -> list[Word]:
    """``count`` draws of normal forms of random words; duplicates are dropped."""
    if seed is None:
        seed = getattr(settings, 'SAMPLE_SEED', 0)
    rng = np.random.default_rng(seed)
    names = ring.p.generator_names
    found: dict[Word, None] = {ring.one: None}
    for _ in range(count):
        length = int(rng.integers(0, max_length + 1))
        letters = [names[int(i)] for i in rng.integers(0, len(names), size=length)] if names else []
        found.setdefault(ring.nf(ring.p.word(letters)), None)
    return list(found)[:max(count, 1)]


def sample_elements(ring: MonoidRing, bound: int | None = None, samples: int | None = None,
                    seed: int | None = None) -> tuple[list[Word], bool]:
    """Every element when the monoid enumerates within ``bound``, else a random sample."""
    if samples is None:
        samples = getattr(settings, 'HOMOLOGY_SAMPLES', 50)
    try:
        return enumerate_monoid(ring, bound), True
    except EnumerationBoundExceeded:
        logger.info(f'Monoid too large to enumerate; sampling {samples} normal forms')
        return random_normal_forms(ring, samples, seed), False
