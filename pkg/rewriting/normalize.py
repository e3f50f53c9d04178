import enum
import logging

from django.conf import settings

from presentations.cells import Polygraph, Word
from .exceptions import FuelExhausted
from .paths import ZigZag
from .redexes import leftmost_redex, rightmost_redex

logger = logging.getLogger(__name__)


class Strategy(enum.Enum):
    LEFTMOST = 'leftmost'
    RIGHTMOST = 'rightmost'


def default_fuel() -> int:
    return getattr(settings, 'REWRITE_FUEL', 1_000_000)


def normalize(p: Polygraph, word: Word, strategy: Strategy = Strategy.LEFTMOST,
              fuel: int | None = None, pump_bound: int | None = None) -> tuple[Word, ZigZag]:
    """
    Rewrite ``word`` until no redex is left, always reducing the leftmost
    (or rightmost) redex. Returns the normal form and the path to it.
    """
    if fuel is None:
        fuel = default_fuel()
    pick = leftmost_redex if strategy is Strategy.LEFTMOST else rightmost_redex
    steps = []
    current = word
    while True:
        redex = pick(p, current, pump_bound)
        if redex is None:
            return current, ZigZag(word, tuple(steps))
        if len(steps) >= fuel:
            logger.warning(f'Fuel exhausted after {fuel} steps normalizing "{word}"')
            raise FuelExhausted(
                f'no normal form for "{word}" within {fuel} steps',
                partial=ZigZag(word, tuple(steps)),
            )
        step = redex.step(current)
        steps.append(step)
        current = step.target


def normal_form(p: Polygraph, word: Word, fuel: int | None = None,
                pump_bound: int | None = None) -> Word:
    return normalize(p, word, Strategy.LEFTMOST, fuel, pump_bound)[0]
