"""
Sample presentations shipped with the package, addressed by file name.
"""
from pathlib import Path

from .cells import Polygraph
from .parser import parse_polygraph

FIXTURE_DIR = Path(__file__).resolve().parent / 'fixtures'


def fixture_path(name: str) -> Path:
    path = FIXTURE_DIR / name
    if not path.suffix:
        path = path.with_suffix('.pg')
    if not path.is_file():
        raise FileNotFoundError(f'no fixture named "{name}" in {FIXTURE_DIR}')
    return path


def fixture_text(name: str) -> str:
    return fixture_path(name).read_text(encoding='utf-8')


def load_fixture(name: str) -> Polygraph:
    """``load_fixture('b3plus')`` parses ``fixtures/b3plus.pg``."""
    return parse_polygraph(fixture_text(name))
