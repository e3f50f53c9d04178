"""
Run journal: one JSON line per command-line invocation.
"""
import json
import os
from datetime import datetime, timezone as dt_tz

from django.conf import settings


def journal_path() -> str:
    return getattr(settings, 'RUN_JOURNAL', os.path.join('logs', 'runs.log'))


def _write_to_file(entry: dict):
    """Append a JSON-line entry to the run journal."""
    try:
        path = journal_path()
        os.makedirs(os.path.dirname(path) or '.', exist_ok=True)
        with open(path, 'a', encoding='utf-8') as f:
            f.write(json.dumps(entry, ensure_ascii=False) + '\n')
    except Exception:
        pass  # Never crash on logging failure


def log_run(argv: list[str], status: str, code: int, extra=None):
    entry = {
        'ts': datetime.now(dt_tz.utc).isoformat(),
        'argv': list(argv),
        'status': status,
        'exit_code': code,
    }
    if extra:
        entry['extra'] = extra
    _write_to_file(entry)
