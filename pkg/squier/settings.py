"""
Django settings for the squier project.

The project has no web surface: Django provides configuration, logging,
app discovery and the ``manage.py squier`` command.
"""
import pathlib
import os
from decouple import config

BASE_DIR = pathlib.Path(__file__).resolve().parent.parent

SECRET_KEY = config('SECRET_KEY', default='django-insecure-squier-local-only')
DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'rest_framework',
    'presentations',
    'rewriting',
    'branchings',
    'completion',
    'coherence',
    'homology',
    'console',
]

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}

LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'COMPACT_JSON': True,
    'UNICODE_JSON': True,
}

# ─── Rewriting ───────────────────────────────────────────────────────────────
# Normalization steps before a run is declared non-terminating
REWRITE_FUEL = config('REWRITE_FUEL', default=1_000_000, cast=int)

# Pumped rule families are instantiated up to max(word length, PUMP_BOUND)
PUMP_BOUND = config('PUMP_BOUND', default=4, cast=int)

# Largest n sampled when checking an interpretation certificate
CERT_SAMPLE_BOUND = config('CERT_SAMPLE_BOUND', default=16, cast=int)

# ─── Completion ──────────────────────────────────────────────────────────────
COMPLETION_MAX_RULES = config('COMPLETION_MAX_RULES', default=256, cast=int)

# ─── Coherence / homology ────────────────────────────────────────────────────
FILL_FUEL = config('FILL_FUEL', default=1_000_000, cast=int)
HOMOLOGY_SAMPLES = config('HOMOLOGY_SAMPLES', default=50, cast=int)
MONOID_ENUMERATION_BOUND = config('MONOID_ENUMERATION_BOUND', default=1000, cast=int)
SAMPLE_SEED = config('SAMPLE_SEED', default=0, cast=int)

# ─── Logging ─────────────────────────────────────────────────────────────────
# Locally it writes to  <BASE_DIR>/logs/squier.log
LOG_DIR = config('LOG_DIR', default=os.path.join(BASE_DIR, 'logs'))
os.makedirs(LOG_DIR, exist_ok=True)

# One JSON line per command-line run
RUN_JOURNAL = config('RUN_JOURNAL', default=os.path.join(LOG_DIR, 'runs.log'))

LOG_LEVEL = config('LOG_LEVEL', default='WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} [{levelname}] {name} - {message}',
            'style': '{',
            'datefmt': '%Y-%m-%d %H:%M:%S',
        },
        'simple': {
            'format': '[{levelname}] {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
            'level': LOG_LEVEL,
        },
        'file': {
            'class': 'logging.handlers.RotatingFileHandler',
            'filename': os.path.join(LOG_DIR, 'squier.log'),
            'maxBytes': 10 * 1024 * 1024,  # 10 MB
            'backupCount': 5,
            'formatter': 'verbose',
            'encoding': 'utf-8',
        },
    },
    'root': {
        'handlers': ['console', 'file'],
        'level': 'INFO',
    },
    'loggers': {
        'django': {
            'handlers': ['console', 'file'],
            'level': 'WARNING',
            'propagate': False,
        },
    },
}
