"""
Django settings for skew_dyck project.

Exact enumeration of skew Dyck paths avoiding (or counting) up-down-red.
There is no database: every app is pure computation exposed through
management commands and a small read-only JSON API.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/6.0/ref/settings/
"""

from pathlib import Path
from decouple import config, Csv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config('SECRET_KEY', default='django-insecure-skew-dyck-local-only')

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = config('ALLOWED_HOSTS', default='localhost,127.0.0.1,testserver', cast=Csv())


# Application definition

INSTALLED_APPS = [
    # Third-party apps
    'rest_framework',

    # Local apps
    'paths',
    'automaton',
    'series',
    'kernel',
    'holonomic',
    'asymptotics',
    'cli',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.middleware.common.CommonMiddleware',
]

ROOT_URLCONF = 'skew_dyck.urls'

WSGI_APPLICATION = 'skew_dyck.wsgi.application'

# Pure computation, nothing is persisted
DATABASES = {}


# Internationalization
# https://docs.djangoproject.com/en/6.0/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# REST Framework settings (read-only, anonymous, JSON only)
REST_FRAMEWORK = {
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': [
        'rest_framework.permissions.AllowAny',
    ],
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'DEFAULT_PARSER_CLASSES': [
        'rest_framework.parsers.JSONParser',
    ],
    'UNAUTHENTICATED_USER': None,
}


# Logging - payloads go to stdout, log lines to stderr
LOG_LEVEL = config('LOG_LEVEL', default='INFO')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'simple',
        },
    },
    'loggers': {
        name: {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        }
        for name in ('skew_dyck', 'paths', 'automaton', 'series', 'kernel',
                     'holonomic', 'asymptotics', 'cli')
    },
}


# Enumeration settings
# Brute-force oracle refuses longer words (3^24 raw words without pruning)
SKEW_ORACLE_CAP = config('SKEW_ORACLE_CAP', default=24, cast=int)

# Default truncation order for series output
SKEW_DEFAULT_ORDER = config('SKEW_DEFAULT_ORDER', default=16, cast=int)

# 'newton' normally; 'undetermined' switches to the coefficient-by-coefficient solver
SKEW_SERIES_SOLVER = config('SKEW_SERIES_SOLVER', default='newton')

# Worker threads for `manage.py verify`
SKEW_VERIFY_JOBS = config('SKEW_VERIFY_JOBS', default=4, cast=int)

# SVG renderer
SKEW_SVG_UNIT_PX = config('SKEW_SVG_UNIT_PX', default=20, cast=int)
SKEW_SVG_RED_COLOR = config('SKEW_SVG_RED_COLOR', default='#d62728')
SKEW_SVG_BLACK_COLOR = config('SKEW_SVG_BLACK_COLOR', default='#000000')
