# File: core/settings.py

"""
Django settings for the toric-aut project.

The project has no database, URL configuration or WSGI entry point: it is a
library app (``toric``) plus a command-line app (``reports``) driven through
``manage.py``.

For more information on this file, see
https://docs.djangoproject.com/en/3.1/topics/settings/
"""

import os

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


# Nothing here is signed or served; Django still requires a value.
SECRET_KEY = os.environ.get("TORIC_SECRET_KEY", "toric-aut-not-secret")

DEBUG = False

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    "toric",
    "reports",
]

DATABASES = {}


# Toric computations

# Half-width of the monomial box [-B, B]^n sampled by the symbolic suite.
TORIC_MONOMIAL_BOX = int(os.environ.get("TORIC_MONOMIAL_BOX", 2))

# The fan-automorphism search tries r!/(r-n)! anchor assignments.
TORIC_MAX_SEARCH_RAYS = int(os.environ.get("TORIC_MAX_SEARCH_RAYS", 12))

TORIC_JSON_INDENT = 2

TORIC_FAN_DIR = os.path.join(BASE_DIR, "reports", "fans")


# Logging
# https://docs.djangoproject.com/en/3.1/topics/logging/

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {"format": "{levelname} {name}: {message}", "style": "{",},
    },
    "handlers": {
        "console": {"class": "logging.StreamHandler", "formatter": "plain",},
    },
    "loggers": {
        "toric": {
            "handlers": ["console"],
            "level": os.environ.get("TORIC_LOG_LEVEL", "WARNING"),
        },
        "reports": {
            "handlers": ["console"],
            "level": os.environ.get("TORIC_LOG_LEVEL", "WARNING"),
        },
    },
}


# Internationalization
# https://docs.djangoproject.com/en/3.1/topics/i18n/

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = True

USE_TZ = True
