#!/usr/bin/env python
#
# File: manage.py
"""
Entry point for the toric automorphism tools, e.g.

    python manage.py toric report P2 --format json
    python manage.py test

"""
import os
import sys


def main():
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "core.settings")
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Django is required to run the toric commands; install the "
            "packages listed in requirements.txt."
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == "__main__":
    main()
