# Test wiring for pytest: configure Django the way manage.py does.
import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "core.settings")
django.setup()
