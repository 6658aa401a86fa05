# File: toric/apps.py
from django.apps import AppConfig


class ToricConfig(AppConfig):
    name = "toric"
    verbose_name = "Automorphisms of complete toric varieties"
