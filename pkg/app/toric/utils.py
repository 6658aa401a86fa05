# File: toric/utils.py
import itertools

from django.conf import settings

DEFAULT_MONOMIAL_BOX = 2
DEFAULT_MAX_SEARCH_RAYS = 12


def monomial_box():
    """ Half-width of the default monomial sample box. """
    return getattr(settings, "TORIC_MONOMIAL_BOX", DEFAULT_MONOMIAL_BOX)


def max_search_rays():
    return getattr(settings, "TORIC_MAX_SEARCH_RAYS", DEFAULT_MAX_SEARCH_RAYS)


def box_points(dimension, half_width):
    """
    Generate the integer points of [-half_width, half_width]^dimension in
    lexicographic order.

    """
    side = range(-half_width, half_width + 1)
    return [tuple(p) for p in itertools.product(side, repeat=dimension)]


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def add(u, v, scale=1):
    return tuple(a + scale * b for a, b in zip(u, v))


def negate(u):
    return tuple(-a for a in u)
