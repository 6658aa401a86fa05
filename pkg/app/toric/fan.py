# File: toric/fan.py
"""
Complete fans: the input data model and its validation.

Completeness is not proven directly. A fan is accepted when its rays are
primitive and distinct, positively span M*, every maximal cone is strongly
convex and full-dimensional, and every facet of a maximal cone is shared by
exactly two maximal cones (the wall condition).

"""
import itertools
import logging
import math
import random
from dataclasses import dataclass
from typing import FrozenSet, Tuple

from django.forms import ValidationError
from django.utils.translation import gettext_lazy as _

from toric.intlin import (
    RationalPolytopeSpec,
    int_matrix,
    is_feasible,
    kernel_basis,
    matrix_rank,
    primitive,
    recession_direction,
)
from toric.utils import dot

logger = logging.getLogger(__name__)

COMPLETENESS_NOTE = (
    "Completeness is checked by proxy: positive spanning, full-dimensional "
    "strongly convex maximal cones and the wall condition."
)


@dataclass(frozen=True)
class Fan:
    rank: int
    rays: Tuple[Tuple[int, ...], ...]
    max_cones: Tuple[FrozenSet[int], ...]
    name: str = ""

    @property
    def ray_count(self):
        return len(self.rays)


def make_fan(rank, rays, max_cones, name=""):
    """ Normalize plain lists into an (unvalidated) Fan. """
    return Fan(
        rank=int(rank),
        rays=tuple(tuple(int(a) for a in ray) for ray in rays),
        max_cones=tuple(frozenset(int(i) for i in cone) for cone in max_cones),
        name=name,
    )


@dataclass(frozen=True)
class ValidatedFan:
    fan: Fan
    facets: Tuple[Tuple[FrozenSet[int], Tuple[int, ...]], ...]

    @property
    def rank(self):
        return self.fan.rank

    @property
    def rays(self):
        return self.fan.rays

    @property
    def max_cones(self):
        return self.fan.max_cones

    @property
    def name(self):
        return self.fan.name

    @property
    def ray_count(self):
        return self.fan.ray_count

    @property
    def matrix(self):
        """ The r x n matrix of v: M -> Z^r, row i being ray i. """
        return int_matrix(self.rays, self.rank)

    def value(self, i, alpha):
        return dot(self.rays[i], alpha)

    def evaluate(self, alpha):
        """ v(alpha): the values of every ray on alpha. """
        return tuple(dot(ray, alpha) for ray in self.rays)


def evaluate(vfan, alpha):
    return vfan.evaluate(alpha)


def _check_structure(fan):
    if fan.rank < 1:
        raise ValidationError(
            _("Rank must be at least 1, got %(rank)s."),
            code="index_out_of_range",
            params={"rank": fan.rank},
        )

    for i, ray in enumerate(fan.rays):
        if len(ray) != fan.rank:
            raise ValidationError(
                _("Ray %(index)s has %(length)s coordinates, expected %(rank)s."),
                code="index_out_of_range",
                params={"index": i, "length": len(ray), "rank": fan.rank},
            )

    if not fan.max_cones:
        raise ValidationError(
            _("A fan needs at least one maximal cone."), code="index_out_of_range"
        )

    for cone in fan.max_cones:
        bad = sorted(i for i in cone if not 0 <= i < fan.ray_count)
        if bad:
            raise ValidationError(
                _("Cone %(cone)s refers to missing rays %(indices)s."),
                code="index_out_of_range",
                params={"cone": sorted(cone), "indices": bad},
            )


def _check_rays(fan):
    seen = {}
    for i, ray in enumerate(fan.rays):
        if not any(ray) or primitive(ray) != ray:
            raise ValidationError(
                _("Ray %(index)s %(ray)s is not a primitive nonzero vector."),
                code="non_primitive_ray",
                params={"index": i, "ray": list(ray)},
            )
        if ray in seen:
            raise ValidationError(
                _("Rays %(first)s and %(second)s are equal."),
                code="duplicate_ray",
                params={"first": seen[ray], "second": i},
            )
        seen[ray] = i


def _check_positive_spanning(fan):
    # The rays positively span M* iff no nonzero alpha has v_i(alpha) >= 0
    # for every ray.
    cone = RationalPolytopeSpec(
        fan.rank, inequalities=tuple((ray, 0) for ray in fan.rays)
    )
    direction = recession_direction(cone)
    if direction is not None:
        raise ValidationError(
            _("Rays do not positively span; %(alpha)s is nonnegative on all of them."),
            code="not_positively_spanning",
            params={"alpha": list(direction)},
        )


def _contains_line(generators, rank):
    """ True if some nonzero nonnegative combination of generators is zero. """
    count = len(generators)
    units = [tuple(int(k == j) for j in range(count)) for k in range(count)]
    spec = RationalPolytopeSpec(
        count,
        equalities=tuple(
            (tuple(g[coord] for g in generators), 0) for coord in range(rank)
        )
        + ((tuple(1 for _ in range(count)), 1),),
        inequalities=tuple((u, 0) for u in units),
    )
    return is_feasible(spec)


def _check_cones(fan):
    for cone in fan.max_cones:
        generators = [fan.rays[i] for i in sorted(cone)]
        if matrix_rank(generators) != fan.rank:
            raise ValidationError(
                _("Cone %(cone)s is not full-dimensional."),
                code="not_full_dimensional",
                params={"cone": sorted(cone)},
            )
        if _contains_line(generators, fan.rank):
            raise ValidationError(
                _("Cone %(cone)s contains a line."),
                code="not_strongly_convex",
                params={"cone": sorted(cone)},
            )


def cone_facets(fan, cone):
    """
    Facets of a full-dimensional cone, each given by the set of its rays.

    A facet is found from n - 1 independent rays of the cone whose normal
    hyperplane supports the whole cone.

    """
    members = sorted(cone)
    found = set()
    for subset in itertools.combinations(members, fan.rank - 1):
        generators = [fan.rays[i] for i in subset]
        if matrix_rank(generators) != fan.rank - 1:
            continue
        normal = kernel_basis(generators, fan.rank)[0]
        values = {i: dot(normal, fan.rays[i]) for i in members}
        if all(v >= 0 for v in values.values()) or all(
            v <= 0 for v in values.values()
        ):
            found.add(frozenset(i for i, v in values.items() if v == 0))
    return found


def facets(fan):
    """ Map every facet ray set to the maximal cones it bounds. """
    incidence = {}
    for index, cone in enumerate(fan.max_cones):
        for facet in cone_facets(fan, cone):
            incidence.setdefault(facet, []).append(index)
    return tuple(
        (facet, tuple(cones))
        for facet, cones in sorted(incidence.items(), key=lambda f: sorted(f[0]))
    )


def _check_walls(fan, facet_incidence):
    for facet, cones in facet_incidence:
        if len(cones) != 2:
            raise ValidationError(
                _("Facet %(facet)s lies in %(count)s maximal cones instead of 2."),
                code="wall_condition_failed",
                params={"facet": sorted(facet), "count": len(cones)},
            )


def validate(fan):
    """
    Check every fan invariant and return the validated fan.

    Raises ValidationError naming the first offending datum.

    """
    _check_structure(fan)
    _check_rays(fan)
    _check_positive_spanning(fan)
    _check_cones(fan)

    facet_incidence = facets(fan)
    _check_walls(fan, facet_incidence)

    logger.debug(
        "Validated fan %r: %d rays, %d maximal cones, %d facets",
        fan.name,
        fan.ray_count,
        len(fan.max_cones),
        len(facet_incidence),
    )
    return ValidatedFan(fan=fan, facets=facet_incidence)


# Builders


def projective_space(n):
    rays = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    rays.append(tuple(-1 for _ in range(n)))
    cones = itertools.combinations(range(n + 1), n)
    return validate(make_fan(n, rays, cones, name="P%d" % n))


def hirzebruch(a):
    rays = [(1, 0), (0, 1), (-1, a), (0, -1)]
    cones = [(0, 1), (1, 2), (2, 3), (3, 0)]
    return validate(make_fan(2, rays, cones, name="F%d" % a))


def weighted_plane(a):
    """ The plane with rays (1,0), (0,1), (-1,-a); ray degrees (1, a, 1). """
    rays = [(1, 0), (0, 1), (-1, -a)]
    cones = [(0, 1), (1, 2), (2, 0)]
    return validate(make_fan(2, rays, cones, name="weighted_1%d1" % a))


def explicit(rank, rays, max_cones, name=""):
    return validate(make_fan(rank, rays, max_cones, name=name))


def product(first, second):
    """ The product fan: rays of ``first`` then rays of ``second``. """
    n, m = first.rank, second.rank
    rays = [ray + (0,) * m for ray in first.rays]
    rays += [(0,) * n + ray for ray in second.rays]
    shift = first.ray_count
    cones = [
        set(sigma) | {shift + j for j in tau}
        for sigma in first.max_cones
        for tau in second.max_cones
    ]
    name = "%sx%s" % (first.name, second.name)
    return validate(make_fan(n + m, rays, cones, name=name))


# Random fans


def random_planar(rng, size=None, bound=3):
    """
    A complete fan in the plane: ``size`` primitive rays with coordinates in
    [-bound, bound], in angular order, each consecutive pair turning by less
    than pi.

    """
    size = size or rng.randint(3, 6)
    while True:
        rays = set()
        while len(rays) < size:
            vec = (rng.randint(-bound, bound), rng.randint(-bound, bound))
            if any(vec):
                rays.add(primitive(vec))
        rays = sorted(rays, key=lambda v: math.atan2(v[1], v[0]))
        turns = zip(rays, rays[1:] + rays[:1])
        if all(u[0] * w[1] - u[1] * w[0] > 0 for u, w in turns):
            cones = [(i, (i + 1) % size) for i in range(size)]
            return explicit(2, rays, cones, name="planar%d" % size)


def _random_surface(rng):
    kind = rng.randrange(4)
    if kind == 0:
        return random_planar(rng)
    if kind == 1:
        return hirzebruch(rng.randint(0, 3))
    if kind == 2:
        return weighted_plane(rng.randint(1, 3))
    return projective_space(2)


def random_fan(rng):
    """ A valid fan of rank at most 3: a surface, P^n, or a product with P1. """
    kind = rng.randrange(4)
    if kind == 0:
        return projective_space(rng.randint(1, 3))
    if kind == 1:
        return product(_random_surface(rng), projective_space(1))
    if kind == 2:
        return product(projective_space(1), _random_surface(rng))
    return _random_surface(rng)


def random_fans(seed, count):
    rng = random.Random(seed)
    return [random_fan(rng) for _ in range(count)]
