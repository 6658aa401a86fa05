# File: toric/roots.py
"""
Roots of a complete fan, their classification, the ray equivalence classes and
the partial order on those classes.

A root of ray i is a lattice vector alpha with v_i(alpha) = -1 and
v_j(alpha) >= 0 for every other ray. Rays are indexed by input position
throughout.

"""
import logging
from dataclasses import dataclass, field, replace
from typing import Dict, FrozenSet, Optional, Tuple

from toric.exceptions import InternalInconsistency, NotARoot, OrderViolation
from toric.intlin import RationalPolytopeSpec, polytope_lattice_points
from toric.utils import add, negate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Root:
    alpha: Tuple[int, ...]
    ray: int
    semisimple: bool = False
    partner: Optional[int] = None

    def as_dict(self):
        return {
            "alpha": list(self.alpha),
            "ray": self.ray,
            "semisimple": self.semisimple,
            "partner": self.partner,
        }


@dataclass(frozen=True)
class RayClasses:
    classes: Tuple[Tuple[int, ...], ...]
    ss_root: Dict[Tuple[int, int], Root] = field(compare=False)

    def class_of(self, ray):
        return next(k for k, members in enumerate(self.classes) if ray in members)

    @property
    def sizes(self):
        return tuple(len(members) for members in self.classes)


@dataclass(frozen=True)
class OrderedClasses:
    """
    ``order`` holds pairs (a, b) of class indices with class a < class b.

    """

    order: FrozenSet[Tuple[int, int]]
    depth: Tuple[int, ...]
    layers: Tuple[Tuple[int, ...], ...]
    classes: Tuple[Tuple[int, ...], ...] = ()

    def class_of(self, ray):
        return next(k for k, members in enumerate(self.classes) if ray in members)


@dataclass(frozen=True)
class Derivation:
    """ A basis vector of the Lie algebra of Aut0: D_{w_k} or x^alpha D_{v_i}. """

    kind: str
    index: int
    alpha: Optional[Tuple[int, ...]] = None

    @property
    def label(self):
        if self.kind == "torus":
            return "D_w%d" % self.index
        return "x^%s D_v%d" % (list(self.alpha), self.index)


def root_constraints(vfan, i):
    """ The polyhedron v_i(alpha) = -1, v_j(alpha) >= 0 for j != i. """
    return RationalPolytopeSpec(
        vfan.rank,
        equalities=((vfan.rays[i], -1),),
        inequalities=tuple(
            (ray, 0) for j, ray in enumerate(vfan.rays) if j != i
        ),
    )


def is_root(vfan, alpha, i):
    values = vfan.evaluate(alpha)
    return values[i] == -1 and all(v >= 0 for j, v in enumerate(values) if j != i)


def enumerate_roots(vfan):
    roots = []
    for i in range(vfan.ray_count):
        points = polytope_lattice_points(root_constraints(vfan, i))
        logger.debug("Ray %d has %d roots", i, len(points))
        roots.extend(Root(alpha=alpha, ray=i) for alpha in points)
    return roots


def classify_roots(roots, vfan=None):
    """
    Mark a root semisimple when its negative is also a root.

    The partner of a semisimple root of ray i is the ray of its negative.
    When ``vfan`` is given, the (-1, +1, 0, ..., 0) value signature of every
    semisimple root is checked.

    """
    owner = {root.alpha: root.ray for root in roots}
    classified = []
    for root in roots:
        partner = owner.get(negate(root.alpha))
        if partner is None:
            classified.append(replace(root, semisimple=False, partner=None))
            continue

        if vfan is not None:
            expected = [0] * vfan.ray_count
            expected[root.ray] = -1
            expected[partner] = 1
            if list(vfan.evaluate(root.alpha)) != expected:
                raise InternalInconsistency(
                    "Semisimple root %r has ray values %r."
                    % (root.alpha, vfan.evaluate(root.alpha)),
                    alpha=list(root.alpha),
                    ray=root.ray,
                )
        classified.append(replace(root, semisimple=True, partner=partner))
    return classified


def cox_root(vfan, root):
    """ v(alpha) in Z^r: one entry -1, the rest nonnegative. """
    if not is_root(vfan, root.alpha, root.ray):
        raise NotARoot("%r is not a root of ray %d." % (root.alpha, root.ray))
    return vfan.evaluate(root.alpha)


def root_counts(vfan, roots):
    """ Per ray, the number of semisimple and non-semisimple roots. """
    counts = [[0, 0] for _ in range(vfan.ray_count)]
    for root in roots:
        counts[root.ray][0 if root.semisimple else 1] += 1
    return [tuple(c) for c in counts]


def tangent_basis(vfan, roots):
    basis = [Derivation("torus", k) for k in range(vfan.rank)]
    basis += [Derivation("root", root.ray, root.alpha) for root in roots]
    return basis


def _find(parent, i):
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


def ray_classes(vfan, roots, classgroup=None):
    """
    Partition the rays: i and j are equivalent when a semisimple root of ray i
    has value 1 on ray j.

    With ``classgroup`` the partition is cross-checked against equality of
    the divisor classes [H_i].

    """
    ss_root = {}
    for root in roots:
        if not root.semisimple:
            continue
        key = (root.ray, root.partner)
        if key in ss_root:
            raise InternalInconsistency(
                "Rays %d and %d have two semisimple roots." % key,
                pair=list(key),
            )
        ss_root[key] = root

    r = vfan.ray_count
    parent = list(range(r))
    for i, j in ss_root:
        parent[_find(parent, i)] = _find(parent, j)

    groups = {}
    for i in range(r):
        groups.setdefault(_find(parent, i), []).append(i)
    classes = tuple(sorted(tuple(members) for members in groups.values()))

    for members in classes:
        for i in members:
            for j in members:
                if i != j and (i, j) not in ss_root:
                    raise InternalInconsistency(
                        "Rays %d and %d are equivalent without a direct "
                        "semisimple root." % (i, j),
                        pair=[i, j],
                    )

    if classgroup is not None:
        from toric.classgroup import ray_classes_in_group

        degrees = ray_classes_in_group(classgroup)
        for i in range(r):
            for j in range(i + 1, r):
                same_class = any(i in m and j in m for m in classes)
                if same_class != (degrees[i] == degrees[j]):
                    raise InternalInconsistency(
                        "Ray equivalence of %d and %d disagrees with their "
                        "divisor classes." % (i, j),
                        pair=[i, j],
                    )

    logger.debug("Found %d ray classes: %r", len(classes), classes)
    return RayClasses(classes=classes, ss_root=ss_root)


def class_order(vfan, roots, classes):
    """
    Order the classes: F < F' when a non-semisimple root of a ray in F is
    positive on some ray of F'.

    The relation is verified to be a strict partial order that does not
    depend on the chosen ray of F. Depth is the length of the longest chain
    strictly below a class, so minimal classes have depth 0.

    """
    class_of = {i: k for k, members in enumerate(classes.classes) for i in members}

    reaches = {}
    for root in roots:
        if root.semisimple:
            continue
        targets = reaches.setdefault(root.ray, set())
        for j, value in enumerate(vfan.evaluate(root.alpha)):
            if value > 0:
                targets.add(class_of[j])

    order = {(class_of[i], b) for i, targets in reaches.items() for b in targets}

    for a, b in order:
        if a == b:
            raise OrderViolation(
                "Class %d is below itself." % a, classes=[a]
            )
        for i in classes.classes[a]:
            if b not in reaches.get(i, ()):
                raise OrderViolation(
                    "Ray %d does not reach class %d although its class does."
                    % (i, b),
                    ray=i,
                    classes=[a, b],
                )
        if (b, a) in order:
            raise OrderViolation(
                "Classes %d and %d are below each other." % (a, b), classes=[a, b]
            )
    for a, b in order:
        for c, d in order:
            if b == c and (a, d) not in order:
                raise OrderViolation(
                    "Order is not transitive at classes %d < %d < %d." % (a, b, d),
                    classes=[a, b, d],
                )

    depth = {}

    def depth_of(b):
        if b not in depth:
            lower = [a for a, c in order if c == b]
            depth[b] = max((depth_of(a) + 1 for a in lower), default=0)
        return depth[b]

    depths = tuple(depth_of(b) for b in range(len(classes.classes)))
    layers = tuple(
        tuple(k for k, d in enumerate(depths) if d == level)
        for level in range(max(depths, default=-1) + 1)
    )
    return OrderedClasses(
        order=frozenset(order),
        depth=depths,
        layers=layers,
        classes=classes.classes,
    )


def closure_violations(vfan, roots):
    """
    Check closure of the root set under adding roots of other rays.

    For roots r_i, r_j of distinct rays with r_i + r_j != 0 and
    v_j(r_i) > 0, v_i(r_j) must vanish and r_i + s*r_j must be a root of
    ray i for 0 <= s <= v_j(r_i), non-semisimple for s >= 1 when r_i is.
    Returns a list of descriptions of every failure.

    """
    table = {root.alpha: root for root in roots}
    violations = []
    for ri in roots:
        for rj in roots:
            if ri.ray == rj.ray or not any(add(ri.alpha, rj.alpha)):
                continue
            reach = vfan.value(rj.ray, ri.alpha)
            if reach <= 0:
                continue
            if vfan.value(ri.ray, rj.alpha) != 0:
                violations.append(("not_orthogonal", ri.alpha, rj.alpha))
            for s in range(reach + 1):
                beta = add(ri.alpha, rj.alpha, scale=s)
                found = table.get(beta)
                if found is None or found.ray != ri.ray:
                    violations.append(("missing", ri.alpha, rj.alpha, s))
                elif s >= 1 and not ri.semisimple and found.semisimple:
                    violations.append(("semisimple", ri.alpha, rj.alpha, s))
    return violations
