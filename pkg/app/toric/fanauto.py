# File: toric/fanauto.py
"""
Lattice automorphisms of M preserving the fan, and the component group of
the automorphism group of the toric variety.

A matrix A acts on M (column vectors); rays are row vectors, so A permutes
the rays when v_i * A = v_p(i) for a permutation p.

"""
import itertools
import logging
from dataclasses import dataclass
from math import factorial, prod
from typing import Tuple

from sympy import Matrix

from toric.exceptions import InternalInconsistency, NotInAutDelta, SearchTooLarge
from toric.intlin import int_matrix, matrix_rank
from toric.utils import dot, max_search_rays

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LatticeAut:
    entries: Tuple[Tuple[int, ...], ...]
    det: int
    ray_permutation: Tuple[int, ...]

    @property
    def matrix(self):
        return int_matrix(self.entries)

    @property
    def sort_key(self):
        return tuple(itertools.chain.from_iterable(self.entries))

    @property
    def is_identity(self):
        return all(p == i for i, p in enumerate(self.ray_permutation))

    def as_dict(self):
        return {
            "matrix": [list(row) for row in self.entries],
            "det": self.det,
            "ray_permutation": list(self.ray_permutation),
        }


@dataclass(frozen=True)
class ComponentGroupReport:
    aut_delta: Tuple[LatticeAut, ...]
    weyl_image: Tuple[LatticeAut, ...]
    cosets: Tuple[LatticeAut, ...]
    order: int
    class_sizes: Tuple[int, ...]


def _entries(matrix):
    rows, cols = matrix.shape
    return tuple(tuple(int(matrix[i, j]) for j in range(cols)) for i in range(rows))


def _row_times(row, entries):
    return tuple(dot(row, column) for column in zip(*entries))


def _lattice_aut(vfan, entries):
    """ The LatticeAut for integer ``entries``, or None if the fan is not kept. """
    index = {ray: i for i, ray in enumerate(vfan.rays)}
    permutation = []
    for ray in vfan.rays:
        target = index.get(_row_times(ray, entries))
        if target is None:
            return None
        permutation.append(target)

    cones = set(vfan.max_cones)
    if any(frozenset(permutation[i] for i in cone) not in cones for cone in cones):
        return None

    det = int(int_matrix(entries).det())
    if det not in (1, -1):
        return None
    return LatticeAut(entries=entries, det=det, ray_permutation=tuple(permutation))


def is_fan_automorphism(vfan, matrix):
    """
    Return the LatticeAut for ``matrix`` if it is unimodular, permutes the
    rays and maps maximal cones to maximal cones; otherwise None.

    """
    matrix = Matrix(matrix)
    if any(not entry.is_integer for entry in matrix):
        return None
    return _lattice_aut(vfan, _entries(matrix))


def compose(vfan, first, second):
    """ The automorphism first * second (apply second, then first, on M). """
    columns = list(zip(*second.entries))
    entries = tuple(
        tuple(dot(row, column) for column in columns) for row in first.entries
    )
    permutation = tuple(second.ray_permutation[p] for p in first.ray_permutation)
    return LatticeAut(
        entries=entries, det=first.det * second.det, ray_permutation=permutation
    )


def inverse(vfan, element):
    permutation = [0] * vfan.ray_count
    for i, p in enumerate(element.ray_permutation):
        permutation[p] = i
    return LatticeAut(
        entries=_entries(element.matrix.inv()),
        det=element.det,
        ray_permutation=tuple(permutation),
    )


def _anchors(vfan):
    chosen = []
    for i, ray in enumerate(vfan.rays):
        if matrix_rank([vfan.rays[j] for j in chosen] + [ray]) == len(chosen) + 1:
            chosen.append(i)
        if len(chosen) == vfan.rank:
            break
    return chosen


def lattice_automorphisms(vfan):
    """
    Find Aut_Delta M by sending a basis of anchor rays to every ordered
    choice of rays and solving for the matrix.

    Raises SearchTooLarge above the configured ray count.

    """
    if vfan.ray_count > max_search_rays():
        raise SearchTooLarge(
            "Fan has %d rays; the search is limited to %d."
            % (vfan.ray_count, max_search_rays())
        )

    # A = B^-1 T = adj(B) T / det(B) for the anchor rows B and target rows T.
    basis = int_matrix([vfan.rays[i] for i in _anchors(vfan)])
    scale = int(basis.det())
    adjugate = _entries(basis.adjugate())

    found = {}
    tried = 0
    for targets in itertools.permutations(range(vfan.ray_count), vfan.rank):
        tried += 1
        columns = list(zip(*(vfan.rays[j] for j in targets)))
        numerators = [[dot(row, column) for column in columns] for row in adjugate]
        if any(value % scale for row in numerators for value in row):
            continue
        entries = tuple(tuple(value // scale for value in row) for row in numerators)
        element = _lattice_aut(vfan, entries)
        if element is not None:
            found[element.entries] = element

    group = sorted(found.values(), key=lambda g: g.sort_key)
    logger.debug("Tried %d anchor assignments, kept %d", tried, len(group))

    _check_group(vfan, group)
    return group


def _check_group(vfan, group):
    members = {g.entries for g in group}
    if not any(g.is_identity for g in group):
        raise InternalInconsistency("Fan automorphisms lack the identity.")
    for g in group:
        if inverse(vfan, g).entries not in members:
            raise InternalInconsistency(
                "Fan automorphism has no inverse in the group.",
                matrix=[list(row) for row in g.entries],
            )
        for h in group:
            if compose(vfan, g, h).entries not in members:
                raise InternalInconsistency(
                    "Fan automorphisms are not closed under composition.",
                    matrix=[list(row) for row in g.entries],
                )


def weyl_embedding(vfan, classes, permutation):
    """
    Realize a permutation p of the rays within their classes as the lattice
    map a -> a + sum_i v_i(a) b_i, where b_i is the semisimple root of the
    pair (v_i, v_p(i)) and b_i = 0 when p fixes i.

    The resulting automorphism permutes the rays by the inverse of p.

    """
    permutation = tuple(permutation)
    class_of = {i: k for k, members in enumerate(classes.classes) for i in members}
    if any(class_of[i] != class_of[p] for i, p in enumerate(permutation)):
        raise ValueError("Permutation %r mixes ray classes." % (permutation,))

    n = vfan.rank
    entries = [[int(r == c) for c in range(n)] for r in range(n)]
    for i, p in enumerate(permutation):
        if p == i:
            continue
        beta = classes.ss_root[(i, p)].alpha
        ray = vfan.rays[i]
        for r in range(n):
            for c in range(n):
                entries[r][c] += beta[r] * ray[c]

    element = _lattice_aut(vfan, tuple(tuple(row) for row in entries))
    if element is None:
        raise NotInAutDelta(
            "Weyl image of %r does not preserve the fan." % (permutation,),
            permutation=list(permutation),
        )
    return element


def class_permutations(classes, ray_count):
    """ Every permutation of the rays that fixes each class setwise. """
    per_class = [
        [dict(zip(members, image)) for image in itertools.permutations(members)]
        for members in classes.classes
    ]
    for choice in itertools.product(*per_class):
        mapping = {}
        for part in choice:
            mapping.update(part)
        yield tuple(mapping[i] for i in range(ray_count))


def class_compatibility(vfan, classes, auts):
    """ Check that every automorphism maps ray classes onto ray classes. """
    blocks = {frozenset(members) for members in classes.classes}
    for g in auts:
        for members in classes.classes:
            image = frozenset(g.ray_permutation[i] for i in members)
            if image not in blocks:
                raise InternalInconsistency(
                    "Automorphism maps class %r to %r, which is not a class."
                    % (list(members), sorted(image)),
                    matrix=[list(row) for row in g.entries],
                )
    return True


def component_group(vfan, classes, auts=None):
    """
    Aut_Delta M modulo the Weyl image of the within-class permutations.

    Normality of the Weyl image is verified by conjugation; cosets are
    represented by their smallest element.

    """
    if auts is None:
        auts = lattice_automorphisms(vfan)
    class_compatibility(vfan, classes, auts)

    members = {g.entries: g for g in auts}
    weyl = {}
    for permutation in class_permutations(classes, vfan.ray_count):
        element = weyl_embedding(vfan, classes, permutation)
        if element.entries not in members:
            raise NotInAutDelta(
                "Weyl image of %r is missing from the automorphism search."
                % (permutation,),
                permutation=list(permutation),
            )
        weyl[element.entries] = element

    expected = prod(factorial(len(m)) for m in classes.classes)
    if len(weyl) != expected:
        raise InternalInconsistency(
            "Weyl image has %d elements, expected %d." % (len(weyl), expected)
        )

    for g in auts:
        g_inverse = inverse(vfan, g)
        for w in weyl.values():
            conjugate = compose(vfan, compose(vfan, g, w), g_inverse)
            if conjugate.entries not in weyl:
                raise InternalInconsistency(
                    "Weyl image is not normal in the fan automorphism group.",
                    matrix=[list(row) for row in g.entries],
                )

    cosets = {}
    for g in auts:
        coset = frozenset(compose(vfan, g, w).entries for w in weyl.values())
        cosets.setdefault(coset, g)
    representatives = sorted(
        (min((members[e] for e in c), key=lambda g: g.sort_key) for c in cosets),
        key=lambda g: g.sort_key,
    )

    order = len(auts) // expected
    if order * expected != len(auts) or order != len(representatives):
        raise InternalInconsistency(
            "Component group order %d does not match %d cosets."
            % (order, len(representatives))
        )

    return ComponentGroupReport(
        aut_delta=tuple(auts),
        weyl_image=tuple(sorted(weyl.values(), key=lambda g: g.sort_key)),
        cosets=tuple(representatives),
        order=order,
        class_sizes=classes.sizes,
    )
