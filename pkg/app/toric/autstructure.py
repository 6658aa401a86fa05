# File: toric/autstructure.py
"""
Structure of the connected automorphism group Aut0 of a complete toric
variety, assembled from the roots and ray classes of its fan.

Aut0 splits as R_u x| (GL_F1 x ... x GL_Fk) / T_N: the reductive part has one
general linear factor per ray class, the unipotent radical R_u is spanned by
the non-semisimple roots and filtered by the depth of their classes.

"""
import logging
from dataclasses import dataclass, field
from math import comb
from typing import Optional, Tuple

from toric.classgroup import class_group
from toric.exceptions import (
    AccountingMismatch,
    DecompositionMismatch,
    InternalInconsistency,
)
from toric.intlin import matrix_rank, quotient_invariants
from toric.roots import (
    class_order,
    classify_roots,
    enumerate_roots,
    ray_classes,
    root_counts,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReductiveDescription:
    gl_factors: Tuple[int, ...]
    torus_free_rank: int
    torus_torsion: Tuple[int, ...]
    dimension: int


@dataclass(frozen=True)
class UnipotentLayer:
    index: int
    classes: Tuple[int, ...]
    dimension: int


@dataclass(frozen=True)
class UnipotentDescription:
    """
    ``chain`` holds the dimensions of L_0 < L_1 < ..., where L_i is generated
    by the layers up to i; every L_i is normal in Aut0.

    """

    layers: Tuple[UnipotentLayer, ...]
    total_dimension: int
    chain: Tuple[int, ...]
    ray_dimensions: Tuple[int, ...]
    class_dimensions: Tuple[int, ...]


@dataclass(frozen=True)
class RepDecomposition:
    acting_class: int
    action: str
    summands: Tuple[Tuple[int, int], ...]
    target_ray: Optional[int] = None
    target_class: Optional[int] = None

    def dimension(self, size):
        """ Dimension of the module when GL_F has rank ``size``. """
        return sum(m * comb(d + size - 1, size - 1) for d, m in self.summands)


@dataclass(frozen=True)
class RadicalDescription:
    semisimple_span_rank: int
    quotient_rank: int
    quotient_torsion: Tuple[int, ...]
    cox_torus_rank: int


@dataclass(frozen=True)
class Aut0Report:
    total_dimension: int
    lie_dimension: int
    semisimple_count: int
    reductive: ReductiveDescription
    unipotent: UnipotentDescription
    representations: Tuple[RepDecomposition, ...]
    radical: RadicalDescription
    formula: str
    roots: tuple = field(default=(), compare=False)
    classes: object = field(default=None, compare=False)
    ordered: object = field(default=None, compare=False)
    classgroup: object = field(default=None, compare=False)


def reductive_part(classes, classgroup):
    sizes = classes.sizes
    if sum(sizes) != classgroup.ray_count:
        raise InternalInconsistency(
            "Ray classes cover %d of %d rays." % (sum(sizes), classgroup.ray_count)
        )
    return ReductiveDescription(
        gl_factors=sizes,
        torus_free_rank=classgroup.free_rank,
        torus_torsion=tuple(classgroup.torsion),
        dimension=sum(l * l for l in sizes) - classgroup.free_rank,
    )


def unipotent_structure(ordered, roots):
    """
    Layer the non-semisimple roots by the depth of their ray's class.

    Layers without roots are omitted; layer indices keep the depth.

    """
    class_of = {i: k for k, members in enumerate(ordered.classes) for i in members}
    ray_dimensions = {i: 0 for i in class_of}
    for root in roots:
        if not root.semisimple:
            ray_dimensions[root.ray] += 1

    class_dimensions = tuple(
        sum(ray_dimensions[i] for i in members) for members in ordered.classes
    )

    layers = []
    for index, members in enumerate(ordered.layers):
        dimension = sum(
            1
            for root in roots
            if not root.semisimple and class_of.get(root.ray) in members
        )
        if dimension:
            layers.append(
                UnipotentLayer(index=index, classes=members, dimension=dimension)
            )

    chain = []
    for layer in layers:
        chain.append((chain[-1] if chain else 0) + layer.dimension)

    return UnipotentDescription(
        layers=tuple(layers),
        total_dimension=sum(1 for root in roots if not root.semisimple),
        chain=tuple(chain),
        ray_dimensions=tuple(ray_dimensions[i] for i in sorted(ray_dimensions)),
        class_dimensions=class_dimensions,
    )


def _per_ray_count(members, counts):
    values = {counts[i] for i in members}
    if len(values) != 1:
        raise InternalInconsistency(
            "Rays of class %r carry different numbers of non-semisimple roots."
            % (list(members),),
            rays=list(members),
        )
    return values.pop()


def rep_decomposition(classes, ordered, roots, vfan):
    """
    Decompose the root spaces V_k under every factor GL_F.

    GL_F acts on V_F as copies of the dual standard representation, on V_k
    for a class of k below F as a sum of symmetric powers S^n E_F, and
    trivially otherwise. Symmetric-power summands are found by grouping the
    non-semisimple roots of v_k by their values on the rays outside F.

    """
    class_of = {i: k for k, members in enumerate(classes.classes) for i in members}
    non_semisimple = {}
    for root in roots:
        if not root.semisimple:
            non_semisimple.setdefault(root.ray, []).append(root)
    counts = {i: len(non_semisimple.get(i, ())) for i in class_of}

    decompositions = []
    for acting, members in enumerate(classes.classes):
        size = len(members)
        h = _per_ray_count(members, counts)
        if h:
            decompositions.append(
                RepDecomposition(
                    acting_class=acting,
                    action="dual",
                    summands=((1, h),),
                    target_class=acting,
                )
            )

        for k in sorted(non_semisimple):
            if k in members:
                continue
            bundle = non_semisimple[k]
            if (class_of[k], acting) not in ordered.order:
                decompositions.append(
                    RepDecomposition(
                        acting_class=acting,
                        action="trivial",
                        summands=((0, len(bundle)),),
                        target_ray=k,
                    )
                )
                continue

            groups = {}
            for root in bundle:
                values = vfan.evaluate(root.alpha)
                key = tuple(v for j, v in enumerate(values) if j not in members)
                groups.setdefault(key, []).append(
                    sum(values[i] for i in members)
                )

            multiplicities = {}
            for key, degrees in groups.items():
                degree = degrees[0]
                expected = comb(degree + size - 1, size - 1)
                if any(d != degree for d in degrees) or len(degrees) != expected:
                    raise DecompositionMismatch(
                        "Roots of ray %d with outside values %r do not form "
                        "S^%d of a rank %d module." % (k, list(key), degree, size),
                        ray=k,
                        acting_class=acting,
                        group=list(key),
                        size=len(degrees),
                        expected=expected,
                    )
                multiplicities[degree] = multiplicities.get(degree, 0) + 1

            decompositions.append(
                RepDecomposition(
                    acting_class=acting,
                    action="symmetric",
                    summands=tuple(sorted(multiplicities.items())),
                    target_ray=k,
                )
            )

    return tuple(decompositions)


def radical(vfan, roots, classes, classgroup):
    """
    The radical of Aut0: R_u x| T_Mbar, where Mbar is M modulo the span of
    the semisimple roots.

    """
    span = [root.alpha for root in roots if root.semisimple]
    span_rank = matrix_rank(span)
    quotient_rank, quotient_torsion = quotient_invariants(span, vfan.rank)

    if span_rank + quotient_rank != vfan.rank:
        raise AccountingMismatch(
            "Semisimple span rank %d and quotient rank %d do not add up to %d."
            % (span_rank, quotient_rank, vfan.rank)
        )

    k = len(classes.classes)
    if not classgroup.torsion and quotient_rank != k - classgroup.free_rank:
        raise AccountingMismatch(
            "Radical torus has rank %d, expected %d."
            % (quotient_rank, k - classgroup.free_rank)
        )

    return RadicalDescription(
        semisimple_span_rank=span_rank,
        quotient_rank=quotient_rank,
        quotient_torsion=tuple(quotient_torsion),
        cox_torus_rank=k,
    )


def formula(reductive, unipotent):
    factors = " × ".join("GL_%d" % l for l in reductive.gl_factors)
    if len(reductive.gl_factors) > 1:
        factors = "(%s)" % factors
    text = "%s/T_N" % factors
    if unipotent.total_dimension:
        text = "R_u ⋊ %s" % text
    return "Aut0 = %s" % text


def aut0_report(vfan):
    roots = classify_roots(enumerate_roots(vfan), vfan)
    classgroup = class_group(vfan)
    classes = ray_classes(vfan, roots, classgroup)
    ordered = class_order(vfan, roots, classes)

    reductive = reductive_part(classes, classgroup)
    unipotent = unipotent_structure(ordered, roots)
    representations = rep_decomposition(classes, ordered, roots, vfan)

    lie_dimension = vfan.rank + len(roots)
    structural = reductive.dimension + unipotent.total_dimension
    if lie_dimension != structural:
        raise AccountingMismatch(
            "n + #roots = %d but reductive + unipotent = %d."
            % (lie_dimension, structural),
            lie_dimension=lie_dimension,
            structural_dimension=structural,
        )

    semisimple_count = sum(1 for root in roots if root.semisimple)
    expected = sum(l * (l - 1) for l in classes.sizes)
    if semisimple_count != expected:
        raise AccountingMismatch(
            "Found %d semisimple roots, class sizes predict %d."
            % (semisimple_count, expected)
        )

    counts = root_counts(vfan, roots)
    for members in classes.classes:
        if len({counts[i] for i in members}) != 1:
            raise AccountingMismatch(
                "Rays of class %r have different root counts." % (list(members),)
            )

    logger.debug(
        "Aut0 of %r: dimension %d, %d semisimple roots, %d unipotent layers",
        vfan.name,
        lie_dimension,
        semisimple_count,
        len(unipotent.layers),
    )

    return Aut0Report(
        total_dimension=structural,
        lie_dimension=lie_dimension,
        semisimple_count=semisimple_count,
        reductive=reductive,
        unipotent=unipotent,
        representations=representations,
        radical=radical(vfan, roots, classes, classgroup),
        formula=formula(reductive, unipotent),
        roots=tuple(roots),
        classes=classes,
        ordered=ordered,
        classgroup=classgroup,
    )
