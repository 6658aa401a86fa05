# File: toric/classgroup.py
"""
The divisor class group N = Z^r / v(M) and the degree slices of the Cox ring.

Classes are written in invariant-factor coordinates read off the Smith normal
form U * v * V = D of the ray matrix: the projection is x -> U x, the last
r - n coordinates are free and the leading ones with d_k > 1 are torsion
residues in [0, d_k).

"""
import logging
from dataclasses import dataclass
from typing import Tuple

from toric.exceptions import InternalInconsistency, LengthMismatch
from toric.intlin import (
    RationalPolytopeSpec,
    cokernel_invariants,
    polytope_lattice_points,
    smith_normal_form,
)
from toric.utils import dot

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClassElement:
    free: Tuple[int, ...]
    torsion: Tuple[int, ...] = ()
    moduli: Tuple[int, ...] = ()

    def __add__(self, other):
        return ClassElement(
            free=tuple(a + b for a, b in zip(self.free, other.free)),
            torsion=tuple(
                (a + b) % d for a, b, d in zip(self.torsion, other.torsion, self.moduli)
            ),
            moduli=self.moduli,
        )

    @property
    def is_zero(self):
        return not any(self.free) and not any(self.torsion)

    def as_dict(self):
        return {"free": list(self.free), "torsion": list(self.torsion)}


@dataclass(frozen=True)
class ClassGroupData:
    v_matrix: object
    free_rank: int
    torsion: Tuple[int, ...]
    free_rows: Tuple[Tuple[int, ...], ...]
    torsion_rows: Tuple[Tuple[int, ...], ...]

    @property
    def ray_count(self):
        return self.v_matrix.shape[0]

    def project(self, vector):
        return ClassElement(
            free=tuple(dot(row, vector) for row in self.free_rows),
            torsion=tuple(
                dot(row, vector) % d for row, d in zip(self.torsion_rows, self.torsion)
            ),
            moduli=self.torsion,
        )


def _oriented(row):
    # Orient each free coordinate so the sum of all ray classes is positive,
    # falling back to the first nonzero entry.
    total = sum(row)
    if total < 0 or (total == 0 and next(a for a in row if a) < 0):
        return tuple(-a for a in row)
    return row


def class_group(vfan):
    matrix = vfan.matrix
    r, n = matrix.shape
    free_rank, torsion = cokernel_invariants(matrix)

    snf = smith_normal_form(matrix)
    U = [tuple(int(a) for a in snf.U.row(k)) for k in range(r)]
    diagonal = snf.diagonal

    data = ClassGroupData(
        v_matrix=matrix,
        free_rank=free_rank,
        torsion=tuple(d for d in diagonal if d > 1),
        free_rows=tuple(_oriented(U[k]) for k in range(n, r)),
        torsion_rows=tuple(U[k] for k, d in enumerate(diagonal) if d > 1),
    )

    for k in range(n):
        basis = tuple(int(j == k) for j in range(n))
        if not data.project(vfan.evaluate(basis)).is_zero:
            raise InternalInconsistency(
                "The class of v(e_%d) is not zero." % k, basis=list(basis)
            )

    logger.debug(
        "Class group of %r: free rank %d, torsion %r",
        vfan.name,
        data.free_rank,
        list(data.torsion),
    )
    return data


def divisor_class(data, n):
    """ The class [sum n_i H_i] of a torus-invariant divisor. """
    n = tuple(n)
    if len(n) != data.ray_count:
        raise LengthMismatch(
            "Divisor has %d coefficients, the fan has %d rays."
            % (len(n), data.ray_count)
        )
    return data.project(n)


def ray_classes_in_group(data):
    """ The degrees [H_1], ..., [H_r] of the Cox ring variables. """
    r = data.ray_count
    return [
        divisor_class(data, tuple(int(i == j) for j in range(r))) for i in range(r)
    ]


def _check_length(vfan, n):
    if len(n) != vfan.ray_count:
        raise LengthMismatch(
            "Divisor has %d coefficients, the fan has %d rays."
            % (len(n), vfan.ray_count)
        )


def in_cox_monoid(vfan, alpha, n):
    """ True if x^alpha is a section of O(sum n_i H_i), i.e. v(alpha) + n >= 0. """
    _check_length(vfan, n)
    values = vfan.evaluate(alpha)
    return all(value + coefficient >= 0 for value, coefficient in zip(values, n))


def sections(vfan, n):
    """
    Lattice points alpha with v_i(alpha) + n_i >= 0 for every ray, sorted.

    These index a basis of the global sections of O(sum n_i H_i).

    """
    n = tuple(n)
    _check_length(vfan, n)
    spec = RationalPolytopeSpec(
        vfan.rank,
        inequalities=tuple((ray, -c) for ray, c in zip(vfan.rays, n)),
    )
    return polytope_lattice_points(spec)


def section_count(vfan, n):
    return len(sections(vfan, n))
