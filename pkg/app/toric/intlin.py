# File: toric/intlin.py
"""
Exact integer and rational linear algebra.

Matrices are sympy ``ImmutableMatrix`` objects with integer entries; vectors
are tuples of Python ints (or sympy Rationals where a rational result is
expected). Nothing in this module touches floating point.

"""
import itertools
import logging
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Tuple

from sympy import ImmutableMatrix, Matrix, Rational, ceiling, floor

from toric.exceptions import NotInjective, Unbounded, ZeroVector

logger = logging.getLogger(__name__)

IntMatrix = ImmutableMatrix
IntVector = Tuple[int, ...]


def int_matrix(rows, cols=None):
    """
    Build an integer matrix from a sequence of rows.

    ``cols`` is only needed to shape a matrix without rows.

    """
    rows = [[int(e) for e in row] for row in rows]
    if not rows:
        return ImmutableMatrix.zeros(0, cols or 0)
    return ImmutableMatrix(rows)


@dataclass(frozen=True)
class SnfResult:
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self):
        return tuple(int(self.D[k, k]) for k in range(min(self.D.shape)))

    @property
    def rank(self):
        return sum(1 for d in self.diagonal if d != 0)


@dataclass(frozen=True)
class RationalPolytopeSpec:
    """
    The polyhedron {a : <w, a> = c for every equality, <w, a> >= c for every
    inequality} in Q^dimension.

    """

    dimension: int
    equalities: Tuple[Tuple[IntVector, int], ...] = ()
    inequalities: Tuple[Tuple[IntVector, int], ...] = ()

    def __post_init__(self):
        for normal, _ in self.equalities + self.inequalities:
            if len(normal) != self.dimension:
                raise ValueError(
                    "Constraint normal %r does not have length %d."
                    % (normal, self.dimension)
                )

    def contains(self, point):
        return all(
            sum(w * a for w, a in zip(normal, point)) == c
            for normal, c in self.equalities
        ) and all(
            sum(w * a for w, a in zip(normal, point)) >= c
            for normal, c in self.inequalities
        )

    def homogenized(self):
        return RationalPolytopeSpec(
            self.dimension,
            tuple((w, 0) for w, _ in self.equalities),
            tuple((w, 0) for w, _ in self.inequalities),
        )

    @property
    def normals(self):
        return [w for w, _ in self.equalities + self.inequalities]


# Smith normal form


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m, target, source, q):
    m[target] = [a + q * b for a, b in zip(m[target], m[source])]


def _add_col(m, target, source, q):
    for row in m:
        row[target] += q * row[source]


def smith_normal_form(A):
    """
    Diagonalize an integer matrix by unimodular row and column operations.

    Returns U, D, V with U * A * V == D, D diagonal, non-negative, and each
    diagonal entry dividing the next.

    """
    rows, cols = A.shape
    D = [[int(A[i, j]) for j in range(cols)] for i in range(rows)]
    U = [[int(i == j) for j in range(rows)] for i in range(rows)]
    V = [[int(i == j) for j in range(cols)] for i in range(cols)]

    for t in range(min(rows, cols)):
        nonzero = [
            (abs(D[i][j]), i, j)
            for i in range(t, rows)
            for j in range(t, cols)
            if D[i][j]
        ]
        if not nonzero:
            break

        _, i, j = min(nonzero)
        _swap_rows(D, t, i)
        _swap_rows(U, t, i)
        _swap_cols(D, t, j)
        _swap_cols(V, t, j)

        while True:
            # Every swap below strictly lowers |D[t][t]|, so this terminates.
            swapped = False
            for i in range(t + 1, rows):
                if D[i][t]:
                    q = D[i][t] // D[t][t]
                    _add_row(D, i, t, -q)
                    _add_row(U, i, t, -q)
                    if D[i][t]:
                        _swap_rows(D, t, i)
                        _swap_rows(U, t, i)
                        swapped = True
                        break
            if swapped:
                continue

            for j in range(t + 1, cols):
                if D[t][j]:
                    q = D[t][j] // D[t][t]
                    _add_col(D, j, t, -q)
                    _add_col(V, j, t, -q)
                    if D[t][j]:
                        _swap_cols(D, t, j)
                        _swap_cols(V, t, j)
                        swapped = True
                        break
            if swapped:
                continue

            offender = next(
                (
                    i
                    for i in range(t + 1, rows)
                    for j in range(t + 1, cols)
                    if D[i][j] % D[t][t]
                ),
                None,
            )
            if offender is None:
                break
            # Pull the non-divisible entry into row t; column clearing then
            # produces a smaller pivot.
            _add_row(D, t, offender, 1)
            _add_row(U, t, offender, 1)

        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]

    return SnfResult(
        U=int_matrix(U, rows), D=int_matrix(D, cols), V=int_matrix(V, cols)
    )


def cokernel_invariants(A):
    """
    Describe Z^rows / A(Z^cols) as (free rank, torsion invariant factors).

    Raises NotInjective when A does not have full column rank.

    """
    rows, cols = A.shape
    snf = smith_normal_form(A)
    if snf.rank < cols:
        raise NotInjective(
            "Matrix of rank %d does not define an injective map from Z^%d."
            % (snf.rank, cols)
        )
    torsion = [d for d in snf.diagonal if d > 1]
    return rows - snf.rank, torsion


def quotient_invariants(generators, dimension):
    """ Invariants of Z^dimension modulo the span of the given vectors. """
    generators = [tuple(g) for g in generators]
    if not generators:
        return dimension, []

    columns = int_matrix(generators).T
    snf = smith_normal_form(columns)
    return dimension - snf.rank, [d for d in snf.diagonal if d > 1]


def primitive(vec):
    vec = tuple(int(a) for a in vec)
    g = reduce(gcd, vec, 0)
    if g == 0:
        raise ZeroVector("The zero vector has no primitive generator.")
    return tuple(a // g for a in vec)


def integral_direction(vec):
    """ Scale a rational vector to a primitive integer vector. """
    rationals = [Rational(a) for a in vec]
    denominators = [int(q.q) for q in rationals]
    denominator = reduce(lambda a, b: a * b // gcd(a, b), denominators, 1)
    return primitive(int(q * denominator) for q in rationals)


def matrix_rank(rows, dimension=None):
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    return Matrix(rows).rank()


def kernel_basis(rows, dimension):
    """ Primitive integer vectors spanning {x : <row, x> = 0 for all rows}. """
    if not rows:
        return [tuple(int(i == j) for j in range(dimension)) for i in range(dimension)]
    return [integral_direction(v) for v in Matrix([list(r) for r in rows]).nullspace()]


def rational_solve(A, b):
    """
    Solve the square system A x = b over Q.

    Returns None when A is singular.

    """
    A = Matrix(A)
    if A.rows != A.cols:
        raise ValueError("rational_solve expects a square system.")
    if A.rows == 0 or A.det() == 0:
        return None
    solution = A.LUsolve(Matrix(list(b)))
    return tuple(Rational(x) for x in solution)


# Polyhedra


def polyhedron_vertices(spec):
    """
    Vertices of the polyhedron, found by solving every square subsystem of
    its constraints and keeping the feasible solutions.

    Only meaningful for pointed polyhedra (constraint normals of full rank).

    """
    n = spec.dimension
    constraints = spec.equalities + spec.inequalities

    vertices = set()
    for subset in itertools.combinations(constraints, n):
        point = rational_solve([w for w, _ in subset], [c for _, c in subset])
        if point is not None and spec.contains(point):
            vertices.add(point)

    return sorted(vertices)


def recession_direction(spec):
    """
    Return a nonzero primitive direction d with a + t*d in the polyhedron for
    all t >= 0 (whenever a is), or None if the recession cone is zero.

    """
    n = spec.dimension
    homogeneous = spec.homogenized()
    normals = spec.normals

    if matrix_rank(normals) < n:
        return kernel_basis(normals, n)[0]

    # A pointed nonzero cone has an extreme ray cut out by n - 1
    # independent active constraints.
    for subset in itertools.combinations(normals, n - 1):
        if matrix_rank(subset) != n - 1:
            continue
        line = kernel_basis(list(subset), n)[0]
        for candidate in (line, tuple(-a for a in line)):
            if homogeneous.contains(candidate):
                return candidate

    return None


def is_feasible(spec):
    """ Decide exactly whether the polyhedron has a rational point. """
    n = spec.dimension
    normals = spec.normals
    if matrix_rank(normals) < n:
        # Cut along the lineality space; the slice is pointed.
        lineality = kernel_basis(normals, n)
        spec = RationalPolytopeSpec(
            n,
            spec.equalities + tuple((l, 0) for l in lineality),
            spec.inequalities,
        )
    return bool(polyhedron_vertices(spec))


def polytope_lattice_points(spec):
    """
    Enumerate the integer points of a bounded rational polyhedron.

    The vertices fix an integer bounding box which is then scanned and
    filtered. Raises Unbounded if the polyhedron is nonempty and has a
    nonzero recession direction.

    """
    direction = recession_direction(spec)
    if direction is not None:
        if is_feasible(spec):
            raise Unbounded(
                "Polyhedron is unbounded in direction %r." % (direction,)
            )
        return []

    vertices = polyhedron_vertices(spec)
    if not vertices:
        return []

    low = [int(floor(min(v[k] for v in vertices))) for k in range(spec.dimension)]
    high = [int(ceiling(max(v[k] for v in vertices))) for k in range(spec.dimension)]

    ranges = [range(lo, hi + 1) for lo, hi in zip(low, high)]
    points = [p for p in itertools.product(*ranges) if spec.contains(p)]

    logger.debug(
        "Scanned box %r..%r, kept %d lattice points", low, high, len(points)
    )
    return sorted(points)
