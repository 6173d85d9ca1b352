"""
Integer vectors and matrices as nested tuples.

Weyl-group enumeration multiplies tens of thousands of small matrices, so the
hot paths stay on plain Python integers. Anything that needs ranks,
determinants or kernels goes through sympy instead.
"""

from functools import reduce
from math import gcd

Vector = tuple[int, ...]
IntMatrix = tuple[tuple[int, ...], ...]


def zero_vector(n: int) -> Vector:
    return (0,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(1 if k == i else 0 for k in range(n))


def dot(u: Vector, v: Vector) -> int:
    return sum(a * b for a, b in zip(u, v))


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_neg(v: Vector) -> Vector:
    return tuple(-a for a in v)


def vec_scale(c: int, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def vec_mod(v: Vector, m: int) -> Vector:
    return tuple(a % m for a in v)


def is_zero(v: Vector) -> bool:
    return all(a == 0 for a in v)


def content(v: Vector) -> int:
    """
    gcd of the coordinates; 0 for the zero vector.
    """

    return reduce(gcd, (abs(a) for a in v), 0)


def identity(n: int) -> IntMatrix:
    return tuple(unit_vector(n, i) for i in range(n))


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    columns = list(zip(*b))
    return tuple(tuple(dot(row, col) for col in columns) for row in a)


def mat_vec(a: IntMatrix, v: Vector) -> Vector:
    return tuple(dot(row, v) for row in a)


def transpose(a: IntMatrix) -> IntMatrix:
    return tuple(zip(*a))


def mat_mod(a: IntMatrix, m: int) -> IntMatrix:
    return tuple(vec_mod(row, m) for row in a)


def outer(u: Vector, v: Vector) -> IntMatrix:
    return tuple(tuple(a * b for b in v) for a in u)


def mat_sub(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return tuple(vec_sub(r, s) for r, s in zip(a, b))


def reflection_matrix(root: Vector, coroot: Vector) -> IntMatrix:
    """
    Matrix of v -> v - <root, v> coroot on the lattice holding `coroot`.
    """

    return mat_sub(identity(len(coroot)), outer(coroot, root))


def is_diagonal(a: IntMatrix) -> bool:
    return all(a[i][j] == 0 for i in range(len(a)) for j in range(len(a)) if i != j)


def diagonal(a: IntMatrix) -> Vector:
    return tuple(a[i][i] for i in range(len(a)))


def is_monomial(a: IntMatrix) -> bool:
    """
    True when every row and every column holds exactly one entry, equal to +1 or -1.
    """

    for row in list(a) + list(transpose(a)):
        support = [x for x in row if x != 0]
        if len(support) != 1 or abs(support[0]) != 1:
            return False
    return True


def to_lists(a: IntMatrix) -> list[list[int]]:
    return [list(row) for row in a]
