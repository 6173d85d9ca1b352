"""
Exact integer solver for A x = b built on Smith-style diagonalization.

Rows are sparse dictionaries {column: coefficient}. The solver first brings
the system to echelon form with unimodular row operations (applied to the
right-hand side as they go), then diagonalizes the surviving pivot rows with
row and column operations, keeping the column transform to recover x.
A failed solve returns a certificate instead of a witness.
"""

import logging
from typing import NamedTuple, Optional

from sympy import factorint

from .errors import InternalConsistencyError

logger = logging.getLogger(__name__)


class SolveResult(NamedTuple):
    solvable: bool
    solution: Optional[list]
    certificate: Optional[dict]

    def to_json(self) -> dict:
        return {
            "solvable": self.solvable,
            "certificate": self.certificate,
        }


def elementary_divisors(diagonal: list) -> list:
    """
    Prime powers of the non-unit diagonal entries, sorted.
    """

    powers = []
    for d in diagonal:
        d = abs(d)
        if d > 1:
            powers.extend(p**e for p, e in factorint(d).items())
    return sorted(powers)


def _subtract(target: dict, source: dict, q: int) -> None:
    for column, value in source.items():
        updated = target.get(column, 0) - q * value
        if updated:
            target[column] = updated
        else:
            target.pop(column, None)


def _normalized(row: dict, rhs: int) -> tuple:
    if not row:
        return row, rhs
    first = row[min(row)]
    if first < 0:
        return {c: -v for c, v in row.items()}, -rhs
    return row, rhs


def _echelon(rows: list, rhs: list, ncols: int):
    """
    Sparse integer row echelon form. Returns (pivot_rows, pivot_rhs, failure).
    """

    unique = {}
    for row, value in zip(rows, rhs):
        row, value = _normalized({c: v for c, v in row.items() if v}, value)
        if not row:
            if value:
                return [], [], {"kind": "inconsistent", "residue": value}
            continue
        key = tuple(sorted(row.items()))
        if key in unique:
            if unique[key][1] != value:
                return [], [], {
                    "kind": "inconsistent",
                    "residue": value - unique[key][1],
                }
            continue
        unique[key] = (row, value)

    active = [[row, value] for row, value in unique.values()]
    pivot_rows, pivot_rhs = [], []

    for column in range(ncols):
        while True:
            holders = [entry for entry in active if column in entry[0]]
            if not holders:
                break
            pivot = min(holders, key=lambda e: (abs(e[0][column]), len(e[0])))
            pivot_value = pivot[0][column]
            clean = True
            for entry in holders:
                if entry is pivot:
                    continue
                q = entry[0][column] // pivot_value
                _subtract(entry[0], pivot[0], q)
                entry[1] -= q * pivot[1]
                if column in entry[0]:
                    clean = False

            survivors = []
            for entry in active:
                if entry[0]:
                    survivors.append(entry)
                elif entry[1]:
                    return [], [], {"kind": "inconsistent", "residue": entry[1]}
            active = survivors

            if clean:
                active = [entry for entry in active if entry is not pivot]
                pivot_rows.append(pivot[0])
                pivot_rhs.append(pivot[1])
                break

    for entry in active:
        if entry[1]:
            return [], [], {"kind": "inconsistent", "residue": entry[1]}

    return pivot_rows, pivot_rhs, None


def diagonalize(matrix: list, rhs: list = None) -> tuple:
    """
    Bring a dense integer matrix to diagonal form D = U A V.

    Row operations are mirrored on `rhs`; column operations are accumulated in V.

    Args:
        matrix: Dense rows, modified in place.
        rhs: Right-hand side, modified in place. Optional.

    Returns:
        tuple: (diagonal entries, V as dense rows, rank)
    """

    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    transform = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
    rank = 0

    def swap_rows(a, b):
        matrix[a], matrix[b] = matrix[b], matrix[a]
        if rhs is not None:
            rhs[a], rhs[b] = rhs[b], rhs[a]

    def swap_columns(a, b):
        for row in matrix:
            row[a], row[b] = row[b], row[a]
        for row in transform:
            row[a], row[b] = row[b], row[a]

    for t in range(min(nrows, ncols)):
        if all(matrix[i][j] == 0 for i in range(t, nrows) for j in range(t, ncols)):
            break

        while True:
            candidates = [(abs(matrix[t][j]), t, j) for j in range(t, ncols) if matrix[t][j]]
            candidates += [(abs(matrix[i][t]), i, t) for i in range(t + 1, nrows) if matrix[i][t]]
            if not candidates:
                _, i, j = min(
                    (abs(matrix[i][j]), i, j)
                    for i in range(t, nrows)
                    for j in range(t, ncols)
                    if matrix[i][j]
                )
            else:
                _, i, j = min(candidates)
            if i != t:
                swap_rows(i, t)
            if j != t:
                swap_columns(j, t)

            pivot = matrix[t][t]
            clean = True

            for j in range(t + 1, ncols):
                if matrix[t][j]:
                    q = matrix[t][j] // pivot
                    for row in matrix:
                        row[j] -= q * row[t]
                    for row in transform:
                        row[j] -= q * row[t]
                    if matrix[t][j]:
                        clean = False

            for i in range(t + 1, nrows):
                if matrix[i][t]:
                    q = matrix[i][t] // pivot
                    source = matrix[t]
                    target = matrix[i]
                    for j in range(t, ncols):
                        if source[j]:
                            target[j] -= q * source[j]
                    if rhs is not None:
                        rhs[i] -= q * rhs[t]
                    if matrix[i][t]:
                        clean = False

            if clean:
                break

        rank = t + 1

    return [matrix[t][t] for t in range(rank)], transform, rank


def smith_solve(rows: list, rhs: list, ncols: int) -> SolveResult:
    """
    Decide integer solvability of A x = b and return a witness or a certificate.

    Args:
        rows: Sparse rows {column: coefficient}.
        rhs: Integer right-hand side, one entry per row.
        ncols: Number of unknowns.

    Returns:
        SolveResult
    """

    pivot_rows, pivot_rhs, failure = _echelon(rows, rhs, ncols)
    if failure is not None:
        return SolveResult(False, None, failure)

    logger.debug(f"echelon form: {len(pivot_rows)} pivots out of {len(rows)} rows, {ncols} columns")

    if not pivot_rows:
        return SolveResult(True, [0] * ncols, None)

    dense = [[row.get(c, 0) for c in range(ncols)] for row in pivot_rows]
    reduced_rhs = list(pivot_rhs)
    diagonal, transform, rank = diagonalize(dense, reduced_rhs)

    for t in range(rank, len(reduced_rhs)):
        if reduced_rhs[t]:
            return SolveResult(False, None, {"kind": "inconsistent", "residue": reduced_rhs[t]})

    y = [0] * ncols
    for t, d in enumerate(diagonal):
        if reduced_rhs[t] % d:
            return SolveResult(
                False,
                None,
                {
                    "kind": "divisibility",
                    "elementary_divisors": elementary_divisors(diagonal),
                    "pivot": t,
                    "divisor": abs(d),
                    "residue": reduced_rhs[t] % abs(d),
                },
            )
        y[t] = reduced_rhs[t] // d

    x = [sum(transform[i][j] * y[j] for j in range(rank)) for i in range(ncols)]

    for row, value in zip(rows, rhs):
        if sum(v * x[c] for c, v in row.items()) != value:
            raise InternalConsistencyError("integer solve produced a non-solution")

    return SolveResult(True, x, None)


def integer_kernel(matrix: list) -> list:
    """
    Z-basis of {x : A x = 0} for a dense integer matrix.
    """

    if not matrix:
        return []
    ncols = len(matrix[0])
    _, transform, rank = diagonalize([list(row) for row in matrix])
    return [[transform[i][j] for i in range(ncols)] for j in range(rank, ncols)]
