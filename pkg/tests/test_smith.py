from cameral.lib.smith import diagonalize, elementary_divisors, integer_kernel, smith_solve


def _satisfies(rows, rhs, x):
    return all(sum(v * x[c] for c, v in row.items()) == b for row, b in zip(rows, rhs))


def test_solvable_system_returns_witness():
    rows = [{0: 2, 1: 4}, {1: 3, 2: -1}]
    rhs = [6, 5]
    result = smith_solve(rows, rhs, 3)
    assert result.solvable
    assert _satisfies(rows, rhs, result.solution)


def test_divisibility_certificate():
    result = smith_solve([{0: 2}], [3], 1)
    assert not result.solvable
    assert result.certificate["kind"] == "divisibility"
    assert result.certificate["divisor"] == 2
    assert result.certificate["residue"] == 1
    assert result.certificate["elementary_divisors"] == [2]


def test_inconsistent_rows():
    result = smith_solve([{0: 1}, {0: 1}], [1, 2], 1)
    assert not result.solvable
    assert result.certificate["kind"] == "inconsistent"


def test_zero_row_with_nonzero_rhs():
    result = smith_solve([{0: 0}], [1], 1)
    assert not result.solvable


def test_empty_system():
    result = smith_solve([], [], 2)
    assert result.solvable
    assert result.solution == [0, 0]


def test_dependent_rows():
    rows = [{0: 1, 1: 1}, {0: 2, 1: 2}, {0: 1, 1: -1}]
    rhs = [4, 8, 2]
    result = smith_solve(rows, rhs, 2)
    assert result.solvable
    assert result.solution == [3, 1]


def test_elementary_divisors():
    assert elementary_divisors([1, 12, -2, 0]) == [2, 3, 4]


def test_diagonalize_preserves_determinant():
    diagonal, _, rank = diagonalize([[2, 4], [6, 8]])
    assert rank == 2
    assert abs(diagonal[0] * diagonal[1]) == 8


def test_diagonalize_column_transform():
    matrix = [[2, 4, 4], [-6, 6, 12]]
    original = [list(row) for row in matrix]
    diagonal, transform, rank = diagonalize(matrix)
    product = [
        [sum(original[i][k] * transform[k][j] for k in range(3)) for j in range(3)]
        for i in range(2)
    ]
    assert rank == 2
    assert all(product[i][j] == 0 for i in range(2) for j in range(rank, 3))


def test_integer_kernel():
    kernel = integer_kernel([[1, 1, 0], [0, 0, 1]])
    assert len(kernel) == 1
    v = kernel[0]
    assert v[0] + v[1] == 0 and v[2] == 0
    assert abs(v[0]) == 1
