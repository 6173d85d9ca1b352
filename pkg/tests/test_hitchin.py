import pytest

from cameral.lib.errors import InvalidCurveError, PreconditionError
from cameral.lib.hitchin import (
    ASSUMPTIONS,
    CurveSpec,
    cameral_genus,
    dimension_row,
    h0_of_power,
    hitchin_dim,
    prym_dim,
    prym_equals_hitchin,
)
from cameral.verify.constants import BUILTIN_RANK3


def test_curve_spec_validation():
    with pytest.raises(InvalidCurveError):
        CurveSpec.canonical(1)
    with pytest.raises(InvalidCurveError):
        CurveSpec(2, degree=3)
    with pytest.raises(InvalidCurveError):
        CurveSpec(-1, degree=1)
    assert CurveSpec.canonical(3).degree_k == 4
    assert CurveSpec.projective_line(2).degree_k == 2


@pytest.mark.parametrize(
    "curve, d, expected",
    [
        (CurveSpec.canonical(2), 2, 3),
        (CurveSpec.canonical(2), 1, 2),
        (CurveSpec.canonical(4), 3, 15),
        (CurveSpec.projective_line(2), 3, 7),
        (CurveSpec.projective_line(-1), 2, 0),
        (CurveSpec.canonical(3), 0, 1),
        (CurveSpec.projective_line(5), 0, 1),
    ],
)
def test_h0_of_power(curve, d, expected):
    assert h0_of_power(curve, d) == expected


def test_h0_rejects_negative_exponents():
    with pytest.raises(PreconditionError):
        h0_of_power(CurveSpec.canonical(2), -1)


def test_sl2(classical):
    datum = classical("SL", 2)
    assert hitchin_dim(datum, CurveSpec.canonical(2)) == 3
    for g in (2, 3, 4):
        curve = CurveSpec.canonical(g)
        assert prym_dim(datum, curve) == 3 * g - 3
        assert cameral_genus(datum, curve) == 4 * g - 3
    assert cameral_genus(datum, CurveSpec.projective_line(2)) == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("g", [2, 3])
def test_gl_dimensions(classical, n, g):
    datum = classical("GL", n)
    curve = CurveSpec.canonical(g)
    assert hitchin_dim(datum, curve) == n * n * (g - 1) + 1
    assert prym_dim(datum, curve) == n * n * (g - 1) + 1


def test_gl1_is_the_jacobian(classical):
    datum = classical("GL", 1)
    curve = CurveSpec.canonical(5)
    assert hitchin_dim(datum, curve) == prym_dim(datum, curve) == 5
    assert cameral_genus(datum, curve) == 5


def test_prym_needs_canonical_bundle(classical):
    with pytest.raises(PreconditionError):
        prym_dim(classical("SL", 2), CurveSpec.projective_line(2))


@pytest.mark.parametrize("type_tag, n", BUILTIN_RANK3)
def test_prym_equals_hitchin(classical, type_tag, n):
    for g in (2, 3, 4):
        assert prym_equals_hitchin(classical(type_tag, n), g)


def test_dimension_row(classical):
    row = dimension_row(classical("GL", 3), 2)
    assert row["datum"] == "GL(3)"
    assert row["hitchin_dim"] == row["prym_dim"] == 10
    assert row["equal"]
    assert row["assumptions"] == list(ASSUMPTIONS)
