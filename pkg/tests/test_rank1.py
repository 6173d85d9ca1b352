import pytest

from cameral.lib.errors import PreconditionError, UnsupportedFamilyError
from cameral.lib.hyperelliptic import (
    HyperCurve,
    PicClass,
    first_curve,
    infinity_class,
    jacobian_elements,
    pic_multiply,
    point_divisor,
)
from cameral.lib.rank1 import (
    automorphism_count,
    condition_star_quotient,
    det_pushforward_identity,
    higgs_obstruction_vanishes,
    pgl2_from_sl2,
    pgl2_image_report,
    rank1_report,
    satisfies_sl2,
    sl2_solutions,
    torsor_check,
)
from cameral.verify.constants import TORSOR_CURVES


@pytest.fixture(scope="module")
def curve():
    return HyperCurve.from_expression(3, "x**5 + 2*x + 1")


def test_infinity_multiple_is_a_solution(curve):
    assert satisfies_sl2(curve, infinity_class(curve, curve.genus + 1))
    assert higgs_obstruction_vanishes(curve)["vanishes"]


def test_solutions_form_a_torsor(curve):
    solutions = sl2_solutions(curve)
    assert len(solutions) == len(jacobian_elements(curve))
    assert all(line.degree == curve.genus + 1 for line in solutions)

    report = torsor_check(curve)
    assert report.free and report.transitive
    assert report.to_json()["torsor_ok"]


def test_det_pushforward_identity(curve):
    trivial = PicClass(0, curve.identity)
    assert det_pushforward_identity(curve, trivial)

    point = PicClass(1, point_divisor(curve, curve.rational_points()[0]))
    assert det_pushforward_identity(curve, point)
    assert all(det_pushforward_identity(curve, PicClass(2, m)) for m in jacobian_elements(curve))


def test_pgl2_from_sl2(curve):
    base = infinity_class(curve, curve.genus + 1)
    assert pgl2_from_sl2(curve, base) == pic_multiply(curve, base, 2)
    with pytest.raises(PreconditionError):
        pgl2_from_sl2(curve, infinity_class(curve, curve.genus))


def test_pgl2_image(curve):
    report = pgl2_image_report(curve)
    assert report["consistent"]
    assert report["image"] * report["jacobian_2_torsion"] == report["solutions"]


def test_condition_star(curve):
    assert condition_star_quotient(curve, "SL") == 1
    assert condition_star_quotient(curve, "PGL") == 2
    assert automorphism_count(curve, "PGL") == 1
    assert automorphism_count(curve, "SL") == 2
    with pytest.raises(UnsupportedFamilyError):
        automorphism_count(curve, "SO")


@pytest.mark.parametrize("q, expression", TORSOR_CURVES)
def test_acceptance_curves(q, expression):
    report = rank1_report(HyperCurve.from_expression(q, expression))
    assert report["solutions"] == report["jacobian_order"] > 0
    assert report["torsor_ok"]
    assert report["det_identity_ok"]
    assert report["sigma_is_negation"]
    assert report["place_count"] == report["jacobian_order"]
    assert report["condition_star_quotient"] == {"SL": 1, "PGL": 2}


def test_genus_one_over_f5():
    report = rank1_report(first_curve(5, 1))
    assert report["genus"] == 1
    assert report["torsor_ok"]
