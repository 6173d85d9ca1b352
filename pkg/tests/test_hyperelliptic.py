import random

import pytest

from cameral.lib.errors import (
    BudgetExceededError,
    CurveMismatchError,
    InvalidCurveError,
    PreconditionError,
)
from cameral.lib.hyperelliptic import (
    HyperCurve,
    PicClass,
    cantor_add,
    count_classes_by_places,
    first_curve,
    infinity_class,
    jacobian_elements,
    multiply,
    negate,
    point_divisor,
    ramification_class,
    sigma_pullback,
)


@pytest.fixture(scope="module")
def genus2():
    return HyperCurve.from_expression(3, "x**5 + 2*x + 1")


@pytest.fixture(scope="module")
def genus1():
    return HyperCurve.from_expression(5, "x**3 + x + 1")


@pytest.mark.parametrize("q", [2, 4, 9, 15])
def test_field_size_must_be_an_odd_prime(q):
    with pytest.raises(InvalidCurveError):
        HyperCurve(q, [1, 0, 1, 1])


def test_f_must_be_squarefree():
    # x = 1 is a double root over F_3
    with pytest.raises(InvalidCurveError):
        HyperCurve.from_expression(3, "x**5 + x + 1")


def test_f_must_have_odd_degree():
    with pytest.raises(InvalidCurveError):
        HyperCurve.from_expression(5, "x**4 + 1")


def test_first_curve():
    curve = first_curve(3, 2)
    assert curve.genus == 2
    assert curve.f[:4] == [1, 0, 0, 0]
    with pytest.raises(InvalidCurveError):
        first_curve(4, 1)


def test_group_law(genus2):
    elements = jacobian_elements(genus2)
    identity = genus2.identity
    for a in elements:
        assert cantor_add(genus2, a, identity) == a
        assert cantor_add(genus2, a, negate(genus2, a)).is_identity()


def test_associativity_and_commutativity(genus2):
    elements = jacobian_elements(genus2)
    rng = random.Random(0)
    for _ in range(50):
        a, b, c = (rng.choice(elements) for _ in range(3))
        assert cantor_add(genus2, a, b) == cantor_add(genus2, b, a)
        assert cantor_add(genus2, cantor_add(genus2, a, b), c) == cantor_add(genus2, a, cantor_add(genus2, b, c))


def test_jacobian_order_matches_place_count(genus1, genus2):
    assert len(jacobian_elements(genus1)) == count_classes_by_places(genus1)
    assert len(jacobian_elements(genus2)) == count_classes_by_places(genus2)


def test_multiply_by_group_order(genus2):
    order = len(jacobian_elements(genus2))
    assert all(multiply(genus2, a, order).is_identity() for a in jacobian_elements(genus2))


def test_sigma_is_an_involution_and_negation(genus2):
    for m in jacobian_elements(genus2):
        c = PicClass(0, m)
        assert sigma_pullback(genus2, sigma_pullback(genus2, c)) == c
        assert sigma_pullback(genus2, c).divisor == negate(genus2, m)
    assert sigma_pullback(genus2, infinity_class(genus2, 3)) == infinity_class(genus2, 3)


def test_point_class_pulls_back_to_its_negative(genus2):
    point = genus2.rational_points()[0]
    divisor = point_divisor(genus2, point)
    pulled = sigma_pullback(genus2, PicClass(0, divisor)).divisor
    assert cantor_add(genus2, divisor, pulled).is_identity()


def test_point_must_lie_on_the_curve(genus2):
    on_curve = set(genus2.rational_points())
    off = next((a, b) for a in range(3) for b in range(3) if (a, b) not in on_curve)
    with pytest.raises(PreconditionError):
        point_divisor(genus2, off)


def test_ramification_divisor_is_linear_equivalent_to_infinity(genus1, genus2):
    for curve in (genus1, genus2):
        assert ramification_class(curve) == infinity_class(curve, 2 * curve.genus + 2)


def test_divisors_from_another_curve_are_rejected(genus1, genus2):
    with pytest.raises(CurveMismatchError):
        cantor_add(genus2, genus2.identity, genus1.identity)


def test_enumeration_budget():
    curve = first_curve(7, 2, max_enum=100)
    with pytest.raises(BudgetExceededError):
        jacobian_elements(curve)


def test_place_count_needs_small_genus():
    with pytest.raises(PreconditionError):
        count_classes_by_places(first_curve(3, 3))
