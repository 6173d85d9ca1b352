import random

import pytest
from sympy.polys.domains import QQ

from cameral.lib.errors import NotACocycleError, PreconditionError
from cameral.lib.glncover import (
    anti_invariant_module,
    charpoly_condition,
    elementary_symmetric_check,
    invariant_subalgebra,
    local_model,
    multiplication_table,
    normal_form,
    random_cover,
    random_element,
    roundtrip_check,
    s_n_action,
    specialize,
    spectral_from_coeffs,
    splitting_algebra,
    unit_coboundary,
    unit_cocycle_trivialize,
)


@pytest.fixture
def generic2():
    """
    Y^2 - 3Y + 2, with roots 1 and 2.
    """

    return splitting_algebra(spectral_from_coeffs(2, [2, -3]))


@pytest.fixture
def nilpotent2():
    return local_model(2)


def test_degree_one_cover():
    alg = splitting_algebra(spectral_from_coeffs(1, [5]))
    assert alg.rank == 1
    assert not alg.reduce(alg.x(1) + 5)


def test_generic_quadratic(generic2):
    x1 = generic2.x(1)
    assert generic2.rank == 2
    assert generic2.reduce(x1**2) == generic2.reduce(3 * x1 - 2)
    swap = generic2.transposition(1, 2)
    assert generic2.act(swap, x1) == generic2.reduce(3 - x1)


def test_nilpotent_quadratic(nilpotent2):
    x1 = nilpotent2.x(1)
    assert not nilpotent2.reduce(x1**2)
    assert nilpotent2.act(nilpotent2.transposition(1, 2), x1) == -x1


def test_local_model_of_degree_three():
    alg = local_model(3)
    assert alg.rank == 6
    assert all(not alg.reduce(alg.x(k) ** 3) for k in (1, 2, 3))


def test_cover_degree_must_match_coefficients():
    with pytest.raises(PreconditionError):
        spectral_from_coeffs(2, [1])


def test_normal_form_and_action(generic2):
    assert normal_form(generic2, "x1**2") == [-2, 3]
    assert s_n_action(generic2, (1, 0), "x1") == [3, -1]
    assert len(multiplication_table(generic2)) == 4


@pytest.mark.parametrize(
    "n, coefficients",
    [(1, [7]), (2, [2, -3]), (2, [0, 0]), (3, [1, 0, -2]), (3, [0, 0, 0])],
)
def test_elementary_symmetric_functions(n, coefficients):
    assert elementary_symmetric_check(splitting_algebra(spectral_from_coeffs(n, coefficients)))


def test_invariants(generic2):
    assert invariant_subalgebra(generic2, generic2.permutations).rank == 1
    assert invariant_subalgebra(generic2, generic2.stabilizer(1)).rank == 2


@pytest.mark.parametrize(
    "n, coefficients",
    [(1, [7]), (2, [2, -3]), (2, [0, 0]), (3, [1, 0, -2]), (3, ["1/2", -1, 0])],
)
def test_roundtrip(n, coefficients):
    report = roundtrip_check(n, coefficients)
    assert report.spectral_isomorphic
    assert report.splitting_isomorphic


def test_charpoly_condition(generic2):
    spectral = generic2.spectral
    rng = random.Random(3)
    assert charpoly_condition(generic2, spectral.generator)
    assert charpoly_condition(generic2, spectral.ring.one)
    for _ in range(5):
        assert charpoly_condition(generic2, random_element(spectral, rng))


def test_charpoly_condition_on_random_cubics():
    rng = random.Random(8)
    for _ in range(3):
        alg = splitting_algebra(random_cover(3, rng))
        assert charpoly_condition(alg, random_element(alg.spectral, rng))


@pytest.mark.parametrize("fixture", ["generic2", "nilpotent2"])
def test_anti_invariants_are_generated_by_root_difference(request, fixture):
    alg = request.getfixturevalue(fixture)
    report = anti_invariant_module(alg, 1, 2)
    assert report.dim_anti_invariant == 1
    assert report.dim_invariant == 1
    assert report.generated


def test_polynomial_base_needs_specialization():
    cover = random_cover(2, random.Random(1), "t")
    alg = splitting_algebra(cover)
    with pytest.raises(PreconditionError):
        invariant_subalgebra(alg, alg.stabilizer(1))

    special = specialize(alg, 1)
    assert special.domain == QQ
    assert invariant_subalgebra(special, special.stabilizer(1)).rank == 2


def test_seeded_covers_repeat():
    first = [random_cover(3, random.Random(42)).key for _ in range(2)]
    assert first[0] == first[1]


def test_unit_cocycles_are_trivialized(nilpotent2):
    v = nilpotent2.ring.one + nilpotent2.x(1)
    cocycle = unit_coboundary(nilpotent2, v)
    trivialization = unit_cocycle_trivialize(nilpotent2, cocycle)
    assert trivialization.verified


def test_unit_trivialization_on_cubic_local_model():
    alg = local_model(3)
    v = alg.ring.one + alg.x(1) - 2 * alg.x(2) ** 2
    assert unit_cocycle_trivialize(alg, unit_coboundary(alg, v)).verified


def test_unit_non_cocycle_is_rejected(nilpotent2):
    one, x1 = nilpotent2.ring.one, nilpotent2.x(1)
    identity, swap = nilpotent2.permutations
    with pytest.raises(NotACocycleError):
        unit_cocycle_trivialize(nilpotent2, {identity: one + x1, swap: one})


def test_unit_trivialization_needs_the_local_model(generic2):
    with pytest.raises(PreconditionError):
        unit_cocycle_trivialize(generic2, {})
