import pytest

from cameral.lib.errors import NoModelError, PreconditionError
from cameral.lib.gcohom import Cochain, GModule, coboundary, group_from_weyl, is_coboundary, normalized_tuples
from cameral.lib.intmat import mat_vec, vec_add, vec_mod
from cameral.lib.rootdata import datum_from_cartan, reduced_words
from cameral.lib.titsext import (
    braid_check,
    chevalley_generators,
    closed_form_cocycle,
    cocycle,
    conjugation_matches,
    lift_change_cochain,
    lift_rescale,
    rescaled_model,
    right_cocycle,
    section_along,
    squares_match_coroots,
    tits_section,
)

MODELLED = [
    ("GL", 3),
    ("SL", 2),
    ("SL", 3),
    ("SL", 4),
    ("PGL", 2),
    ("PGL", 3),
    ("Sp", 4),
    ("SO", 4),
    ("SO", 5),
]

MODELLED_FAST = [datum for datum in MODELLED if datum != ("SL", 4)]

@pytest.mark.parametrize("type_tag, n", MODELLED)
def test_model_sanity(classical, type_tag, n):
    model = chevalley_generators(classical(type_tag, n))
    assert squares_match_coroots(model)
    assert conjugation_matches(model)
    assert braid_check(model)

def test_sl2_lift_squares_to_the_coroot(classical):
    datum = classical("SL", 2)
    model = chevalley_generators(datum)
    s = datum.weyl_group().simple_reflection(0)
    assert tits_section(model, s) == ((0, 1), (-1, 0))
    assert cocycle(model, s, s) == (1,)

def test_pgl2_cocycle_is_trivial(classical):
    datum = classical("PGL", 2)
    model = chevalley_generators(datum)
    elements = datum.weyl_group().elements
    assert all(cocycle(model, w1, w2) == (0,) for w1 in elements for w2 in elements)

@pytest.mark.parametrize("type_tag, n", MODELLED)
def test_closed_form_matches_model(classical, type_tag, n):
    datum = classical(type_tag, n)
    model = chevalley_generators(datum)
    elements = datum.weyl_group().elements
    for w1 in elements:
        for w2 in elements:
            assert cocycle(model, w1, w2) == closed_form_cocycle(datum, w1, w2, "left")
            assert right_cocycle(model, w1, w2) == closed_form_cocycle(datum, w1, w2, "right")

@pytest.mark.parametrize("type_tag, n", MODELLED_FAST + [pytest.param("SL", 4, marks=pytest.mark.slow)])
def test_cocycle_identity(classical, type_tag, n):
    datum = classical(type_tag, n)
    model = chevalley_generators(datum)
    group = datum.weyl_group()
    for w1 in group.elements:
        for w2 in group.elements:
            for w3 in group.elements:
                left = vec_add(
                    mat_vec(w1.matrix, cocycle(model, w2, w3)),
                    cocycle(model, w1, group.product(w2, w3)),
                )
                right = vec_add(
                    cocycle(model, group.product(w1, w2), w3),
                    cocycle(model, w1, w2),
                )
                assert vec_mod(left, 2) == vec_mod(right, 2)

def _cocycle_cochain(module, model, labels):
    values = {(a, b): cocycle(model, labels[a], labels[b]) for a, b in normalized_tuples(module.group, 2)}
    return Cochain(module, 2, values)

@pytest.mark.parametrize("type_tag, n, i", [("SL", 3, 0), ("SL", 2, 0), ("GL", 3, 1), ("Sp", 4, 1)])
def test_rescaling_changes_cocycle_by_a_coboundary(classical, type_tag, n, i):
    datum = classical(type_tag, n)
    model = chevalley_generators(datum)
    rescaled = rescaled_model(model, i, -1)
    change = lift_change_cochain(model, rescaled)

    group = group_from_weyl(datum)
    labels = group.labels
    module = GModule(group, [w.matrix for w in labels], "torsion", 2)
    difference = _cocycle_cochain(module, rescaled, labels) - _cocycle_cochain(module, model, labels)

    t = Cochain(module, 1, {(a,): change[labels[a].matrix] for (a,) in normalized_tuples(group, 1)})
    assert difference == coboundary(t)
    assert is_coboundary(difference).is_coboundary

@pytest.mark.parametrize("type_tag, n", MODELLED)
def test_reduced_words_give_one_lift(classical, type_tag, n):
    datum = classical(type_tag, n)
    model = chevalley_generators(datum)
    for w in datum.weyl_group().elements:
        if w.length <= 4:
            lifts = {section_along(model, word) for word in reduced_words(datum, w)}
            assert lifts == {tits_section(model, w)}

def test_rescale_sign_must_be_a_unit(classical):
    model = chevalley_generators(classical("SL", 3))
    assert lift_rescale(model, 0, 1) == model.generators[0]
    with pytest.raises(PreconditionError):
        lift_rescale(model, 0, 2)

def test_closed_form_side(classical):
    datum = classical("SL", 2)
    s = datum.weyl_group().simple_reflection(0)
    with pytest.raises(PreconditionError):
        closed_form_cocycle(datum, s, s, "middle")

def test_custom_datum_has_no_model():
    with pytest.raises(NoModelError):
        chevalley_generators(datum_from_cartan([[2, -1], [-1, 2]]))
