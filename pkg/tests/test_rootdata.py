import pytest

from cameral.lib.errors import (
    InvalidRootDatumError,
    NotFiniteTypeError,
    PreconditionError,
    UnsupportedFamilyError,
)
from cameral.lib.rootdata import (
    CorootDivisor,
    admissible_triples,
    build_classical,
    cameral_stabilizer_ok,
    check_ram_cocycle,
    coroot_primitive,
    datum_from_cartan,
    datum_from_json,
    datum_to_json,
    degrees,
    dynkin_components,
    has_nonprimitive_coroot,
    inversion_set,
    is_parabolic_conjugate,
    poincare_polynomial,
    positive_roots,
    ram_divisor,
    reduced_words,
    rtriviality_shadow,
    so_odd_factor,
    twisted_pullback,
)
from cameral.verify.constants import BUILTIN_RANK3, EXPECTED_NONPRIMITIVE, PRIMITIVITY_SCAN

LARGE_WEYL_GROUPS = {("SL", 4), ("PGL", 4), ("SO", 6), ("Sp", 6), ("SO", 7)}

RANK3 = [
    pytest.param(tag, n, marks=pytest.mark.slow) if (tag, n) in LARGE_WEYL_GROUPS else (tag, n)
    for tag, n in BUILTIN_RANK3
]


@pytest.mark.parametrize(
    "type_tag, n, rank, positives, order",
    [
        ("GL", 1, 1, 0, 1),
        ("GL", 3, 3, 3, 6),
        ("SL", 2, 1, 1, 2),
        ("SL", 3, 2, 3, 6),
        ("SL", 4, 3, 6, 24),
        ("PGL", 2, 1, 1, 2),
        ("Sp", 4, 2, 4, 8),
        ("Sp", 6, 3, 9, 48),
        ("SO", 4, 2, 2, 4),
        ("SO", 5, 2, 4, 8),
        ("SO", 6, 3, 6, 24),
        ("SO", 7, 3, 9, 48),
    ],
)
def test_classical_sizes(classical, type_tag, n, rank, positives, order):
    datum = classical(type_tag, n)
    assert datum.rank == rank
    assert len(positive_roots(datum)) == positives
    assert datum.weyl_group().order == order


def test_rank_one_lattices(classical):
    sl2, pgl2 = classical("SL", 2), classical("PGL", 2)
    assert (sl2.simple_roots, sl2.simple_coroots) == (((2,),), ((1,),))
    assert (pgl2.simple_roots, pgl2.simple_coroots) == (((1,),), ((2,),))


@pytest.mark.parametrize(
    "type_tag, n",
    [("E", 6), ("Sp", 3), ("SL", 1), ("SO", 2), ("GL", 0)],
)
def test_unsupported_families(type_tag, n):
    with pytest.raises(UnsupportedFamilyError):
        build_classical(type_tag, n)


def test_affine_cartan_is_rejected():
    with pytest.raises(InvalidRootDatumError):
        datum_from_cartan([[2, -2], [-2, 2]])


def test_mismatched_vector_lengths():
    with pytest.raises(InvalidRootDatumError):
        datum_from_json({"rank": 2, "simple_roots": [[2]], "simple_coroots": [[1, 0]]})


def test_enumeration_budget():
    datum = build_classical("SL", 4, max_enum=10)
    with pytest.raises(NotFiniteTypeError):
        datum.weyl_group()


def test_datum_from_cartan_matches_sl3(sl3):
    datum = datum_from_cartan([[2, -1], [-1, 2]])
    assert datum.weyl_group().order == 6
    assert set(datum.positive_roots) == set(sl3.positive_roots)


def test_json_roundtrip(classical):
    so5 = classical("SO", 5)
    rebuilt = datum_from_json(datum_to_json(so5))
    assert rebuilt.label == "SO(5)"
    assert rebuilt.simple_coroots == so5.simple_coroots


def test_classical_tag_must_match_builtin():
    content = {"rank": 1, "simple_roots": [[1]], "simple_coroots": [[2]], "type_tag": "SL", "n": 2}
    with pytest.raises(InvalidRootDatumError):
        datum_from_json(content)
    assert datum_from_json({**content, "type_tag": "custom"}).label == "custom(2)"


def test_inversion_set_sizes_match_lengths(classical):
    datum = classical("SO", 7)
    for w in datum.weyl_group().elements:
        assert len(inversion_set(datum, w)) == w.length


def test_inversion_sets_of_sl3(sl3):
    group = sl3.weyl_group()
    assert inversion_set(sl3, group.identity) == frozenset()
    assert inversion_set(sl3, group.simple_reflection(1)) == {sl3.simple_roots[1]}
    assert inversion_set(sl3, group.longest_element()) == set(sl3.positive_roots)


def test_reduced_words_of_longest_element(sl3):
    w0 = sl3.weyl_group().longest_element()
    assert reduced_words(sl3, w0) == [(0, 1, 0), (1, 0, 1)]


def test_ram_divisor(sl3):
    group = sl3.weyl_group()
    assert ram_divisor(sl3, group.identity).is_zero()
    assert ram_divisor(sl3, group.simple_reflection(0)).terms == {sl3.simple_roots[0]: (1, 0)}
    w0 = group.longest_element()
    assert ram_divisor(sl3, w0).terms == {alpha: sl3.coroot(alpha) for alpha in sl3.positive_roots}


def test_negative_root_terms_move_to_positive_root(sl3):
    alpha = sl3.simple_roots[0]
    negative = tuple(-a for a in alpha)
    divisor = CorootDivisor(sl3, {negative: (1, 0)})
    assert divisor.terms == {alpha: (1, 0)}
    assert (divisor + CorootDivisor(sl3, {alpha: (-1, 0)})).is_zero()


def test_coroot_divisor_rejects_non_roots(sl3):
    with pytest.raises(PreconditionError):
        CorootDivisor(sl3, {(1, 0): (1, 0)})


def test_twisted_pullback(sl3):
    group = sl3.weyl_group()
    s1 = group.simple_reflection(0)
    alpha1, alpha2 = sl3.simple_roots

    single = CorootDivisor(sl3, {alpha1: sl3.coroot(alpha1)})
    assert twisted_pullback(sl3, group.identity, single) == single
    # s1 sends alpha1 to -alpha1: the term moves back to alpha1 with the vector s1(coroot) = -coroot
    assert twisted_pullback(sl3, s1, single) == CorootDivisor(sl3, {alpha1: (-1, 0)})

    moved = twisted_pullback(sl3, s1, CorootDivisor(sl3, {alpha2: sl3.coroot(alpha2)}))
    assert moved.terms == {(1, 1): (1, 1)}


@pytest.mark.parametrize("type_tag, n", RANK3)
def test_twisted_pullback_respects_composition(classical, type_tag, n):
    datum = classical(type_tag, n)
    group = datum.weyl_group()
    for alpha in datum.positive_roots:
        divisor = CorootDivisor(datum, {alpha: datum.coroot(alpha)})
        pulled = {w.matrix: twisted_pullback(datum, w, divisor) for w in group.elements}
        for w1 in group.elements:
            for w2 in group.elements:
                # (w1 w2)^* = w2^* w1^*
                assert twisted_pullback(datum, w2, pulled[w1.matrix]) == pulled[group.product(w1, w2).matrix]


def test_ram_cocycle_on_sl2(classical):
    datum = classical("SL", 2)
    s = datum.weyl_group().simple_reflection(0)
    assert check_ram_cocycle(datum, s, s)


@pytest.mark.parametrize("type_tag, n", [("SL", 3), ("SO", 5), ("GL", 3), ("PGL", 3)])
def test_ram_cocycle_on_every_pair(classical, type_tag, n):
    datum = classical(type_tag, n)
    elements = datum.weyl_group().elements
    assert all(check_ram_cocycle(datum, w1, w2) for w1 in elements for w2 in elements)


@pytest.mark.parametrize("type_tag, n", [("SL", 3), ("SO", 5), ("Sp", 6)])
def test_rtriviality_shadow(classical, type_tag, n):
    datum = classical(type_tag, n)
    triples = admissible_triples(datum)
    assert len(triples) >= datum.semisimple_rank
    assert all(rtriviality_shadow(datum, w, i, j) for w, i, j in triples)


def test_rtriviality_shadow_precondition(sl3):
    identity = sl3.weyl_group().identity
    assert rtriviality_shadow(sl3, identity, 0, 0)
    with pytest.raises(PreconditionError):
        rtriviality_shadow(sl3, identity, 0, 1)


def test_coroot_primitivity(classical):
    assert coroot_primitive(classical("SL", 2), (1,))
    assert not coroot_primitive(classical("PGL", 2), (2,))
    assert not coroot_primitive(classical("SO", 5), (0, 2))
    with pytest.raises(PreconditionError):
        coroot_primitive(classical("SL", 2), (0,))


@pytest.mark.parametrize(
    "type_tag, n, expected",
    [
        ("GL", 4, False),
        ("SL", 4, False),
        ("PGL", 2, True),
        ("PGL", 3, False),
        ("Sp", 4, False),
        ("SO", 5, True),
        ("SO", 6, False),
        ("SO", 7, True),
    ],
)
def test_nonprimitive_coroots(classical, type_tag, n, expected):
    assert has_nonprimitive_coroot(classical(type_tag, n)) is expected


@pytest.mark.parametrize("type_tag, n", BUILTIN_RANK3)
def test_coroot_primitivity_is_constant_on_weyl_orbits(classical, type_tag, n):
    datum = classical(type_tag, n)
    elements = datum.weyl_group().elements
    for coroot in datum.all_coroots:
        primitive = coroot_primitive(datum, coroot)
        assert all(coroot_primitive(datum, w.act_on_coroot(coroot)) is primitive for w in elements)


def test_dynkin_components(classical):
    assert dynkin_components(classical("SL", 4)) == [[0, 1, 2]]
    assert dynkin_components(classical("GL", 3)) == [[0, 1]]
    assert dynkin_components(classical("SO", 4)) == [[0], [1]]
    assert dynkin_components(classical("GL", 1)) == []


@pytest.mark.parametrize("type_tag, n", PRIMITIVITY_SCAN)
def test_so_odd_factor_matches_nonprimitive_coroots(classical, type_tag, n):
    datum = classical(type_tag, n)
    expected = (type_tag, n) in EXPECTED_NONPRIMITIVE
    assert so_odd_factor(datum) is expected
    assert has_nonprimitive_coroot(datum) is expected


def test_so_odd_factor_ignores_type_c(classical):
    # C3 has a double bond too, but its short end is not a leaf
    assert not so_odd_factor(classical("Sp", 6))
    assert so_odd_factor(classical("SO", 3))


def test_poincare_polynomial(sl3):
    assert poincare_polynomial(sl3) == [1, 2, 2, 1]


@pytest.mark.parametrize(
    "type_tag, n, expected",
    [
        ("GL", 1, [1]),
        ("GL", 3, [1, 2, 3]),
        ("SL", 2, [2]),
        ("SL", 3, [2, 3]),
        ("PGL", 4, [2, 3, 4]),
        ("Sp", 4, [2, 4]),
        ("SO", 4, [2, 2]),
        ("SO", 6, [2, 3, 4]),
        ("SO", 7, [2, 4, 6]),
    ],
)
def test_degrees(classical, type_tag, n, expected):
    assert degrees(classical(type_tag, n)) == expected


def test_cameral_stabilizers(sl3):
    group = sl3.weyl_group()
    e, s1, s2 = group.identity, group.simple_reflection(0), group.simple_reflection(1)
    rotation = group.product(s1, s2)
    cyclic = [e, rotation, group.product(rotation, rotation)]

    assert cameral_stabilizer_ok(sl3, [e, s1])
    assert not cameral_stabilizer_ok(sl3, cyclic)
    assert cameral_stabilizer_ok(sl3, group.elements)
    with pytest.raises(PreconditionError):
        cameral_stabilizer_ok(sl3, [e, s1, s2])


def test_parabolic_conjugacy(sl3):
    group = sl3.weyl_group()
    e, w0 = group.identity, group.longest_element()
    rotation = group.product(group.simple_reflection(0), group.simple_reflection(1))

    assert is_parabolic_conjugate(sl3, [e, w0])
    assert not is_parabolic_conjugate(sl3, [e, rotation, group.product(rotation, rotation)])
    assert is_parabolic_conjugate(sl3, group.elements)
