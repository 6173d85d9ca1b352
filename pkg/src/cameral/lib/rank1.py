"""
SL(2) and PGL(2) Higgs data on a double cover, checked on divisor classes.

The cameral cover is the hyperelliptic curve y^2 = f(x) over its x-line, W = Z/2
acts by the involution, and the ramification divisor is the Weierstrass divisor.
"""

import logging
from typing import NamedTuple

from .errors import InternalConsistencyError, PreconditionError, UnsupportedFamilyError
from .hyperelliptic import (
    HyperCurve,
    PicClass,
    cantor_add,
    count_classes_by_places,
    infinity_class,
    jacobian_elements,
    multiply,
    pic_add,
    pic_multiply,
    ramification_class,
    sigma_pullback,
)
from .rootdata import build_classical, coroot_primitive

logger = logging.getLogger(__name__)


def picard_elements(curve: HyperCurve, degree: int) -> list:
    """
    Pic^degree of the curve, as translates of degree times infinity.
    """

    return [PicClass(degree, m) for m in jacobian_elements(curve)]


def satisfies_sl2(curve: HyperCurve, line: PicClass) -> bool:
    """
    L + sigma^*L equals the ramification class.
    """

    return pic_add(curve, line, sigma_pullback(curve, line)) == ramification_class(curve)


def sl2_solutions(curve: HyperCurve) -> list:
    """
    Line bundles L of degree g+1 with L + sigma^*L = [D].

    Raises:
        BudgetExceededError: the Jacobian is too large to enumerate.
    """

    ramification = ramification_class(curve)
    solutions = [
        line
        for line in picard_elements(curve, curve.genus + 1)
        if pic_add(curve, line, sigma_pullback(curve, line)) == ramification
    ]
    logger.debug(f"{curve}: {len(solutions)} SL(2) solutions")
    return solutions


class TorsorReport(NamedTuple):
    jacobian_order: int
    solutions: int
    free: bool
    transitive: bool

    @property
    def ok(self) -> bool:
        return self.free and self.transitive

    def to_json(self) -> dict:
        return {**self._asdict(), "torsor_ok": self.ok}


def torsor_check(curve: HyperCurve) -> TorsorReport:
    """
    Jac(F_q) acts simply transitively on the SL(2) solutions by L -> L + m.

    For each solution L the orbit map m -> L + m must be a bijection onto the
    solution set.
    """

    jacobian = jacobian_elements(curve)
    solutions = sl2_solutions(curve)
    solution_set = set(solutions)

    free, transitive = True, True
    for line in solutions:
        orbit = [PicClass(line.degree, cantor_add(curve, line.divisor, m)) for m in jacobian]
        if len(set(orbit)) != len(orbit):
            free = False
        if set(orbit) != solution_set:
            transitive = False

    return TorsorReport(len(jacobian), len(solutions), free and bool(solutions), transitive and bool(solutions))


def norm_degree(curve: HyperCurve, line: PicClass) -> int:
    """
    The pushforward of a divisor to the x-line, read in Pic(P^1) = Z.

    A Mumford pair (u, v) pushes forward to the zeros of u and infinity to the
    point at infinity, so the degree is preserved.
    """

    return line.degree


def pullback_from_base(curve: HyperCurve, degree: int) -> PicClass:
    """
    Pullback of O(degree) on the x-line. The point at infinity is a branch point,
    so one base point pulls back to twice infinity.
    """

    return pic_multiply(curve, infinity_class(curve, 2), degree)


def det_pushforward_identity(curve: HyperCurve, line: PicClass) -> bool:
    """
    p^*(det p_* L) + [D] = L + sigma^*L, with det p_*O of degree -(g+1).
    """

    determinant = norm_degree(curve, line) - (curve.genus + 1)
    left = pic_add(curve, pullback_from_base(curve, determinant), ramification_class(curve))
    right = pic_add(curve, line, sigma_pullback(curve, line))
    return left == right


def pgl2_from_sl2(curve: HyperCurve, line: PicClass) -> PicClass:
    """
    L = (L^1)^2 for an SL(2) solution L^1; L + sigma^*L = 2[D].

    Raises:
        PreconditionError: L^1 is not an SL(2) solution.
    """

    if not satisfies_sl2(curve, line):
        raise PreconditionError(f"{line.to_json()} is not an SL(2) solution")

    square = pic_multiply(curve, line, 2)
    target = pic_multiply(curve, ramification_class(curve), 2)
    if pic_add(curve, square, sigma_pullback(curve, square)) != target:
        raise InternalConsistencyError("square of an SL(2) solution fails the PGL(2) condition")
    return square


def pgl2_image_report(curve: HyperCurve) -> dict:
    """
    Image of L^1 -> (L^1)^2 against the 2-torsion of the Jacobian.

    Squares of two solutions agree exactly when they differ by Jac[2]; the base
    P^1 has no 2-torsion to absorb, so |image| * |Jac[2]| = |solutions|.
    """

    solutions = sl2_solutions(curve)
    image = {pgl2_from_sl2(curve, line) for line in solutions}
    two_torsion = [m for m in jacobian_elements(curve) if multiply(curve, m, 2).is_identity()]
    return {
        "solutions": len(solutions),
        "image": len(image),
        "jacobian_2_torsion": len(two_torsion),
        "base_2_torsion": 1,
        "consistent": len(image) * len(two_torsion) == len(solutions),
    }


def _rank_one_datum(type_tag: str):
    if type_tag not in ("SL", "PGL"):
        raise UnsupportedFamilyError(f"rank-1 experiments support SL and PGL, got {type_tag}")
    return build_classical(type_tag, 2)


def _anti_invariant_constants(curve: HyperCurve) -> list:
    """
    Constants c in G_m(F_q) with sigma^*c = c^-1, i.e. c^2 = 1.
    """

    return [c for c in range(1, curve.q) if c * c % curve.q == 1]


def automorphism_count(curve: HyperCurve, type_tag: str) -> int:
    """
    Global sections of the torus sheaf: sigma-anti-invariant constants t with
    alpha(t) = +1 on the ramification divisor.
    """

    datum = _rank_one_datum(type_tag)
    alpha = datum.simple_roots[0][0]
    q = curve.q
    return sum(1 for c in _anti_invariant_constants(curve) if pow(c, alpha % (q - 1), q) == 1)


def condition_star_quotient(curve: HyperCurve, type_tag: str) -> int:
    """
    Order of the quotient of all anti-invariant constants by those satisfying (*).

    2 for PGL(2), whose coroot is twice a cocharacter; 1 for SL(2).
    """

    datum = _rank_one_datum(type_tag)
    quotient = len(_anti_invariant_constants(curve)) // automorphism_count(curve, type_tag)
    primitive = coroot_primitive(datum, datum.simple_coroots[0])
    if (quotient == 1) != primitive:
        raise InternalConsistencyError(
            f"{datum.label}: quotient {quotient} disagrees with coroot primitivity {primitive}"
        )
    return quotient


def higgs_obstruction_vanishes(curve: HyperCurve) -> dict:
    """
    The SL(2) obstruction class vanishes iff the solution set is non-empty;
    (g+1) infinity is always a witness.
    """

    witness = infinity_class(curve, curve.genus + 1)
    witness_ok = satisfies_sl2(curve, witness)
    return {
        "vanishes": witness_ok,
        "witness": witness.to_json(),
    }


def rank1_report(curve: HyperCurve) -> dict:
    """
    The full rank-1 experiment on one curve.
    """

    jacobian = jacobian_elements(curve)
    solutions = sl2_solutions(curve)
    torsor = torsor_check(curve)
    det_ok = all(det_pushforward_identity(curve, line) for line in picard_elements(curve, curve.genus + 1))
    sigma_is_negation = all(
        cantor_add(curve, m, sigma_pullback(curve, PicClass(0, m)).divisor).is_identity() for m in jacobian
    )

    report = {
        **curve.to_json(),
        "jacobian_order": len(jacobian),
        "solutions": len(solutions),
        "torsor_ok": torsor.ok,
        "det_identity_ok": det_ok,
        "sigma_is_negation": sigma_is_negation,
        "pgl2": pgl2_image_report(curve),
        "condition_star_quotient": {
            "SL": condition_star_quotient(curve, "SL"),
            "PGL": condition_star_quotient(curve, "PGL"),
        },
        "automorphisms": {
            "SL": automorphism_count(curve, "SL"),
            "PGL": automorphism_count(curve, "PGL"),
        },
        "obstruction": higgs_obstruction_vanishes(curve),
    }
    if curve.genus <= 2:
        report["place_count"] = count_classes_by_places(curve)
    return report
