"""
Dimension bookkeeping for the Hitchin base and the generalized Prym.

Both sides are computed independently: the base from the degrees of the basic
invariants and Riemann-Roch on the curve, the Prym from the degree of the
Lie-algebra sheaf (p_* O (x) t)^W of a generic cameral cover.
"""

import logging
from typing import Optional

from .errors import InvalidCurveError, PreconditionError
from .rootdata import RootDatum, degrees

logger = logging.getLogger(__name__)

# Constants
"""
Generic-position assumptions every dimension row depends on.
"""
ASSUMPTIONS: tuple = (
    "generic section: the cameral cover has simple ramification along each D^alpha",
    "h0 of the non-central part of (p_* O (x) t)^W vanishes",
    "dimensions only: the finite isogeny between the torus sheaves is ignored",
)


class CurveSpec:
    """
    A curve X of genus g together with the line bundle K the Higgs field takes values in.

    Either K is canonical (g >= 2) or X is a projective line and K = O(k).
    """

    def __init__(self, genus: int, degree: Optional[int] = None):
        """
        Args:
            genus: Genus of the curve.
            degree: Degree of K on a genus-0 curve. None means K is canonical.
        """

        if genus < 0:
            raise InvalidCurveError(f"genus must be non-negative, got {genus}")
        if degree is None and genus < 2:
            raise InvalidCurveError(f"canonical K needs genus >= 2, got {genus}")
        if degree is not None and genus != 0:
            raise InvalidCurveError(f"an explicit degree is only supported on genus 0, got genus {genus}")

        self._genus = genus
        self._degree = degree

    @classmethod
    def canonical(cls, genus: int) -> "CurveSpec":
        return cls(genus)

    @classmethod
    def projective_line(cls, degree: int) -> "CurveSpec":
        return cls(0, degree)

    @property
    def genus(self) -> int:
        return self._genus

    @property
    def is_canonical(self) -> bool:
        return self._degree is None

    @property
    def degree_k(self) -> int:
        if self._degree is None:
            return 2 * self._genus - 2
        return self._degree

    def __repr__(self):
        bundle = "K" if self.is_canonical else f"O({self._degree})"
        return f"CurveSpec(g={self._genus}, {bundle})"

    def to_json(self) -> dict:
        return {
            "genus": self._genus,
            "bundle": "canonical" if self.is_canonical else "explicit",
            "degree": self.degree_k,
        }


def h0_of_power(curve: CurveSpec, d: int) -> int:
    """
    h^0(X, K^d).

    Args:
        curve: The curve and its bundle.
        d: Non-negative exponent.

    Returns:
        int

    Raises:
        PreconditionError: d is negative.
    """

    if d < 0:
        raise PreconditionError(f"exponent must be non-negative, got {d}")
    if d == 0:
        return 1

    if curve.is_canonical:
        g = curve.genus
        if d == 1:
            return g
        return (2 * d - 1) * (g - 1)

    return max(d * curve.degree_k + 1, 0)


def hitchin_dim(datum: RootDatum, curve: CurveSpec) -> int:
    """
    Dimension of the Hitchin base, the sum of h^0(K^d_i) over the degrees d_i.
    """

    return sum(h0_of_power(curve, d) for d in degrees(datum))


def cameral_genus(datum: RootDatum, curve: CurveSpec) -> int:
    """
    Genus of a generic cameral cover by Riemann-Hurwitz.

    Each root divisor D^alpha is the zero locus of alpha(v), a section of the
    pullback of K, so it has degree |W| deg K on the cover and s_alpha fixes it
    pointwise. Pairs of opposite roots share a divisor, giving
    2g~ - 2 = |W| (2g - 2) + |W| |positive roots| deg K.

    Raises:
        PreconditionError: The Euler characteristic is odd or the genus would be negative.
    """

    order = datum.weyl_group().order
    positive = len(datum.positive_roots)
    euler = order * ((2 * curve.genus - 2) + positive * curve.degree_k)
    if euler % 2:
        raise PreconditionError(f"{datum.label} on {curve}: 2g - 2 = {euler} is odd")
    genus = euler // 2 + 1
    if genus < 0:
        raise PreconditionError(f"{datum.label} on {curve}: negative cameral genus {genus}")
    return genus


def prym_dim(datum: RootDatum, curve: CurveSpec) -> int:
    """
    Dimension of H^1(X, (p_* O (x) t)^W) for a generic cameral cover.

    The sheaf splits into the central part, z copies of O_X contributing z g,
    and the semisimple part, of degree -|positive roots| deg K with no global
    sections. Riemann-Roch on the semisimple part gives
    |positive roots| (2g - 2) + r' (g - 1).

    Raises:
        PreconditionError: K is not canonical.
    """

    if not curve.is_canonical:
        raise PreconditionError(f"the Prym dimension is computed for canonical K only, got {curve}")

    g = curve.genus
    positive = len(datum.positive_roots)
    return datum.central_rank * g + positive * (2 * g - 2) + datum.semisimple_rank * (g - 1)


def prym_equals_hitchin(datum: RootDatum, g: int) -> bool:
    curve = CurveSpec.canonical(g)
    return prym_dim(datum, curve) == hitchin_dim(datum, curve)


def dimension_row(datum: RootDatum, g: int) -> dict:
    """
    One table row for a datum on a genus-g curve with canonical K.

    Returns:
        dict: datum label, g, both dimensions, cameral genus, the equality flag and assumptions.
    """

    curve = CurveSpec.canonical(g)
    hitchin = hitchin_dim(datum, curve)
    prym = prym_dim(datum, curve)
    if hitchin != prym:
        logger.warning(f"{datum.label}, g={g}: hitchin {hitchin} != prym {prym}")

    return {
        "datum": datum.label,
        "g": g,
        "hitchin_dim": hitchin,
        "prym_dim": prym,
        "cameral_genus": cameral_genus(datum, curve),
        "equal": hitchin == prym,
        "assumptions": list(ASSUMPTIONS),
    }
