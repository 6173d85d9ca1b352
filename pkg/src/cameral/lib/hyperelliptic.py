"""
Divisor classes on odd-degree hyperelliptic curves y^2 = f(x) over a prime field.

Polynomials are sympy galoistools lists (highest degree first, entries in
0..q-1). A reduced divisor is a Mumford pair (u, v): u monic, deg v < deg u <= g,
u | v^2 - f. The point at infinity is a single rational Weierstrass point.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from sympy import Poly, isprime, sympify, symbols
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_add,
    gf_degree,
    gf_eval,
    gf_from_int_poly,
    gf_gcdex,
    gf_monic,
    gf_mul,
    gf_neg,
    gf_pow_mod,
    gf_quo,
    gf_rem,
    gf_sqf_p,
    gf_sqr,
    gf_sub,
)

from .errors import BudgetExceededError, CurveMismatchError, InvalidCurveError, PreconditionError

logger = logging.getLogger(__name__)

# Constants
"""
Default bound on Mumford candidates (u, v) examined while enumerating a Jacobian.
"""
DEFAULT_MAX_ENUM: int = 10**6


class HyperCurve:
    """
    y^2 = f(x) with f squarefree of odd degree 2g+1 over F_q, q an odd prime.
    """

    def __init__(self, q: int, f: list, max_enum: int = DEFAULT_MAX_ENUM):
        """
        Args:
            q: Field size. Must be an odd prime.
            f: Coefficients of f, highest degree first.
            max_enum: Bound on the candidates examined by enumerations.
        """

        if not isprime(q) or q == 2:
            raise InvalidCurveError(f"field size must be an odd prime, got {q}")
        f = gf_from_int_poly([int(c) for c in f], q)
        degree = gf_degree(f)
        if degree < 1 or degree % 2 == 0:
            raise InvalidCurveError(f"f must have odd degree, got degree {degree}")
        if not gf_sqf_p(f, q, ZZ):
            raise InvalidCurveError("f is not squarefree over F_q")

        self._q = q
        self._f = tuple(f)
        self._genus = (degree - 1) // 2
        self._max_enum = max_enum
        self._points = None

    @classmethod
    def from_expression(cls, q: int, expression: str, max_enum: int = DEFAULT_MAX_ENUM) -> "HyperCurve":
        x = symbols("x")
        coefficients = Poly(sympify(expression), x).all_coeffs()
        return cls(q, [int(c) for c in coefficients], max_enum)

    @property
    def q(self) -> int:
        return self._q

    @property
    def f(self) -> list:
        return list(self._f)

    @property
    def genus(self) -> int:
        return self._genus

    @property
    def max_enum(self) -> int:
        return self._max_enum

    @property
    def key(self) -> tuple:
        return (self._q, self._f)

    def __eq__(self, other) -> bool:
        return isinstance(other, HyperCurve) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self):
        x = symbols("x")
        expression = Poly(list(self._f), x).as_expr()
        return f"y^2 = {expression} over F_{self._q}"

    @property
    def identity(self) -> "MumfordDivisor":
        return MumfordDivisor(self.key, (1,), ())

    def rational_points(self) -> list:
        """
        Affine F_q-points (a, b) with b^2 = f(a).
        """

        if self._points is None:
            q = self._q
            squares = {}
            for b in range(q):
                squares.setdefault(b * b % q, []).append(b)
            self._points = [
                (a, b)
                for a in range(q)
                for b in squares.get(gf_eval(list(self._f), a, q, ZZ), [])
            ]
        return self._points

    def to_json(self) -> dict:
        return {"q": self._q, "f": list(self._f), "genus": self._genus}


@dataclass(frozen=True)
class MumfordDivisor:
    curve_key: tuple
    u: tuple
    v: tuple

    @property
    def degree(self) -> int:
        return gf_degree(list(self.u))

    def is_identity(self) -> bool:
        return self.u == (1,) and not self.v

    def to_json(self) -> dict:
        return {"u": list(self.u), "v": list(self.v)}


def _make(curve: HyperCurve, u: list, v: list) -> MumfordDivisor:
    return MumfordDivisor(curve.key, tuple(u), tuple(v))


def _require_same(curve: HyperCurve, *divisors) -> None:
    for d in divisors:
        if d.curve_key != curve.key:
            raise CurveMismatchError(f"divisor {d.to_json()} does not live on {curve}")


def is_semi_reduced(curve: HyperCurve, u: list, v: list) -> bool:
    q = curve.q
    if not u or u[0] != 1:
        return False
    return not gf_rem(gf_sub(gf_sqr(v, q, ZZ), curve.f, q, ZZ), u, q, ZZ)


def reduce_divisor(curve: HyperCurve, u: list, v: list) -> MumfordDivisor:
    """
    Reduce a semi-reduced pair until deg u <= g.
    """

    q, f, g = curve.q, curve.f, curve.genus
    v = gf_rem(v, u, q, ZZ)
    while gf_degree(u) > g:
        u = gf_quo(gf_sub(f, gf_sqr(v, q, ZZ), q, ZZ), u, q, ZZ)
        _, u = gf_monic(u, q, ZZ)
        v = gf_rem(gf_neg(v, q, ZZ), u, q, ZZ)
    return _make(curve, u, v)


def cantor_add(curve: HyperCurve, a: MumfordDivisor, b: MumfordDivisor) -> MumfordDivisor:
    """
    Cantor composition followed by reduction.

    Args:
        curve: The curve both divisors live on.
        a: First reduced divisor.
        b: Second reduced divisor.

    Returns:
        MumfordDivisor
    """

    _require_same(curve, a, b)
    q, f = curve.q, curve.f
    u1, v1, u2, v2 = list(a.u), list(a.v), list(b.u), list(b.v)

    e1, e2, d1 = gf_gcdex(u1, u2, q, ZZ)
    c1, c2, d = gf_gcdex(d1, gf_add(v1, v2, q, ZZ), q, ZZ)
    s1 = gf_mul(c1, e1, q, ZZ)
    s2 = gf_mul(c1, e2, q, ZZ)

    u = gf_quo(gf_mul(u1, u2, q, ZZ), gf_sqr(d, q, ZZ), q, ZZ)
    numerator = gf_add(
        gf_add(
            gf_mul(gf_mul(s1, u1, q, ZZ), v2, q, ZZ),
            gf_mul(gf_mul(s2, u2, q, ZZ), v1, q, ZZ),
            q,
            ZZ,
        ),
        gf_mul(c2, gf_add(gf_mul(v1, v2, q, ZZ), f, q, ZZ), q, ZZ),
        q,
        ZZ,
    )
    v = gf_rem(gf_quo(numerator, d, q, ZZ), u, q, ZZ)
    return reduce_divisor(curve, u, v)


def negate(curve: HyperCurve, a: MumfordDivisor) -> MumfordDivisor:
    _require_same(curve, a)
    return _make(curve, list(a.u), gf_neg(list(a.v), curve.q, ZZ))


def multiply(curve: HyperCurve, a: MumfordDivisor, k: int) -> MumfordDivisor:
    if k < 0:
        return multiply(curve, negate(curve, a), -k)
    result, base = curve.identity, a
    while k:
        if k & 1:
            result = cantor_add(curve, result, base)
        base = cantor_add(curve, base, base)
        k >>= 1
    return result


def point_divisor(curve: HyperCurve, point: tuple) -> MumfordDivisor:
    """
    The class of P - infinity for an affine rational point P.
    """

    a, b = point
    q = curve.q
    if (b * b - gf_eval(curve.f, a, q, ZZ)) % q:
        raise PreconditionError(f"{point} is not on {curve}")
    return _make(curve, [1, (-a) % q], [b % q] if b % q else [])


@dataclass(frozen=True)
class PicClass:
    """
    A line bundle class of degree d, stored as its difference with d times infinity.
    """

    degree: int
    divisor: MumfordDivisor

    def to_json(self) -> dict:
        return {"degree": self.degree, **self.divisor.to_json()}


def pic_add(curve: HyperCurve, a: PicClass, b: PicClass) -> PicClass:
    return PicClass(a.degree + b.degree, cantor_add(curve, a.divisor, b.divisor))


def pic_multiply(curve: HyperCurve, a: PicClass, k: int) -> PicClass:
    return PicClass(k * a.degree, multiply(curve, a.divisor, k))


def infinity_class(curve: HyperCurve, degree: int) -> PicClass:
    return PicClass(degree, curve.identity)


def sigma_pullback(curve: HyperCurve, c: PicClass) -> PicClass:
    """
    Pullback along the hyperelliptic involution (x, y) -> (x, -y).

    Infinity is fixed, and (u, v) goes to (u, -v).
    """

    _require_same(curve, c.divisor)
    return PicClass(c.degree, _make(curve, list(c.divisor.u), gf_neg(list(c.divisor.v), curve.q, ZZ)))


def _monic_polynomials(q: int, degree: int):
    for tail in product(range(q), repeat=degree):
        yield [1] + list(tail)


@lru_cache(maxsize=32)
def jacobian_elements(curve: HyperCurve) -> tuple:
    """
    Every reduced Mumford pair, i.e. the F_q-points of the Jacobian.

    Raises:
        BudgetExceededError: more than max_enum candidates would be examined.
    """

    q, g = curve.q, curve.genus
    candidates = sum(q ** (2 * d) for d in range(g + 1))
    if candidates > curve.max_enum:
        raise BudgetExceededError(
            f"{candidates} Mumford candidates for {curve} exceed the budget {curve.max_enum}; "
            "use a smaller q or genus"
        )

    elements = []
    for degree in range(g + 1):
        for u in _monic_polynomials(q, degree):
            for coefficients in product(range(q), repeat=degree):
                v = list(coefficients)
                while v and v[0] == 0:
                    v.pop(0)
                if is_semi_reduced(curve, u, v):
                    elements.append(_make(curve, u, v))

    logger.debug(f"{curve}: |Jac(F_q)| = {len(elements)}")
    return tuple(elements)


def _non_residue(q: int) -> int:
    return next(n for n in range(2, q) if pow(n, (q - 1) // 2, q) == q - 1)


def count_classes_by_places(curve: HyperCurve) -> int:
    """
    |Jac(F_q)| from places of degree one and two, without Mumford enumeration.

    Reduced divisors of degree <= g are effective divisors supported on affine
    places that never contain P + sigma(P) for a rational P. For g <= 2 they are
    0, single rational points, pairs of rational points, and degree-two places
    whose x-coordinate lies outside F_q.
    """

    g, q = curve.genus, curve.q
    if g > 2:
        raise PreconditionError(f"place count is implemented for genus <= 2, got {g}")

    points = curve.rational_points()
    affine = len(points)
    weierstrass = sum(1 for _, b in points if b == 0)
    total = 1 + affine
    if g < 2:
        return total

    pairs = affine * (affine + 1) // 2 - (affine - weierstrass) // 2 - weierstrass

    modulus = [1, 0, (-_non_residue(q)) % q]
    exponent = (q * q - 1) // 2
    quadratic_points = 0
    for c1 in range(1, q):
        for c0 in range(q):
            alpha = [c1, c0]
            value = []
            for c in curve.f:
                value = gf_rem(gf_add(gf_mul(value, alpha, q, ZZ), [c] if c else [], q, ZZ), modulus, q, ZZ)
            if not value:
                quadratic_points += 1
            elif gf_pow_mod(value, exponent, modulus, q, ZZ) == [1]:
                quadratic_points += 2

    return total + pairs + quadratic_points // 2


def ramification_class(curve: HyperCurve) -> PicClass:
    """
    Class of the Weierstrass divisor: the roots of f and infinity, of degree 2g+2.

    Obtained by reducing the semi-reduced pair (f/lc, 0).
    """

    _, u = gf_monic(curve.f, curve.q, ZZ)
    return PicClass(2 * curve.genus + 2, reduce_divisor(curve, u, []))


def first_curve(q: int, genus: int, max_enum: int = DEFAULT_MAX_ENUM) -> HyperCurve:
    """
    The first squarefree f = x^(2g+1) + a x + b, scanning b = 1..q-1 then a = 0..q-1.

    Raises:
        InvalidCurveError: no trinomial of that shape is squarefree over F_q.
    """

    if genus < 1:
        raise InvalidCurveError(f"genus must be positive, got {genus}")
    for b in range(1, q):
        for a in range(q):
            f = [1] + [0] * (2 * genus - 1) + [a, b]
            try:
                return HyperCurve(q, f, max_enum)
            except InvalidCurveError:
                if not isprime(q) or q == 2:
                    raise
    raise InvalidCurveError(f"no squarefree x^{2 * genus + 1} + a x + b over F_{q}")
