"""
Spectral and cameral covers for GL(n) through universal splitting algebras.

A spectral cover is the algebra B[Y]/(p) for a monic p of degree n over the
base ring B (rationals, or polynomials in one variable over the rationals).
Its splitting algebra adjoins an ordering x_1..x_n of the roots; it is free
of rank n! with basis x_1^e_1 ... x_n^e_n, 0 <= e_k <= n-k, and S_n permutes
the x_k. The spectral coordinate is x_1 throughout.
"""

import logging
import random
from functools import lru_cache
from itertools import permutations, product
from typing import NamedTuple

from sympy import Rational, factorial, sympify, symbols
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement, ring

from .errors import InternalConsistencyError, NotACocycleError, PreconditionError
from .gcohom import Cochain, FiniteGroupTable, GModule, is_coboundary

logger = logging.getLogger(__name__)

# Constants
"""
Name of the base parameter when covers vary over the affine line.
"""
BASE_PARAMETER: str = "t"


def base_domain(parameter: str = None):
    """
    QQ, or QQ[parameter] for a cover over the affine line.
    """

    return QQ if parameter is None else QQ[symbols(parameter)]


def _convert(domain, value):
    if isinstance(value, PolyElement) and value.ring == getattr(domain, "ring", None):
        return value
    return domain.from_sympy(sympify(value))


class SpectralAlgebra:
    """
    B[Y] / (Y^n + a_{n-1} Y^{n-1} + ... + a_0).
    """

    def __init__(self, n: int, coefficients: list, domain=QQ):
        if n < 1:
            raise PreconditionError(f"cover degree must be positive, got {n}")
        if len(coefficients) != n:
            raise PreconditionError(f"{len(coefficients)} coefficients for a degree {n} cover")

        self._n = n
        self._domain = domain
        self._coefficients = tuple(_convert(domain, a) for a in coefficients)
        self._ring, self._y = ring("Y", domain, lex)
        self._poly = self._y**n + sum(
            ((self._y**i).mul_ground(a) for i, a in enumerate(self._coefficients)), self._ring.zero
        )

    @property
    def n(self) -> int:
        return self._n

    @property
    def domain(self):
        return self._domain

    @property
    def coefficients(self) -> tuple:
        return self._coefficients

    @property
    def ring(self):
        return self._ring

    @property
    def generator(self) -> PolyElement:
        return self._y

    @property
    def char_poly(self) -> PolyElement:
        return self._poly

    @property
    def key(self) -> tuple:
        return (self._n, str(self._domain), tuple(str(a) for a in self._coefficients))

    def __eq__(self, other) -> bool:
        return isinstance(other, SpectralAlgebra) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def reduce(self, f: PolyElement) -> PolyElement:
        return f.rem(self._poly)

    def mul(self, f: PolyElement, g: PolyElement) -> PolyElement:
        return self.reduce(f * g)

    def coordinates(self, f: PolyElement) -> list:
        f = self.reduce(f)
        return [f.get((i,), self._domain.zero) for i in range(self._n)]

    def element(self, coordinates: list) -> PolyElement:
        return sum(
            ((self._y**i).mul_ground(_convert(self._domain, c)) for i, c in enumerate(coordinates)),
            self._ring.zero,
        )

    def multiplication_matrix(self, f: PolyElement) -> DomainMatrix:
        columns = [self.coordinates(f * self._y**j) for j in range(self._n)]
        rows = [[columns[j][i] for j in range(self._n)] for i in range(self._n)]
        return DomainMatrix(rows, (self._n, self._n), self._domain)

    def companion_matrix(self) -> DomainMatrix:
        return self.multiplication_matrix(self._y)

    def specialize(self, value) -> "SpectralAlgebra":
        """
        Evaluate the coefficients at a point of the base line.
        """

        if not self._domain.is_PolynomialRing:
            raise PreconditionError("only covers over a polynomial base can be specialized")
        parameter = self._domain.symbols[0]
        values = [self._domain.to_sympy(a).subs(parameter, sympify(value)) for a in self._coefficients]
        return SpectralAlgebra(self._n, values, QQ)

    def to_json(self) -> dict:
        return {
            "n": self._n,
            "base": str(self._domain),
            "coefficients": [str(self._domain.to_sympy(a)) for a in self._coefficients],
        }


def spectral_from_coeffs(n: int, coefficients: list, domain=QQ) -> SpectralAlgebra:
    return SpectralAlgebra(n, coefficients, domain)


def random_cover(n: int, rng: random.Random, parameter: str = None) -> SpectralAlgebra:
    """
    Coefficients drawn from small rationals, or linear polynomials in the base parameter.
    """

    domain = base_domain(parameter)
    coefficients = []
    for _ in range(n):
        value = Rational(rng.randint(-4, 4), rng.randint(1, 3))
        if parameter is not None:
            value = value + rng.randint(-2, 2) * symbols(parameter)
        coefficients.append(value)
    return SpectralAlgebra(n, coefficients, domain)


def random_element(spectral: SpectralAlgebra, rng: random.Random) -> PolyElement:
    """
    An element of B[Y]/(p) with small rational coordinates.
    """

    return spectral.element([Rational(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(spectral.n)])


def _compose(sigma: tuple, tau: tuple) -> tuple:
    return tuple(sigma[tau[i]] for i in range(len(tau)))


class SplittingAlgebra:
    """
    The universal algebra of orderings x_1..x_n of the sheets of a spectral cover.
    """

    def __init__(self, spectral: SpectralAlgebra):
        n = spectral.n
        self._spectral = spectral
        self._n = n
        names = [f"x{k}" for k in range(n, 0, -1)]
        self._ring, *gens = ring(names, spectral.domain, lex)
        self._x = list(reversed(gens))

        current = [self._ring.ground_new(a) for a in spectral.coefficients] + [self._ring.one]
        relations = []
        for k in range(n):
            xk = self._x[k]
            relations.append(sum((c * xk**j for j, c in enumerate(current)), self._ring.zero))
            quotient = [None] * (len(current) - 1)
            carry = self._ring.zero
            for j in range(len(current) - 1, 0, -1):
                carry = current[j] + xk * carry
                quotient[j - 1] = carry
            current = quotient
        self._relations = relations

        self._basis_exponents = [
            tuple(e[n - 1 - pos] for pos in range(n))
            for e in product(*[range(n - k) for k in range(n)])
        ]
        self._position = {m: i for i, m in enumerate(self._basis_exponents)}
        self._basis = [self._ring({m: self._ring.domain.one}) for m in self._basis_exponents]
        self._permutations = list(permutations(range(n)))
        self._action_matrices = {}

        logger.debug(f"splitting algebra of degree {n}: rank {len(self._basis)}")

    @property
    def n(self) -> int:
        return self._n

    @property
    def spectral(self) -> SpectralAlgebra:
        return self._spectral

    @property
    def domain(self):
        return self._spectral.domain

    @property
    def ring(self):
        return self._ring

    @property
    def rank(self) -> int:
        return len(self._basis)

    @property
    def basis(self) -> list:
        return self._basis

    @property
    def relations(self) -> list:
        return self._relations

    @property
    def permutations(self) -> list:
        return self._permutations

    def x(self, k: int) -> PolyElement:
        """
        The root x_k, 1-based.
        """

        return self._x[k - 1]

    def reduce(self, f: PolyElement) -> PolyElement:
        reduced = f.rem(self._relations)
        for monom in reduced.keys():
            if monom not in self._position:
                raise InternalConsistencyError(f"reduction left the monomial {monom} outside the basis")
        return reduced

    def coordinates(self, f: PolyElement) -> list:
        reduced = self.reduce(f)
        coordinates = [self.domain.zero] * self.rank
        for monom, coeff in reduced.items():
            coordinates[self._position[monom]] = coeff
        return coordinates

    def element(self, coordinates: list) -> PolyElement:
        return self._ring(
            {m: c for m, c in zip(self._basis_exponents, coordinates) if c}
        )

    def parse(self, expression) -> PolyElement:
        if isinstance(expression, PolyElement):
            return expression
        return self._ring.from_expr(sympify(expression))

    def mul(self, f: PolyElement, g: PolyElement) -> PolyElement:
        return self.reduce(f * g)

    def act(self, sigma: tuple, f: PolyElement) -> PolyElement:
        """
        Substitute x_k -> x_sigma(k) and reduce.
        """

        n = self._n
        terms = {}
        for monom, coeff in f.items():
            moved = [0] * n
            for pos, e in enumerate(monom):
                moved[n - 1 - sigma[n - 1 - pos]] += e
            moved = tuple(moved)
            terms[moved] = terms.get(moved, self.domain.zero) + coeff
        return self.reduce(self._ring({m: c for m, c in terms.items() if c}))

    def action_matrix(self, sigma: tuple) -> DomainMatrix:
        if sigma not in self._action_matrices:
            columns = [self.coordinates(self.act(sigma, b)) for b in self._basis]
            rows = [[columns[j][i] for j in range(self.rank)] for i in range(self.rank)]
            self._action_matrices[sigma] = DomainMatrix(rows, (self.rank, self.rank), self.domain)
        return self._action_matrices[sigma]

    def transposition(self, i: int, j: int) -> tuple:
        """
        The permutation swapping x_i and x_j, 1-based.
        """

        if not (1 <= i <= self._n and 1 <= j <= self._n) or i == j:
            raise PreconditionError(f"({i} {j}) is not a transposition of S_{self._n}")
        sigma = list(range(self._n))
        sigma[i - 1], sigma[j - 1] = sigma[j - 1], sigma[i - 1]
        return tuple(sigma)

    def stabilizer(self, k: int = 1) -> list:
        return [sigma for sigma in self._permutations if sigma[k - 1] == k - 1]

    def symmetric_group(self) -> FiniteGroupTable:
        index = {sigma: a for a, sigma in enumerate(self._permutations)}
        table = [[index[_compose(s, t)] for t in self._permutations] for s in self._permutations]
        generators = [index[self.transposition(i, i + 1)] for i in range(1, self._n)]
        return FiniteGroupTable(table, 0, generators, self._permutations)

    def to_json(self) -> dict:
        return {
            "spectral": self._spectral.to_json(),
            "rank": self.rank,
            "basis": [str(b.as_expr()) for b in self._basis],
            "relations": [str(r.as_expr()) for r in self._relations],
        }


@lru_cache(maxsize=64)
def splitting_algebra(spectral: SpectralAlgebra) -> SplittingAlgebra:
    return SplittingAlgebra(spectral)


def specialize(alg: SplittingAlgebra, value) -> SplittingAlgebra:
    return splitting_algebra(alg.spectral.specialize(value))


def normal_form(alg: SplittingAlgebra, f) -> list:
    """
    Coordinates of a polynomial in x_1..x_n on the monomial basis.
    """

    return alg.coordinates(alg.parse(f))


def multiplication_table(alg: SplittingAlgebra) -> list:
    table = []
    for i, a in enumerate(alg.basis):
        for j, b in enumerate(alg.basis):
            table.append(
                {
                    "left": i,
                    "right": j,
                    "product": [str(alg.domain.to_sympy(c)) for c in alg.coordinates(a * b)],
                }
            )
    return table


def s_n_action(alg: SplittingAlgebra, sigma: tuple, f) -> list:
    return alg.coordinates(alg.act(tuple(sigma), alg.parse(f)))


def elementary_symmetric_check(alg: SplittingAlgebra) -> bool:
    """
    e_i(x_1..x_n) reduces to (-1)^i a_{n-i} for every i.
    """

    n = alg.n
    elementary = [alg.ring.one] + [alg.ring.zero] * n
    for k in range(1, n + 1):
        for i in range(k, 0, -1):
            elementary[i] = elementary[i] + alg.x(k) * elementary[i - 1]

    coefficients = alg.spectral.coefficients
    for i in range(1, n + 1):
        expected = alg.ring.ground_new(coefficients[n - i]) * (-1) ** i
        if alg.reduce(elementary[i]) != expected:
            logger.debug(f"e_{i} does not reduce to (-1)^{i} a_{n - i}")
            return False
    return True


def _require_field(alg: SplittingAlgebra) -> None:
    if not alg.domain.is_Field:
        raise PreconditionError(f"this check needs a field base; specialize the {alg.domain} cover first")


def _solve_in_span(columns: list, vector: list, domain):
    """
    Coefficients expressing `vector` in the span of `columns`, or None.
    """

    size = len(vector)
    rows = [[column[i] for column in columns] + [vector[i]] for i in range(size)]
    reduced, pivots = DomainMatrix(rows, (size, len(columns) + 1), domain).rref()
    if len(columns) in pivots:
        return None
    reduced = reduced.to_Matrix()
    solution = [domain.zero] * len(columns)
    for r, j in enumerate(pivots):
        solution[j] = domain.from_sympy(reduced[r, len(columns)])
    return solution


def _rank(vectors: list, domain) -> int:
    if not vectors:
        return 0
    return DomainMatrix([list(v) for v in vectors], (len(vectors), len(vectors[0])), domain).rank()


class InvariantSubalgebra(NamedTuple):
    basis: list
    inclusion: list
    structure: dict

    @property
    def rank(self) -> int:
        return len(self.basis)

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "basis": [str(b.as_expr()) for b in self.basis],
        }


def invariant_subalgebra(alg: SplittingAlgebra, subgroup: list) -> InvariantSubalgebra:
    """
    Fixed subalgebra of a subgroup of S_n with its induced multiplication.

    Args:
        alg: Splitting algebra over a field.
        subgroup: Permutations (tuples of images, 0-based).

    Returns:
        InvariantSubalgebra

    Raises:
        InternalConsistencyError: the fixed space is not closed under multiplication.
    """

    _require_field(alg)
    domain = alg.domain
    size = alg.rank

    stacked = []
    for sigma in subgroup:
        matrix = alg.action_matrix(tuple(sigma)).to_Matrix()
        for i in range(size):
            stacked.append(
                [domain.from_sympy(matrix[i, j] - (1 if i == j else 0)) for j in range(size)]
            )

    if stacked:
        kernel = DomainMatrix(stacked, (len(stacked), size), domain).nullspace().to_Matrix()
        inclusion = [[domain.from_sympy(kernel[r, c]) for c in range(size)] for r in range(kernel.rows)]
    else:
        inclusion = [[domain.one if i == j else domain.zero for j in range(size)] for i in range(size)]

    basis = [alg.element(v) for v in inclusion]
    structure = {}
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            coordinates = _solve_in_span(inclusion, alg.coordinates(a * b), domain)
            if coordinates is None:
                raise InternalConsistencyError("fixed subspace is not closed under multiplication")
            structure[(i, j)] = coordinates

    return InvariantSubalgebra(basis, inclusion, structure)


class RoundtripReport(NamedTuple):
    spectral_isomorphic: bool
    splitting_isomorphic: bool

    @property
    def ok(self) -> bool:
        return self.spectral_isomorphic and self.splitting_isomorphic

    def to_json(self) -> dict:
        return {**self._asdict(), "ok": self.ok}


def _spectral_matches(spectral: SpectralAlgebra, alg: SplittingAlgebra, invariants: InvariantSubalgebra) -> bool:
    n = spectral.n
    if invariants.rank != n:
        logger.debug(f"Stab(x1) invariants have rank {invariants.rank}, expected {n}")
        return False

    powers = [alg.reduce(alg.x(1) ** j) for j in range(n)]
    columns = [alg.coordinates(p) for p in powers]
    if _rank(columns, alg.domain) != n:
        return False
    if any(_solve_in_span(invariants.inclusion, c, alg.domain) is None for c in columns):
        return False

    y = spectral.generator
    for i in range(n):
        for j in range(n):
            image = spectral.coordinates(y ** (i + j))
            mapped = sum(
                (powers[k].mul_ground(c) for k, c in enumerate(image) if c), alg.ring.zero
            )
            if alg.reduce(mapped) != alg.mul(powers[i], powers[j]):
                return False
    return True


def _splitting_matches(rebuilt: SplittingAlgebra, alg: SplittingAlgebra) -> bool:
    n = alg.n
    generators = [alg.transposition(i, i + 1) for i in range(1, n)]

    for tau in alg.permutations:
        images = [alg.reduce(alg.act(tau, b)) for b in rebuilt.basis]
        if _rank([alg.coordinates(f) for f in images], alg.domain) != alg.rank:
            continue

        def mapped(f):
            coordinates = rebuilt.coordinates(f)
            return alg.reduce(
                sum((images[k].mul_ground(c) for k, c in enumerate(coordinates) if c), alg.ring.zero)
            )

        multiplicative = all(
            mapped(a * b) == alg.mul(images[i], images[j])
            for i, a in enumerate(rebuilt.basis)
            for j, b in enumerate(rebuilt.basis)
        )
        equivariant = multiplicative and all(
            mapped(rebuilt.act(sigma, b)) == alg.act(sigma, images[k])
            for sigma in generators
            for k, b in enumerate(rebuilt.basis)
        )
        if equivariant:
            return True
    return False


def roundtrip_check(n: int, coefficients: list) -> RoundtripReport:
    """
    Spectral -> cameral -> spectral -> cameral over the rationals.

    (i) The Stab(x_1)-invariants of the splitting algebra are B[x_1] = B[Y]/(p).
    (ii) The splitting algebra rebuilt from the characteristic polynomial of
    x_1 on those invariants is S_n-equivariantly isomorphic to the original.
    """

    spectral = spectral_from_coeffs(n, coefficients)
    alg = splitting_algebra(spectral)
    invariants = invariant_subalgebra(alg, alg.stabilizer(1))

    first = _spectral_matches(spectral, alg, invariants)

    x1 = alg.x(1)
    columns = []
    for v in invariants.inclusion:
        image = _solve_in_span(invariants.inclusion, alg.coordinates(x1 * alg.element(v)), alg.domain)
        if image is None:
            return RoundtripReport(first, False)
        columns.append(image)
    size = invariants.rank
    matrix = DomainMatrix(
        [[columns[j][i] for j in range(size)] for i in range(size)], (size, size), alg.domain
    )
    charpoly = matrix.charpoly()
    rebuilt_coefficients = [alg.domain.to_sympy(c) for c in reversed(charpoly[1:])]

    second = False
    if len(rebuilt_coefficients) == n:
        rebuilt = splitting_algebra(spectral_from_coeffs(n, rebuilt_coefficients))
        second = _splitting_matches(rebuilt, alg)

    logger.debug(f"roundtrip n={n}: spectral {first}, splitting {second}")
    return RoundtripReport(first, second)


def charpoly_condition(alg: SplittingAlgebra, f: PolyElement) -> bool:
    """
    det(Y - f | spectral algebra) equals prod_k (Y - f(x_k)) in the splitting algebra.

    Args:
        alg: Splitting algebra.
        f: Element of the spectral algebra, a polynomial in Y.

    Returns:
        bool
    """

    spectral = alg.spectral
    charpoly = spectral.multiplication_matrix(f).charpoly()
    coefficients = spectral.coordinates(f)

    product_poly = [alg.ring.one]
    for k in range(1, alg.n + 1):
        root = alg.reduce(
            sum((alg.x(k) ** j * alg.ring.ground_new(c) for j, c in enumerate(coefficients)), alg.ring.zero)
        )
        shifted = [alg.ring.zero] + product_poly
        for j, c in enumerate(product_poly):
            shifted[j] = shifted[j] - root * c
        product_poly = [alg.reduce(c) for c in shifted]

    expected = list(reversed(charpoly))
    return all(
        product_poly[j] == alg.ring.ground_new(expected[j]) for j in range(alg.n + 1)
    )


class AntiInvariantReport(NamedTuple):
    transposition: tuple
    dim_anti_invariant: int
    dim_invariant: int
    generated: bool

    def to_json(self) -> dict:
        return {
            "transposition": list(self.transposition),
            "dim_anti_invariant": self.dim_anti_invariant,
            "dim_invariant": self.dim_invariant,
            "generator": f"x{self.transposition[0]} - x{self.transposition[1]}",
            "generated": self.generated,
        }


def anti_invariant_module(alg: SplittingAlgebra, i: int, j: int) -> AntiInvariantReport:
    """
    Whether {g : sigma g = -g} is generated by x_i - x_j over the sigma-invariants.
    """

    _require_field(alg)
    if alg.n < 2:
        raise PreconditionError("anti-invariants need n >= 2")

    domain = alg.domain
    sigma = alg.transposition(i, j)
    action = alg.action_matrix(sigma).to_Matrix()
    size = alg.rank

    def kernel(sign):
        rows = [
            [domain.from_sympy(action[r, c] + (sign if r == c else 0)) for c in range(size)]
            for r in range(size)
        ]
        basis = DomainMatrix(rows, (size, size), domain).nullspace().to_Matrix()
        return [[domain.from_sympy(basis[r, c]) for c in range(size)] for r in range(basis.rows)]

    invariants = kernel(-1)
    anti = kernel(1)
    delta = alg.x(i) - alg.x(j)
    products = [alg.coordinates(alg.element(v) * delta) for v in invariants]

    generated = _rank(products, domain) == len(anti) and all(
        _solve_in_span(anti, p, domain) is not None for p in products
    )
    return AntiInvariantReport((i, j), len(anti), len(invariants), generated)


def local_model(n: int) -> SplittingAlgebra:
    """
    Splitting algebra of Y^n over Q, the maximally ramified local cover.
    """

    return splitting_algebra(spectral_from_coeffs(n, [0] * n))


def _unipotent_power_series(alg: SplittingAlgebra, nilpotent: PolyElement, coefficient) -> PolyElement:
    total = alg.ring.zero
    power = alg.ring.one
    k = 0
    while True:
        k += 1
        power = alg.mul(power, nilpotent)
        if not power:
            return total
        total = total + power.mul_ground(alg.domain.convert(coefficient(k)))


def exp_nilpotent(alg: SplittingAlgebra, nilpotent: PolyElement) -> PolyElement:
    return alg.ring.one + _unipotent_power_series(alg, nilpotent, lambda k: Rational(1, factorial(k)))


def log_unipotent(alg: SplittingAlgebra, unit: PolyElement) -> PolyElement:
    return _unipotent_power_series(
        alg, alg.reduce(unit - 1), lambda k: Rational((-1) ** (k + 1), k)
    )


def unipotent_inverse(alg: SplittingAlgebra, unit: PolyElement) -> PolyElement:
    return alg.ring.one + _unipotent_power_series(alg, alg.reduce(unit - 1), lambda k: (-1) ** k)


def _require_unipotent(alg: SplittingAlgebra, unit: PolyElement) -> None:
    if alg.coordinates(unit)[0] != alg.domain.one:
        raise PreconditionError("value is not in 1 + nilradical")


def unit_coboundary(alg: SplittingAlgebra, unit: PolyElement) -> dict:
    """
    The multiplicative coboundary sigma -> sigma(v) v^-1 of a unipotent unit v.
    """

    _require_unipotent(alg, unit)
    inverse = unipotent_inverse(alg, unit)
    return {sigma: alg.mul(alg.act(sigma, unit), inverse) for sigma in alg.permutations}


class UnitTrivialization(NamedTuple):
    witness: PolyElement
    verified: bool

    def to_json(self) -> dict:
        return {"witness": str(self.witness.as_expr()), "verified": self.verified}


def unit_cocycle_trivialize(alg: SplittingAlgebra, cocycle: dict) -> UnitTrivialization:
    """
    Write a unipotent 1-cocycle u of S_n as u(sigma) = sigma(v) v^-1.

    The logarithm turns u into an additive cocycle with values in the nilradical,
    a Q-vector space, where H^1 vanishes; the rational witness is exponentiated back.

    Args:
        alg: The local model, the splitting algebra of Y^n over Q.
        cocycle: Map from every permutation to a unit in 1 + nilradical.

    Returns:
        UnitTrivialization

    Raises:
        NotACocycleError: u(sigma tau) != u(sigma) sigma(u(tau)) for some pair.
    """

    if any(alg.spectral.coefficients):
        raise PreconditionError("unit trivialization runs on the local model Y^n only")
    values = {tuple(sigma): alg.reduce(alg.parse(u)) for sigma, u in cocycle.items()}
    if set(values) != set(alg.permutations):
        raise PreconditionError("cocycle must be given on every permutation")
    for u in values.values():
        _require_unipotent(alg, u)

    for s in alg.permutations:
        for t in alg.permutations:
            if values[_compose(s, t)] != alg.mul(values[s], alg.act(s, values[t])):
                raise NotACocycleError(f"unit cocycle condition fails at ({s}, {t})")

    group = alg.symmetric_group()
    actions = [
        alg.action_matrix(sigma).to_Matrix().tolist()
        for sigma in alg.permutations
    ]
    module = GModule(group, actions, "rational")
    logs = {
        (a,): [alg.domain.to_sympy(x) for x in alg.coordinates(log_unipotent(alg, values[sigma]))]
        for a, sigma in enumerate(alg.permutations)
        if a != group.identity
    }
    decision = is_coboundary(Cochain(module, 1, logs))
    if not decision.is_coboundary:
        raise InternalConsistencyError("rational H^1 of S_n did not vanish")

    phi = list(decision.witness.value(()))
    phi[0] = 0
    witness = exp_nilpotent(alg, alg.element([alg.domain.from_sympy(sympify(x)) for x in phi]))

    verified = all(
        alg.mul(values[sigma], witness) == alg.act(sigma, witness) for sigma in alg.permutations
    )
    if not verified:
        raise InternalConsistencyError("exponentiated witness does not trivialize the cocycle")
    return UnitTrivialization(witness, verified)
