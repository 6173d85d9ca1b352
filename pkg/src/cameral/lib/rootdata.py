import logging
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from sympy import Matrix, Poly, Rational, symbols

from .errors import (
    InternalConsistencyError,
    InvalidRootDatumError,
    NotFiniteTypeError,
    PreconditionError,
    UnsupportedFamilyError,
)
from .intmat import (
    IntMatrix,
    Vector,
    content,
    dot,
    identity,
    is_zero,
    mat_mul,
    mat_sub,
    mat_vec,
    reflection_matrix,
    unit_vector,
    vec_add,
    vec_neg,
    zero_vector,
)

logger = logging.getLogger(__name__)

# Constants
"""
Default bound on the number of Weyl group elements (and roots) enumerated before giving up.
"""
DEFAULT_MAX_ENUM: int = 10**6

"""
Families accepted by build_classical, keyed by type tag.
"""
CLASSICAL_FAMILIES: tuple = ("GL", "SL", "PGL", "Sp", "SO")


@dataclass(frozen=True)
class WeylElement:
    """
    An element of W. Identity is the cocharacter matrix; the word is a witness only.
    """

    matrix: IntMatrix
    word: tuple = field(compare=False)
    char_matrix: IntMatrix = field(compare=False, repr=False)

    @property
    def length(self) -> int:
        return len(self.word)

    def act_on_root(self, root: Vector) -> Vector:
        return mat_vec(self.char_matrix, root)

    def act_on_coroot(self, coroot: Vector) -> Vector:
        return mat_vec(self.matrix, coroot)

    def to_json(self) -> dict:
        return {"word": list(self.word), "matrix": [list(r) for r in self.matrix]}


class RootDatum:
    """
    A root datum with roots in character coordinates and coroots in the dual
    cocharacter coordinates, so that the pairing is the coordinate dot product.
    """

    def __init__(
        self,
        rank: int,
        simple_roots: list,
        simple_coroots: list,
        type_tag: str = "custom",
        n: int = None,
        max_enum: int = DEFAULT_MAX_ENUM,
    ):
        """
        Args:
            rank: Rank of the character lattice.
            simple_roots: One integer vector of length `rank` per simple root.
            simple_coroots: One integer vector of length `rank` per simple coroot.
            type_tag: Constructor label (GL/SL/PGL/Sp/SO/custom).
            n: Family parameter when built by build_classical.
            max_enum: Bound on roots and Weyl elements enumerated.
        """

        if rank is None or rank < 1:
            raise InvalidRootDatumError(f"rank must be a positive integer, got {rank}")
        if len(simple_roots) != len(simple_coroots):
            raise InvalidRootDatumError(
                f"{len(simple_roots)} simple roots but {len(simple_coroots)} simple coroots"
            )
        for vector in list(simple_roots) + list(simple_coroots):
            if len(vector) != rank:
                raise InvalidRootDatumError(
                    f"vector {list(vector)} does not have length {rank}"
                )

        self._rank = rank
        self._simple_roots = tuple(tuple(int(a) for a in v) for v in simple_roots)
        self._simple_coroots = tuple(tuple(int(a) for a in v) for v in simple_coroots)
        self._type_tag = type_tag
        self._n = n
        self._max_enum = max_enum
        self._weyl_group = None

        self._validate_cartan()

    @property
    def rank(self) -> int:
        return self._rank

    @property
    def simple_roots(self) -> tuple:
        return self._simple_roots

    @property
    def simple_coroots(self) -> tuple:
        return self._simple_coroots

    @property
    def type_tag(self) -> str:
        return self._type_tag

    @property
    def n(self) -> int:
        return self._n

    @property
    def max_enum(self) -> int:
        return self._max_enum

    @property
    def semisimple_rank(self) -> int:
        return len(self._simple_roots)

    @property
    def central_rank(self) -> int:
        return self._rank - self.semisimple_rank

    @property
    def label(self) -> str:
        if self._n is None:
            return self._type_tag
        return f"{self._type_tag}({self._n})"

    def __repr__(self):
        return f"RootDatum({self.label}, rank={self._rank})"

    @cached_property
    def cartan_matrix(self) -> IntMatrix:
        """
        Entry (i, j) is <alpha_i, coroot_j>.
        """

        return tuple(
            tuple(dot(a, c) for c in self._simple_coroots) for a in self._simple_roots
        )

    def _validate_cartan(self) -> None:
        cartan = self.cartan_matrix
        r = self.semisimple_rank

        for i in range(r):
            if cartan[i][i] != 2:
                raise InvalidRootDatumError(
                    f"<alpha_{i}, coroot_{i}> = {cartan[i][i]}, expected 2"
                )
            for j in range(r):
                if i == j:
                    continue
                if cartan[i][j] > 0:
                    raise InvalidRootDatumError(
                        f"off-diagonal Cartan entry ({i},{j}) = {cartan[i][j]} is positive"
                    )
                if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                    raise InvalidRootDatumError(
                        f"Cartan entries ({i},{j}) and ({j},{i}) are not both zero"
                    )

        symmetrized = self._symmetrize(cartan)
        for k in range(1, r + 1):
            minor = symmetrized[:k, :k].det()
            if minor <= 0:
                raise InvalidRootDatumError(
                    f"Cartan matrix is not of finite type (leading minor {k} is {minor})"
                )

    @staticmethod
    def _symmetrize(cartan: IntMatrix) -> Matrix:
        """
        Return D*A with D positive diagonal making it symmetric.
        """

        r = len(cartan)
        scale = [None] * r
        for start in range(r):
            if scale[start] is not None:
                continue
            scale[start] = Rational(1)
            pending = [start]
            while pending:
                i = pending.pop()
                for j in range(r):
                    if i == j or cartan[i][j] == 0:
                        continue
                    value = scale[i] * cartan[i][j] / cartan[j][i]
                    if scale[j] is None:
                        scale[j] = value
                        pending.append(j)
                    elif scale[j] != value:
                        raise InvalidRootDatumError("Cartan matrix is not symmetrizable")

        return Matrix(r, r, lambda i, j: scale[i] * cartan[i][j])

    @cached_property
    def _root_system(self) -> dict:
        """
        Closure of the simple roots under the simple reflections.
        Maps root vector -> (simple-root coefficients, coroot vector).
        """

        r = self.semisimple_rank
        cartan = self.cartan_matrix
        found = {}
        queue = deque()

        for i in range(r):
            record = (unit_vector(r, i), self._simple_roots[i], self._simple_coroots[i])
            found[record[1]] = record
            queue.append(record)

        while queue:
            coeffs, root, coroot = queue.popleft()
            for i in range(r):
                pairing = sum(coeffs[j] * cartan[j][i] for j in range(r))
                if pairing == 0:
                    continue
                new_coeffs = tuple(
                    c - pairing if k == i else c for k, c in enumerate(coeffs)
                )
                new_root = tuple(
                    a - pairing * b for a, b in zip(root, self._simple_roots[i])
                )
                coroot_pairing = dot(self._simple_roots[i], coroot)
                new_coroot = tuple(
                    a - coroot_pairing * b
                    for a, b in zip(coroot, self._simple_coroots[i])
                )
                if new_root in found:
                    continue
                if len(found) >= self._max_enum:
                    raise NotFiniteTypeError(
                        f"more than {self._max_enum} roots; datum is not of finite type"
                    )
                record = (new_coeffs, new_root, new_coroot)
                found[new_root] = record
                queue.append(record)

        logger.debug(f"{self.label}: {len(found)} roots")
        return {root: (coeffs, coroot) for coeffs, root, coroot in found.values()}

    @cached_property
    def positive_roots(self) -> tuple:
        """
        Positive roots ordered by height, then by simple-root coefficients.
        """

        positives = [
            (sum(coeffs), coeffs, root)
            for root, (coeffs, _) in self._root_system.items()
            if all(c >= 0 for c in coeffs)
        ]
        return tuple(root for _, _, root in sorted(positives))

    @cached_property
    def _positive_set(self) -> frozenset:
        return frozenset(self.positive_roots)

    def is_root(self, root: Vector) -> bool:
        return tuple(root) in self._root_system

    def is_positive(self, root: Vector) -> bool:
        return tuple(root) in self._positive_set

    def is_negative(self, root: Vector) -> bool:
        return vec_neg(tuple(root)) in self._positive_set

    def coroot(self, root: Vector) -> Vector:
        root = tuple(root)
        if root not in self._root_system:
            raise PreconditionError(f"{list(root)} is not a root of {self.label}")
        return self._root_system[root][1]

    def root_coefficients(self, root: Vector) -> Vector:
        return self._root_system[tuple(root)][0]

    @cached_property
    def all_coroots(self) -> frozenset:
        return frozenset(coroot for _, coroot in self._root_system.values())

    @cached_property
    def simple_reflections(self) -> tuple:
        """
        Pairs (cocharacter matrix, character matrix) of the simple reflections.
        """

        return tuple(
            (reflection_matrix(a, c), reflection_matrix(c, a))
            for a, c in zip(self._simple_roots, self._simple_coroots)
        )

    def element_from_word(self, word) -> WeylElement:
        matrix = identity(self._rank)
        char_matrix = identity(self._rank)
        for i in word:
            cochar_step, char_step = self.simple_reflections[i]
            matrix = mat_mul(matrix, cochar_step)
            char_matrix = mat_mul(char_matrix, char_step)
        return WeylElement(matrix=matrix, word=tuple(word), char_matrix=char_matrix)

    def weyl_group(self) -> "WeylGroup":
        if self._weyl_group is None:
            self._weyl_group = WeylGroup(self)
        return self._weyl_group

    def to_json(self) -> dict:
        return {
            "rank": self._rank,
            "simple_roots": [list(v) for v in self._simple_roots],
            "simple_coroots": [list(v) for v in self._simple_coroots],
            "type_tag": self._type_tag,
            "n": self._n,
        }


class WeylGroup:
    """
    The enumerated Weyl group of a datum with product and inverse by matrix lookup.
    """

    def __init__(self, datum: RootDatum):
        self._datum = datum
        self._elements = weyl_elements(datum, datum.max_enum)
        self._index = {w.matrix: k for k, w in enumerate(self._elements)}
        self._products = {}

    @property
    def datum(self) -> RootDatum:
        return self._datum

    @property
    def elements(self) -> list:
        return self._elements

    @property
    def order(self) -> int:
        return len(self._elements)

    @property
    def identity(self) -> WeylElement:
        return self._elements[0]

    def index(self, w: WeylElement) -> int:
        return self._index[w.matrix]

    def lookup(self, matrix: IntMatrix) -> WeylElement:
        if matrix not in self._index:
            raise InternalConsistencyError("matrix is not an element of the Weyl group")
        return self._elements[self._index[matrix]]

    def product(self, w1: WeylElement, w2: WeylElement) -> WeylElement:
        key = (w1.matrix, w2.matrix)
        if key not in self._products:
            self._products[key] = self.lookup(mat_mul(w1.matrix, w2.matrix))
        return self._products[key]

    def inverse(self, w: WeylElement) -> WeylElement:
        return self.lookup(self._datum.element_from_word(reversed(w.word)).matrix)

    def simple_reflection(self, i: int) -> WeylElement:
        return self.lookup(self._datum.simple_reflections[i][0])

    def longest_element(self) -> WeylElement:
        return max(self._elements, key=lambda w: w.length)

    def multiplication_table(self) -> list:
        table = []
        for a in self._elements:
            table.append([self._index[mat_mul(a.matrix, b.matrix)] for b in self._elements])
        return table


def build_classical(type_tag: str, n: int, max_enum: int = DEFAULT_MAX_ENUM) -> RootDatum:
    """
    Build the root datum of a classical group in its standard lattices.

    Args:
        type_tag: One of GL, SL, PGL, Sp, SO.
        n: Size of the defining representation (Sp(4), SO(5), GL(3), ...).
        max_enum: Enumeration bound handed to the datum.

    Returns:
        RootDatum
    """

    if type_tag not in CLASSICAL_FAMILIES:
        raise UnsupportedFamilyError(
            f"unsupported family {type_tag}; expected one of {', '.join(CLASSICAL_FAMILIES)}"
        )

    if type_tag == "GL":
        if n < 1:
            raise UnsupportedFamilyError("GL(n) needs n >= 1")
        differences = [
            tuple(1 if k == i else -1 if k == i + 1 else 0 for k in range(n))
            for i in range(n - 1)
        ]
        return RootDatum(n, differences, differences, "GL", n, max_enum)

    if type_tag in ("SL", "PGL"):
        if n < 2:
            raise UnsupportedFamilyError(f"{type_tag}(n) needs n >= 2")
        r = n - 1
        cartan = [
            [2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(r)]
            for i in range(r)
        ]
        units = [unit_vector(r, i) for i in range(r)]
        if type_tag == "SL":
            roots = [tuple(cartan[j][i] for i in range(r)) for j in range(r)]
            return RootDatum(r, roots, units, "SL", n, max_enum)
        coroots = [tuple(cartan[i][j] for i in range(r)) for j in range(r)]
        return RootDatum(r, units, coroots, "PGL", n, max_enum)

    m = n // 2
    differences = [
        tuple(1 if k == i else -1 if k == i + 1 else 0 for k in range(m))
        for i in range(m - 1)
    ]

    if type_tag == "Sp":
        if n < 2 or n % 2:
            raise UnsupportedFamilyError("Sp(n) needs an even n >= 2")
        last = unit_vector(m, m - 1)
        return RootDatum(
            m,
            differences + [tuple(2 * a for a in last)],
            differences + [last],
            "Sp",
            n,
            max_enum,
        )

    if n < 3:
        raise UnsupportedFamilyError("SO(n) needs n >= 3")
    if n % 2:
        last = unit_vector(m, m - 1)
        return RootDatum(
            m,
            differences + [last],
            differences + [tuple(2 * a for a in last)],
            "SO",
            n,
            max_enum,
        )
    last = tuple(1 if k >= m - 2 else 0 for k in range(m))
    return RootDatum(m, differences + [last], differences + [last], "SO", n, max_enum)


def datum_from_cartan(cartan: list, max_enum: int = DEFAULT_MAX_ENUM) -> RootDatum:
    """
    Simply connected datum of a Cartan matrix: coroots are the unit vectors.
    """

    r = len(cartan)
    roots = [tuple(cartan[j][i] for i in range(r)) for j in range(r)]
    return RootDatum(r, roots, [unit_vector(r, i) for i in range(r)], "custom", None, max_enum)


def datum_from_json(content: dict, max_enum: int = DEFAULT_MAX_ENUM) -> RootDatum:
    """
    Datum from its JSON form. A classical type tag must describe the built-in lattices,
    since the matrix models are keyed by it.
    """

    try:
        datum = RootDatum(
            rank=int(content["rank"]),
            simple_roots=content["simple_roots"],
            simple_coroots=content["simple_coroots"],
            type_tag=content.get("type_tag") or "custom",
            n=content.get("n"),
            max_enum=max_enum,
        )
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidRootDatumError(f"malformed root datum JSON: {e}")

    if datum.type_tag in CLASSICAL_FAMILIES:
        if datum.n is None:
            raise InvalidRootDatumError(f"type {datum.type_tag} needs n")
        builtin = build_classical(datum.type_tag, datum.n, max_enum)
        if (builtin.simple_roots, builtin.simple_coroots) != (datum.simple_roots, datum.simple_coroots):
            raise InvalidRootDatumError(
                f"roots and coroots do not match the built-in {builtin.label}; use type_tag custom"
            )
    return datum


def datum_to_json(datum: RootDatum) -> dict:
    return datum.to_json()


def positive_roots(datum: RootDatum) -> list:
    return list(datum.positive_roots)


def weyl_elements(datum: RootDatum, max_enum: int = DEFAULT_MAX_ENUM) -> list:
    """
    Breadth-first enumeration of W from the identity by right multiplication
    with simple reflections. The first word reaching an element is reduced.
    """

    start = datum.element_from_word(())
    seen = {start.matrix: start}
    ordered = [start]
    queue = deque([start])

    while queue:
        w = queue.popleft()
        for i, (cochar_step, char_step) in enumerate(datum.simple_reflections):
            matrix = mat_mul(w.matrix, cochar_step)
            if matrix in seen:
                continue
            if len(seen) >= max_enum:
                raise NotFiniteTypeError(
                    f"Weyl group of {datum.label} exceeds {max_enum} elements; not of finite type"
                )
            element = WeylElement(
                matrix=matrix,
                word=w.word + (i,),
                char_matrix=mat_mul(w.char_matrix, char_step),
            )
            seen[matrix] = element
            ordered.append(element)
            queue.append(element)

    logger.debug(f"{datum.label}: |W| = {len(ordered)}")
    return ordered


def inversion_set(datum: RootDatum, w: WeylElement) -> frozenset:
    return frozenset(
        alpha for alpha in datum.positive_roots if datum.is_negative(w.act_on_root(alpha))
    )


def reduced_words(datum: RootDatum, w: WeylElement) -> list:
    """
    Every reduced word of w, by recursion on right descents.
    """

    if w.length == 0:
        return [()]

    group = datum.weyl_group()
    words = []
    for i, alpha in enumerate(datum.simple_roots):
        if datum.is_negative(w.act_on_root(alpha)):
            shorter = group.product(w, group.simple_reflection(i))
            words.extend(word + (i,) for word in reduced_words(datum, shorter))
    return sorted(words)


class CorootDivisor:
    """
    Formal sum of coroot-weighted ramification divisors, keyed by positive roots.

    A term arriving at a negative root -beta is moved to beta with its vector
    unchanged, since D^{-beta} = D^beta. The sign of (-beta)-check is already
    carried by the vector.
    """

    def __init__(self, datum: RootDatum, terms: dict = None):
        self._datum = datum
        self._terms = {}
        for root, vector in (terms or {}).items():
            self.add_term(root, vector)

    @property
    def datum(self) -> RootDatum:
        return self._datum

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def add_term(self, root: Vector, vector: Vector) -> None:
        root = tuple(root)
        if self._datum.is_negative(root):
            root = vec_neg(root)
        elif not self._datum.is_positive(root):
            raise PreconditionError(f"{list(root)} is not a root of {self._datum.label}")

        total = vec_add(self._terms.get(root, zero_vector(self._datum.rank)), vector)
        if is_zero(total):
            self._terms.pop(root, None)
        else:
            self._terms[root] = total

    def __add__(self, other: "CorootDivisor") -> "CorootDivisor":
        result = CorootDivisor(self._datum, self._terms)
        for root, vector in other.terms.items():
            result.add_term(root, vector)
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, CorootDivisor):
            return NotImplemented
        return self._terms == other.terms

    def __repr__(self):
        return f"CorootDivisor({self._terms!r})"

    def is_zero(self) -> bool:
        return not self._terms

    def to_json(self) -> list:
        return [
            {"root": list(root), "vector": list(vector)}
            for root, vector in sorted(self._terms.items())
        ]


def ram_divisor(datum: RootDatum, w: WeylElement) -> CorootDivisor:
    return CorootDivisor(
        datum, {alpha: datum.coroot(alpha) for alpha in inversion_set(datum, w)}
    )


def twisted_pullback(datum: RootDatum, w: WeylElement, divisor: CorootDivisor) -> CorootDivisor:
    """
    Pull a divisor back along w: the term (alpha, v) becomes (w^-1 alpha, w^-1 v).
    """

    w_inv = datum.weyl_group().inverse(w)
    result = CorootDivisor(datum)
    for root, vector in divisor.terms.items():
        result.add_term(w_inv.act_on_root(root), w_inv.act_on_coroot(vector))
    return result


def check_ram_cocycle(datum: RootDatum, w1: WeylElement, w2: WeylElement) -> bool:
    group = datum.weyl_group()
    left = ram_divisor(datum, group.product(w1, w2))
    right = twisted_pullback(datum, w2, ram_divisor(datum, w1)) + ram_divisor(datum, w2)
    return left == right


def coroot_primitive(datum: RootDatum, coroot: Vector) -> bool:
    coroot = tuple(coroot)
    if is_zero(coroot):
        raise PreconditionError("the zero vector is not a coroot")
    if coroot not in datum.all_coroots:
        raise PreconditionError(f"{list(coroot)} is not a coroot of {datum.label}")
    return content(coroot) == 1


def has_nonprimitive_coroot(datum: RootDatum) -> bool:
    return any(not coroot_primitive(datum, c) for c in sorted(datum.all_coroots))


def dynkin_components(datum: RootDatum) -> list:
    """
    Simple-root indices of the connected components of the Dynkin diagram.
    """

    cartan = datum.cartan_matrix
    r = len(cartan)
    unseen, components = set(range(r)), []
    while unseen:
        start = min(unseen)
        queue, component = deque([start]), {start}
        while queue:
            i = queue.popleft()
            for j in range(r):
                if j not in component and cartan[i][j] != 0:
                    component.add(j)
                    queue.append(j)
        unseen -= component
        components.append(sorted(component))
    return components


def _b_type_short_root(datum: RootDatum, component: list):
    """
    The short end node of a B_n component (A_1 counts as B_1), or None for other types.
    """

    cartan = datum.cartan_matrix
    if len(component) == 1:
        return component[0]

    # <alpha_long, coroot_short> = -2 across a double bond
    short = [j for i in component for j in component if cartan[i][j] == -2]
    if len(short) != 1 or any(cartan[i][j] == -3 for i in component for j in component):
        return None
    j = short[0]
    neighbours = [i for i in component if i != j and cartan[i][j] != 0]
    return j if len(neighbours) == 1 else None


def so_odd_factor(datum: RootDatum) -> bool:
    """
    Whether some simple factor is SO(2n+1): a B_n component (PGL(2) = SO(3) included)
    whose short simple coroot is divisible in X_*.
    """

    for component in dynkin_components(datum):
        j = _b_type_short_root(datum, component)
        if j is not None and content(datum.simple_coroots[j]) > 1:
            return True
    return False


def admissible_triples(datum: RootDatum) -> list:
    """
    All (w, i, j) with w(alpha_i) = alpha_j.
    """

    position = {alpha: j for j, alpha in enumerate(datum.simple_roots)}
    triples = []
    for w in datum.weyl_group().elements:
        for i, alpha in enumerate(datum.simple_roots):
            image = w.act_on_root(alpha)
            if image in position:
                triples.append((w, i, position[image]))
    return triples


def rtriviality_shadow(datum: RootDatum, w: WeylElement, i: int, j: int) -> bool:
    if w.act_on_root(datum.simple_roots[i]) != datum.simple_roots[j]:
        raise PreconditionError(
            f"w{list(w.word)} does not send simple root {i} to simple root {j}"
        )
    group = datum.weyl_group()
    divisor = ram_divisor(datum, w)
    return twisted_pullback(datum, group.simple_reflection(i), divisor) == divisor


def poincare_polynomial(datum: RootDatum) -> list:
    """
    Coefficients of sum_w t^l(w), constant term first.
    """

    counts = {}
    for w in datum.weyl_group().elements:
        counts[w.length] = counts.get(w.length, 0) + 1
    return [counts.get(k, 0) for k in range(max(counts) + 1)]


def degrees(datum: RootDatum) -> list:
    """
    Degrees of the basic invariants, read off the Poincare polynomial.

    The largest d with 1 + t + ... + t^(d-1) dividing the polynomial is always
    a degree, so dividing it out and repeating recovers all of them. Central
    directions contribute d = 1, which the polynomial cannot see.
    """

    t = symbols("t")
    remaining = Poly(list(reversed(poincare_polynomial(datum))), t)
    found = []

    while remaining.degree() > 0:
        for d in range(remaining.degree() + 1, 1, -1):
            quotient, rest = remaining.div(Poly([1] * d, t))
            if rest.is_zero:
                found.append(d)
                remaining = quotient
                break
        else:
            raise InternalConsistencyError(
                f"Poincare polynomial of {datum.label} does not factor into q-integers"
            )

    if remaining.as_expr() != 1:
        raise InternalConsistencyError(f"leftover factor {remaining.as_expr()}")

    result = [1] * datum.central_rank + sorted(found)

    product = 1
    for d in result:
        product *= d
    if product != datum.weyl_group().order or sum(d - 1 for d in result) != len(
        datum.positive_roots
    ):
        raise InternalConsistencyError(f"degrees {result} fail the order checks")
    return result


def is_reflection(w: WeylElement) -> bool:
    """
    A reflection fixes a hyperplane: w^2 = 1 and w - 1 has rank one.
    """

    rank = len(w.matrix)
    if w.matrix == identity(rank) or mat_mul(w.matrix, w.matrix) != identity(rank):
        return False
    return Matrix(mat_sub(w.matrix, identity(rank))).rank() == 1


def _closure(rank: int, generators: list) -> frozenset:
    start = identity(rank)
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for g in generators:
            product = mat_mul(current, g)
            if product not in seen:
                seen.add(product)
                queue.append(product)
    return frozenset(seen)


def _require_subgroup(subgroup: list) -> frozenset:
    matrices = frozenset(w.matrix for w in subgroup)
    for a in matrices:
        for b in matrices:
            if mat_mul(a, b) not in matrices:
                raise PreconditionError("subgroup is not closed under products")
    return matrices


def cameral_stabilizer_ok(datum: RootDatum, subgroup: list) -> bool:
    """
    True when the subgroup is generated by the reflections it contains.
    """

    matrices = _require_subgroup(subgroup)
    reflections = [w.matrix for w in subgroup if is_reflection(w)]
    return _closure(datum.rank, reflections) == matrices


def is_parabolic_conjugate(datum: RootDatum, subgroup: list) -> bool:
    """
    Stricter reading: the subgroup is W-conjugate to a standard parabolic subgroup.
    """

    matrices = _require_subgroup(subgroup)
    group = datum.weyl_group()
    simple = [datum.simple_reflections[i][0] for i in range(datum.semisimple_rank)]

    for size in range(datum.semisimple_rank + 1):
        for subset in combinations(range(datum.semisimple_rank), size):
            parabolic = _closure(datum.rank, [simple[i] for i in subset])
            if len(parabolic) != len(matrices):
                continue
            for g in group.elements:
                g_inv = group.inverse(g).matrix
                conjugate = frozenset(
                    mat_mul(mat_mul(g.matrix, h), g_inv) for h in matrices
                )
                if conjugate == parabolic:
                    return True
    return False
